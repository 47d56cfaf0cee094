#include "homhom/homogeneity.hpp"

#include <algorithm>

#include "homhom/configurations.hpp"
#include "homhom/embedding.hpp"

namespace homhom {

bool is_valid_partial_hom(const OrientedGraph& g, const PartialHom& h) {
    if (h.domain.size() != h.image.size()) return false;
    for (size_t i = 0; i < h.domain.size(); ++i) {
        Vertex a = h.domain[i], b = h.image[i];
        if (a < 0 || a >= g.order() || b < 0 || b >= g.order()) return false;
        if (i + 1 < h.domain.size() && h.domain[i] >= h.domain[i + 1]) return false;
    }
    for (size_t i = 0; i < h.domain.size(); ++i)
        for (size_t j = 0; j < h.domain.size(); ++j) {
            if (i == j) continue;
            if (g.arc(h.domain[i], h.domain[j]) && !g.arc(h.image[i], h.image[j])) return false;
        }
    return true;
}

VertexSet extension_candidates(const OrientedGraph& g, const PartialHom& h, Vertex v) {
    VertexSet cand(g.order());
    cand.fill();
    for (size_t i = 0; i < h.domain.size(); ++i) {
        Vertex a = h.domain[i], b = h.image[i];
        if (g.arc(a, v)) cand &= g.out(b);
        if (g.arc(v, a)) cand &= g.in(b);
    }
    return cand;
}

std::optional<Vertex> extend_one_point(const OrientedGraph& g, const PartialHom& h, Vertex v) {
    if (!is_valid_partial_hom(g, h)) fail(Errc::invalid_partial_hom, "not a local homomorphism");
    if (std::binary_search(h.domain.begin(), h.domain.end(), v))
        fail(Errc::invalid_partial_hom, "vertex already in the domain");
    VertexSet cand = extension_candidates(g, h, v);
    Vertex w = cand.first();
    if (w < 0) return std::nullopt;
    return w;
}

std::vector<Vertex> Witness::image_set() const {
    std::vector<Vertex> b = image;
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

bool verify_witness(const OrientedGraph& g, const Witness& w) {
    if (!is_valid_partial_hom(g, w.hom())) return false;
    if (w.v < 0 || w.v >= g.order()) return false;
    if (std::binary_search(w.domain.begin(), w.domain.end(), w.v)) return false;
    return extension_candidates(g, w.hom(), w.v).none();
}

namespace {

// Shared machinery: enumerates, for a fixed v, domains over the sorted
// neighbourhood of v in lexicographic subset order and image maps in
// lexicographic order, stopping at the first inextensible local hom.
struct WitnessSearch {
    const OrientedGraph& g;
    Vertex v = -1;
    std::vector<Vertex> nv;
    std::vector<Vertex> dom, img;
    int want_size = 0; // 0: any size (pure lex); else exactly this size

    explicit WitnessSearch(const OrientedGraph& graph) : g(graph) {}

    bool maps(size_t i, std::optional<Witness>& out) {
        if (i == dom.size()) {
            PartialHom h{dom, img};
            if (extension_candidates(g, h, v).none()) {
                out = Witness{dom, img, v};
                return true;
            }
            return false;
        }
        Vertex a = dom[i];
        for (Vertex w = 0; w < g.order(); ++w) {
            bool ok = true;
            for (size_t j = 0; j < i && ok; ++j) {
                if (g.arc(dom[j], a) && !g.arc(img[j], w)) ok = false;
                if (g.arc(a, dom[j]) && !g.arc(w, img[j])) ok = false;
            }
            if (!ok) continue;
            img.push_back(w);
            if (maps(i + 1, out)) return true;
            img.pop_back();
        }
        return false;
    }

    bool domains(size_t start, std::optional<Witness>& out) {
        for (size_t i = start; i < nv.size(); ++i) {
            if (want_size && (int)dom.size() >= want_size) break;
            dom.push_back(nv[i]);
            if (!want_size || (int)dom.size() == want_size) {
                img.clear();
                if (maps(0, out)) return true;
            }
            if (domains(i + 1, out)) return true;
            dom.pop_back();
        }
        return false;
    }

    bool at(Vertex vertex, std::optional<Witness>& out) {
        v = vertex;
        nv = g.neighbours(v).to_vector();
        dom.clear();
        return domains(0, out);
    }
};

std::optional<Witness> find_witness_impl(const OrientedGraph& g) {
    std::optional<Witness> out;
    WitnessSearch s(g);
    for (Vertex v = 0; v < g.order(); ++v)
        if (s.at(v, out)) return out;
    return std::nullopt;
}

std::optional<Witness> find_minimal_witness_impl(const OrientedGraph& g) {
    std::optional<Witness> out;
    int max_deg = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        max_deg = std::max(max_deg, g.neighbours(v).count());
    for (int size = 1; size <= max_deg; ++size) {
        WitnessSearch s(g);
        s.want_size = size;
        for (Vertex v = 0; v < g.order(); ++v)
            if (s.at(v, out)) return out;
    }
    return std::nullopt;
}

void check_general_cap(const OrientedGraph& g, const SizeCaps& caps, const char* what) {
    if (g.order() > caps.general)
        fail(Errc::size_cap_exceeded,
             std::string(what) + " capped at order " + std::to_string(caps.general));
}

} // namespace

std::optional<Witness> find_witness(const OrientedGraph& g, const SizeCaps& caps) {
    check_general_cap(g, caps, "witness search");
    return find_witness_impl(g);
}

std::optional<Witness> find_minimal_witness(const OrientedGraph& g, const SizeCaps& caps) {
    check_general_cap(g, caps, "witness search");
    return find_minimal_witness_impl(g);
}

bool is_hh(const OrientedGraph& g, const SizeCaps& caps) {
    check_general_cap(g, caps, "homomorphism homogeneity");
    return !find_witness_impl(g).has_value();
}

namespace {

// Enumerates partial isomorphisms (domains over all vertex subsets) and looks
// for one that is stuck: some v outside the domain with no image choice
// preserving arcs and non-arcs in both directions.
struct HomogSearch {
    const OrientedGraph& g;
    std::vector<Vertex> dom, img;
    std::vector<bool> used;

    explicit HomogSearch(const OrientedGraph& graph)
        : g(graph), used(graph.order(), false) {}

    // can the current partial iso absorb v -> w (arcs and non-arcs preserved)?
    bool iso_compatible(Vertex v, Vertex w) const {
        if (used[w]) return false;
        for (size_t j = 0; j < dom.size(); ++j) {
            if (g.arc(dom[j], v) != g.arc(img[j], w)) return false;
            if (g.arc(v, dom[j]) != g.arc(w, img[j])) return false;
        }
        return true;
    }

    bool stuck() const {
        for (Vertex v = 0; v < g.order(); ++v) {
            if (std::binary_search(dom.begin(), dom.end(), v)) continue;
            bool extendable = false;
            for (Vertex w = 0; w < g.order() && !extendable; ++w)
                extendable = iso_compatible(v, w);
            if (!extendable) return true;
        }
        return false;
    }

    // domains in lexicographic subset order; each added vertex branches over
    // its compatible images, so every partial iso is visited exactly once
    bool grow(size_t start) {
        for (size_t i = start; i < (size_t)g.order(); ++i) {
            dom.push_back((Vertex)i);
            Vertex a = dom.back();
            dom.pop_back();
            for (Vertex w = 0; w < g.order(); ++w) {
                if (!iso_compatible(a, w)) continue;
                dom.push_back(a);
                img.push_back(w);
                used[w] = true;
                if (stuck() || grow(i + 1)) return true;
                used[w] = false;
                img.pop_back();
                dom.pop_back();
            }
        }
        return false;
    }
};

} // namespace

bool is_homogeneous(const OrientedGraph& g, const SizeCaps& caps) {
    check_general_cap(g, caps, "homogeneity");
    HomogSearch s(g);
    return !s.grow(0);
}

bool is_ph_up_to(const OrientedGraph& g, int nmax, const SizeCaps& caps) {
    if (nmax < 1) fail(Errc::bad_argument, "nmax must be >= 1");
    for (int k = 1; k <= nmax; ++k) {
        OrientedGraph p = direct_power(g, k, caps);
        if (find_witness_impl(p).has_value()) return false;
    }
    return true;
}

std::optional<KRefutation> refute_ph_via_K(const OrientedGraph& g) {
    auto emb = find_induced_embedding(g, get_config(ConfigName::K));
    if (!emb) return std::nullopt;
    Vertex a = (*emb)[0], b = (*emb)[1], c = (*emb)[2], d = (*emb)[3];
    int n = g.order();
    return KRefutation{{a, b, c, d}, {b * n + d, c * n + a, d * n + b}};
}

bool verify_k_refutation(const OrientedGraph& g, const KRefutation& r, const SizeCaps& caps) {
    OrientedGraph sq = direct_power(g, 2, caps);
    auto [p1, p2, p3] = r.square_path;
    return sq.arc(p1, p2) && sq.arc(p2, p3) && !sq.adjacent(p1, p3);
}

OrientedGraph compute_core(const OrientedGraph& g, const SizeCaps& caps) {
    check_general_cap(g, caps, "core computation");
    int n = g.order();
    std::vector<Vertex> subset;
    // image sizes ascending, subsets lexicographically: the first subset that
    // admits an endomorphism into it induces the core
    std::optional<std::vector<Vertex>> hit;
    auto rec = [&](auto&& self, int start, int want) -> bool {
        if ((int)subset.size() == want) {
            OrientedGraph sub = induced_subgraph(g, subset);
            if (hom_exists(g, sub)) {
                hit = subset;
                return true;
            }
            return false;
        }
        for (int v = start; v < n; ++v) {
            if (n - v < want - (int)subset.size()) break;
            subset.push_back(v);
            if (self(self, v + 1, want)) return true;
            subset.pop_back();
        }
        return false;
    };
    for (int k = 1; k < n; ++k) {
        subset.clear();
        if (rec(rec, 0, k)) return induced_subgraph(g, *hit);
    }
    return g;
}

bool hom_equivalent(const OrientedGraph& g, const OrientedGraph& h, const SizeCaps& caps) {
    check_general_cap(g, caps, "homomorphism equivalence");
    check_general_cap(h, caps, "homomorphism equivalence");
    return hom_exists(g, h) && hom_exists(h, g);
}

MinWitnessReport check_minimal_witness(const OrientedGraph& t, const Multiplicity& m,
                                       int age_sample_order, const SizeCaps& caps) {
    if (!is_tournament(t)) fail(Errc::not_a_tournament, "blow-up base must be a tournament");
    OrientedGraph blown = blowup(t, m);
    check_general_cap(blown, caps, "witness search");
    auto w = find_minimal_witness_impl(blown);
    if (!w) fail(Errc::no_witness, "blow-up is homomorphism homogeneous");

    MinWitnessReport rep;
    rep.witness = *w;

    std::vector<Vertex> b = w->image_set();
    rep.h_bijective = b.size() == w->image.size();

    rep.image_tournament = true;
    for (size_t i = 0; i < b.size() && rep.image_tournament; ++i)
        for (size_t j = i + 1; j < b.size(); ++j)
            if (!blown.adjacent(b[i], b[j])) {
                rep.image_tournament = false;
                break;
            }

    rep.domain_all_adjacent = true;
    for (Vertex a : w->domain)
        if (!blown.adjacent(a, w->v)) rep.domain_all_adjacent = false;

    rep.domain_not_tournament = false;
    for (size_t i = 0; i < w->domain.size() && !rep.domain_not_tournament; ++i)
        for (size_t j = i + 1; j < w->domain.size(); ++j)
            if (!blown.adjacent(w->domain[i], w->domain[j])) {
                rep.domain_not_tournament = true;
                break;
            }

    if (rep.h_bijective) {
        // B plus v-hat with (a -> v) <=> (h(a) -> v-hat)
        int k = (int)b.size();
        OrientedGraph bhat(k + 1);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (i != j && blown.arc(b[i], b[j])) bhat.add_arc(i, j);
        auto index_of = [&](Vertex x) {
            return (int)(std::lower_bound(b.begin(), b.end(), x) - b.begin());
        };
        for (size_t i = 0; i < w->domain.size(); ++i) {
            Vertex a = w->domain[i], ha = w->image[i];
            if (blown.arc(a, w->v)) bhat.add_arc(index_of(ha), k);
            if (blown.arc(w->v, a)) bhat.add_arc(k, index_of(ha));
        }
        rep.bhat_in_age = bhat.order() <= age_sample_order && embeds(bhat, t);
        rep.bhat = std::move(bhat);
    }
    return rep;
}

} // namespace homhom
