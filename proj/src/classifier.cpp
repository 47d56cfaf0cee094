#include "homhom/classifier.hpp"

#include <stdexcept>

#include "homhom/census.hpp"
#include "homhom/configurations.hpp"
#include "homhom/embedding.hpp"

namespace homhom {

namespace {

std::string vertex_list(const std::vector<Vertex>& vs) {
    std::string s = "[";
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(vs[i]);
    }
    return s + "]";
}

} // namespace

HHLabel classify_hh_finite(const OrientedGraph& g, const SizeCaps& caps) {
    if (g.arc_count() == 0) return HHLabel{HHClass::empty_graph, g.order(), std::nullopt};

    Partition comps = weakly_connected_components(g);
    OrientedGraph c3 = cycle_c3();
    bool all_c3 = true;
    for (const auto& block : comps.blocks) {
        if (block.size() != 3 || !is_isomorphic(induced_subgraph(g, block), c3)) {
            all_c3 = false;
            break;
        }
    }
    if (all_c3) return HHLabel{HHClass::disjoint_c3, (int)comps.size(), std::nullopt};

    // not HH; pick the cheapest certificate
    if (auto emb = find_induced_embedding(g, get_config(ConfigName::P2)))
        return HHLabel{HHClass::not_hh, 0,
                       Reason{ReasonInducedP2{{(*emb)[0], (*emb)[1], (*emb)[2]}}}};

    if (comps.size() >= 2) {
        for (int i = 0; i < (int)comps.size(); ++i) {
            const auto& block = comps.blocks[i];
            OrientedGraph sub = induced_subgraph(g, block);
            if (!is_tournament(sub)) {
                for (size_t a = 0; a < block.size(); ++a)
                    for (size_t b = a + 1; b < block.size(); ++b)
                        if (!g.adjacent(block[a], block[b]))
                            return HHLabel{HHClass::not_hh, 0,
                                           Reason{ReasonComponentNotTournament{
                                               i, Arc{block[a], block[b]}}}};
            }
        }
        for (int i = 0; i < (int)comps.size(); ++i)
            for (int j = i + 1; j < (int)comps.size(); ++j) {
                OrientedGraph a = induced_subgraph(g, comps.blocks[i]);
                OrientedGraph b = induced_subgraph(g, comps.blocks[j]);
                bool ab = embeds(a, b), ba = embeds(b, a);
                if (!ab || !ba)
                    return HHLabel{HHClass::not_hh, 0,
                                   Reason{ReasonComponentAgesDiffer{i, j, ab, ba}}};
            }
        OrientedGraph first = induced_subgraph(g, comps.blocks[0]);
        if (!is_homogeneous(first, caps))
            return HHLabel{HHClass::not_hh, 0, Reason{ReasonComponentNotHomogeneous{0}}};
    }

    auto w = find_witness(g, caps);
    if (!w)
        throw std::logic_error("classifier inconsistency: graph outside the finite "
                               "classification has no witness");
    return HHLabel{HHClass::not_hh, 0, Reason{ReasonWitness{*w}}};
}

HHLabel classify_ph_finite(const OrientedGraph& g, const SizeCaps& caps) {
    return classify_hh_finite(g, caps);
}

bool verify_reason(const OrientedGraph& g, const Reason& r, const SizeCaps& caps) {
    if (const auto* p2 = std::get_if<ReasonInducedP2>(&r)) {
        auto [x, y, z] = p2->path;
        return g.arc(x, y) && g.arc(y, z) && !g.adjacent(x, z);
    }
    Partition comps = weakly_connected_components(g);
    if (const auto* nt = std::get_if<ReasonComponentNotTournament>(&r)) {
        if (nt->component >= (int)comps.size()) return false;
        const auto& block = comps.blocks[nt->component];
        auto [u, v] = nt->nonadjacent_pair;
        bool inside = std::find(block.begin(), block.end(), u) != block.end() &&
                      std::find(block.begin(), block.end(), v) != block.end();
        return comps.size() >= 2 && inside && u != v && !g.adjacent(u, v);
    }
    if (const auto* ad = std::get_if<ReasonComponentAgesDiffer>(&r)) {
        if (ad->comp_a >= (int)comps.size() || ad->comp_b >= (int)comps.size()) return false;
        OrientedGraph a = induced_subgraph(g, comps.blocks[ad->comp_a]);
        OrientedGraph b = induced_subgraph(g, comps.blocks[ad->comp_b]);
        return embeds(a, b) == ad->a_into_b && embeds(b, a) == ad->b_into_a &&
               (!ad->a_into_b || !ad->b_into_a);
    }
    if (const auto* nh = std::get_if<ReasonComponentNotHomogeneous>(&r)) {
        if (nh->component >= (int)comps.size()) return false;
        return comps.size() >= 2 &&
               !is_homogeneous(induced_subgraph(g, comps.blocks[nh->component]), caps);
    }
    const auto& w = std::get<ReasonWitness>(r);
    return verify_witness(g, w.witness);
}

std::vector<Discrepancy> verify_against_bruteforce(int nmax, const SizeCaps& caps) {
    std::vector<Discrepancy> out;
    for (int n = 1; n <= nmax; ++n) {
        for (const CanonicalForm& cf : enumerate_classes(n, caps)) {
            OrientedGraph g = canonical_graph(cf);
            bool labelled_hh = classify_hh_finite(g, caps).hh();
            bool brute = is_hh(g, caps);
            if (labelled_hh != brute) out.push_back(Discrepancy{cf, labelled_hh, brute});
        }
    }
    return out;
}

std::string describe(const Reason& r) {
    if (const auto* p2 = std::get_if<ReasonInducedP2>(&r))
        return "induced 2-path " + std::to_string(p2->path[0]) + "->" +
               std::to_string(p2->path[1]) + "->" + std::to_string(p2->path[2]);
    if (const auto* nt = std::get_if<ReasonComponentNotTournament>(&r))
        return "disconnected, but component " + std::to_string(nt->component) +
               " is not a tournament (no arc between " +
               std::to_string(nt->nonadjacent_pair.first) + " and " +
               std::to_string(nt->nonadjacent_pair.second) + ")";
    if (const auto* ad = std::get_if<ReasonComponentAgesDiffer>(&r))
        return "components " + std::to_string(ad->comp_a) + " and " +
               std::to_string(ad->comp_b) + " have different ages";
    if (const auto* nh = std::get_if<ReasonComponentNotHomogeneous>(&r))
        return "components are copies of a non-homogeneous tournament (component " +
               std::to_string(nh->component) + ")";
    const auto& w = std::get<ReasonWitness>(r).witness;
    return "witness v=" + std::to_string(w.v) + " A=" + vertex_list(w.domain) +
           " image=" + vertex_list(w.image);
}

std::string describe(const HHLabel& l) {
    switch (l.cls) {
        case HHClass::empty_graph: return "empty-graph k=" + std::to_string(l.k);
        case HHClass::disjoint_c3: return "disjoint-c3 k=" + std::to_string(l.k);
        case HHClass::not_hh: return "not-hh (" + describe(*l.reason) + ")";
    }
    return "?";
}

} // namespace homhom
