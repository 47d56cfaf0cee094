#include "homhom/embedding.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace homhom {

namespace {

struct EmbedSearch {
    const OrientedGraph& host;
    const OrientedGraph& pattern;
    std::vector<int> order;   // pattern vertices, densest first
    std::vector<Vertex> map;  // pattern vertex -> host vertex (-1 unassigned)
    std::vector<bool> used;   // host side

    EmbedSearch(const OrientedGraph& h, const OrientedGraph& p)
        : host(h), pattern(p), map(p.order(), -1), used(h.order(), false) {
        order.resize(p.order());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return p.out_degree(a) + p.in_degree(a) > p.out_degree(b) + p.in_degree(b);
        });
    }

    bool feasible(Vertex pv, Vertex hv) const {
        if (pattern.out_degree(pv) > host.out_degree(hv)) return false;
        if (pattern.in_degree(pv) > host.in_degree(hv)) return false;
        for (int q = 0; q < pattern.order(); ++q) {
            Vertex hq = map[q];
            if (hq < 0 || q == pv) continue;
            if (pattern.arc(pv, q) != host.arc(hv, hq)) return false;
            if (pattern.arc(q, pv) != host.arc(hq, hv)) return false;
        }
        return true;
    }

    bool rec(size_t k) {
        if (k == order.size()) return true;
        Vertex pv = order[k];
        for (Vertex hv = 0; hv < host.order(); ++hv) {
            if (used[hv] || !feasible(pv, hv)) continue;
            map[pv] = hv;
            used[hv] = true;
            if (rec(k + 1)) return true;
            used[hv] = false;
            map[pv] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<Vertex>> find_induced_embedding(const OrientedGraph& host,
                                                          const OrientedGraph& pattern) {
    if (pattern.order() > host.order()) return std::nullopt;
    EmbedSearch s(host, pattern);
    if (!s.rec(0)) return std::nullopt;
    return s.map;
}

bool contains_configuration(const OrientedGraph& host, const OrientedGraph& pattern) {
    return find_induced_embedding(host, pattern).has_value();
}

bool is_isomorphic(const OrientedGraph& g, const OrientedGraph& h, const SizeCaps& caps) {
    if (g.order() > caps.canonical || h.order() > caps.canonical)
        fail(Errc::size_cap_exceeded,
             "isomorphism check capped at order " + std::to_string(caps.canonical));
    if (g.order() != h.order() || g.arc_count() != h.arc_count()) return false;
    auto degs = [](const OrientedGraph& x) {
        std::vector<std::pair<int, int>> d(x.order());
        for (Vertex v = 0; v < x.order(); ++v) d[v] = {x.out_degree(v), x.in_degree(v)};
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(g) != degs(h)) return false;
    // an induced embedding between equal-order graphs is an isomorphism
    return contains_configuration(g, h);
}

std::optional<std::vector<Vertex>> find_homomorphism(const OrientedGraph& from,
                                                     const OrientedGraph& to) {
    int n = from.order();
    std::vector<VertexSet> cand(n, VertexSet(to.order()));
    for (auto& c : cand) c.fill();

    std::vector<Vertex> map(n, -1);

    // backtracking with forward checking; branch on fewest candidates
    struct Frame {
        std::vector<VertexSet> cand;
    };
    std::vector<Vertex> assigned;

    std::function<bool()> rec = [&]() -> bool {
        Vertex pick = -1;
        int best = to.order() + 1;
        for (Vertex v = 0; v < n; ++v) {
            if (map[v] >= 0) continue;
            int c = cand[v].count();
            if (c < best) {
                best = c;
                pick = v;
            }
        }
        if (pick < 0) return true;
        VertexSet options = cand[pick];
        for (Vertex x = options.first(); x >= 0; x = options.next(x)) {
            std::vector<VertexSet> saved = cand;
            map[pick] = x;
            bool ok = true;
            for (Vertex v = 0; v < n && ok; ++v) {
                if (map[v] >= 0 || v == pick) continue;
                if (from.arc(pick, v)) cand[v] &= to.out(x);
                if (from.arc(v, pick)) cand[v] &= to.in(x);
                if (cand[v].none()) ok = false;
            }
            if (ok && rec()) return true;
            map[pick] = -1;
            cand = std::move(saved);
        }
        return false;
    };

    if (!rec()) return std::nullopt;
    return map;
}

} // namespace homhom
