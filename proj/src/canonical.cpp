#include "homhom/canonical.hpp"

#include <algorithm>
#include <limits>

namespace homhom {

namespace {

constexpr int kMaxCanonOrder = 11; // 11*11 = 121 bits fit the 128-bit key

// Minimizes, over admissible relabelings, the "layered" bit string whose p-th
// layer lists arcs between position p and positions 0..p-1 (first outgoing,
// then incoming). Layer p is packed MSB-first into one word, so lexicographic
// comparison of the string is per-layer numeric comparison.
struct CanonSearch {
    int n = 0;
    const uint16_t* out = nullptr;
    uint16_t in[kMaxCanonOrder + 1] = {};
    int deg_out[kMaxCanonOrder + 1] = {};
    int deg_in[kMaxCanonOrder + 1] = {};
    std::pair<int, int> req[kMaxCanonOrder + 1];
    bool refine = true;

    uint32_t best[kMaxCanonOrder + 1];
    int perm[kMaxCanonOrder + 1] = {};
    int best_perm[kMaxCanonOrder + 1] = {};
    bool used[kMaxCanonOrder + 1] = {};
    bool have_best = false;

    void prepare() {
        for (int v = 0; v < n; ++v) in[v] = 0;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if ((out[u] >> v) & 1) in[v] |= uint16_t(1) << u;
        std::vector<std::pair<int, int>> pairs(n);
        for (int v = 0; v < n; ++v) {
            deg_out[v] = __builtin_popcount(out[v]);
            deg_in[v] = __builtin_popcount(in[v]);
            pairs[v] = {deg_out[v], deg_in[v]};
        }
        std::sort(pairs.begin(), pairs.end());
        for (int p = 0; p < n; ++p) req[p] = pairs[p];
        for (int p = 0; p < n; ++p) best[p] = std::numeric_limits<uint32_t>::max();
    }

    void rec(int p) {
        if (p == n) {
            std::copy(perm, perm + n, best_perm);
            have_best = true;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            if (refine && std::pair<int, int>(deg_out[v], deg_in[v]) != req[p]) continue;
            uint32_t w = 0;
            for (int q = 0; q < p; ++q) w = (w << 1) | ((out[v] >> perm[q]) & 1);
            for (int q = 0; q < p; ++q) w = (w << 1) | ((out[perm[q]] >> v) & 1);
            if (w > best[p]) continue;
            if (w < best[p]) {
                best[p] = w;
                for (int q = p + 1; q < n; ++q) best[q] = std::numeric_limits<uint32_t>::max();
            }
            perm[p] = v;
            used[v] = true;
            rec(p + 1);
            used[v] = false;
        }
    }

    CanonicalForm result() const {
        CanonicalForm cf;
        cf.order = n;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                if (p != q && ((out[best_perm[p]] >> best_perm[q]) & 1)) {
                    int i = p * n + q;
                    cf.bits[i >> 6] |= uint64_t(1) << (i & 63);
                }
        return cf;
    }
};

void graph_to_rows(const OrientedGraph& g, uint16_t* rows) {
    for (int u = 0; u < g.order(); ++u) {
        rows[u] = 0;
        for (Vertex v = g.out(u).first(); v >= 0; v = g.out(u).next(v))
            rows[u] |= uint16_t(1) << v;
    }
}

} // namespace

CanonicalForm canonical_form_rows(const uint16_t* out_rows, int n) {
    if (n > kMaxCanonOrder) fail(Errc::size_cap_exceeded, "canonical form limited to order 11");
    CanonSearch s;
    s.n = n;
    s.out = out_rows;
    s.prepare();
    s.rec(0);
    return s.result();
}

CanonicalForm canonical_form(const OrientedGraph& g, const SizeCaps& caps) {
    if (g.order() > caps.canonical || g.order() > kMaxCanonOrder)
        fail(Errc::size_cap_exceeded,
             "canonical form capped at order " + std::to_string(caps.canonical));
    uint16_t rows[kMaxCanonOrder + 1];
    graph_to_rows(g, rows);
    return canonical_form_rows(rows, g.order());
}

CanonicalForm canonical_form_unrefined(const OrientedGraph& g) {
    if (g.order() > kMaxCanonOrder)
        fail(Errc::size_cap_exceeded, "canonical form limited to order 11");
    uint16_t rows[kMaxCanonOrder + 1];
    graph_to_rows(g, rows);
    CanonSearch s;
    s.n = g.order();
    s.out = rows;
    s.refine = false;
    s.prepare();
    s.rec(0);
    return s.result();
}

OrientedGraph canonical_graph(const CanonicalForm& cf) {
    OrientedGraph g(cf.order);
    for (int p = 0; p < cf.order; ++p)
        for (int q = 0; q < cf.order; ++q)
            if (p != q && cf.bit(p, q)) g.add_arc(p, q);
    return g;
}

std::string to_string(const CanonicalForm& cf) {
    std::string s = std::to_string(cf.order) + ":";
    bool first = true;
    for (int p = 0; p < cf.order; ++p)
        for (int q = 0; q < cf.order; ++q)
            if (p != q && cf.bit(p, q)) {
                if (!first) s += ',';
                s += std::to_string(p) + "-" + std::to_string(q);
                first = false;
            }
    return s;
}

} // namespace homhom
