#include "homhom/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace homhom {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::loop_arc: return "LoopArc";
        case Errc::symmetric_pair: return "SymmetricPair";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::size_cap_exceeded: return "SizeCapExceeded";
        case Errc::zero_multiplicity: return "ZeroMultiplicity";
        case Errc::empty_list: return "EmptyList";
        case Errc::degenerate_placement: return "DegeneratePlacement";
        case Errc::not_a_tournament: return "NotATournament";
        case Errc::invalid_partial_hom: return "InvalidPartialHom";
        case Errc::no_witness: return "NoWitness";
        case Errc::io_error: return "IoError";
        case Errc::parse_error: return "ParseError";
        case Errc::bad_argument: return "BadArgument";
    }
    return "Error";
}

OrientedGraph::OrientedGraph(int order) : order_(order) {
    if (order < 1) fail(Errc::bad_argument, "graph order must be >= 1");
    out_.assign(order, VertexSet(order));
    in_.assign(order, VertexSet(order));
}

void OrientedGraph::add_arc(Vertex u, Vertex v) {
    if (u < 0 || u >= order_ || v < 0 || v >= order_)
        fail(Errc::index_out_of_range,
             "arc (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." +
                 std::to_string(order_ - 1));
    if (u == v) fail(Errc::loop_arc, "loop at vertex " + std::to_string(u));
    if (out_[v].test(u))
        fail(Errc::symmetric_pair,
             "both (" + std::to_string(v) + "," + std::to_string(u) + ") and its reverse supplied");
    if (out_[u].test(v)) return; // duplicate
    out_[u].set(v);
    in_[v].set(u);
    ++arc_count_;
}

OrientedGraph OrientedGraph::from_arcs(int order, const std::vector<Arc>& arcs) {
    OrientedGraph g(order);
    for (const auto& [u, v] : arcs) g.add_arc(u, v);
    return g;
}

VertexSet OrientedGraph::neighbours(Vertex v) const {
    VertexSet s = out_[v];
    s |= in_[v];
    return s;
}

std::vector<Arc> OrientedGraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(arc_count_);
    for (Vertex u = 0; u < order_; ++u)
        for (Vertex v = out_[u].first(); v >= 0; v = out_[u].next(v)) out.emplace_back(u, v);
    return out;
}

OrientedGraph direct_power(const OrientedGraph& g, int n, const SizeCaps& caps) {
    if (n < 1) fail(Errc::bad_argument, "power exponent must be >= 1");
    long long size = 1;
    for (int i = 0; i < n; ++i) {
        size *= g.order();
        if (size > caps.power_order)
            fail(Errc::size_cap_exceeded, "power has more than " +
                                              std::to_string(caps.power_order) + " vertices");
    }
    int total = (int)size;
    OrientedGraph p(total);
    // tuple of index t: digits base g.order(), first coordinate most significant
    std::vector<int> tu(n), tv(n);
    for (int u = 0; u < total; ++u) {
        int x = u;
        for (int i = n - 1; i >= 0; --i) {
            tu[i] = x % g.order();
            x /= g.order();
        }
        for (int v = 0; v < total; ++v) {
            if (u == v) continue;
            int y = v;
            for (int i = n - 1; i >= 0; --i) {
                tv[i] = y % g.order();
                y /= g.order();
            }
            bool all = true;
            for (int i = 0; i < n && all; ++i) all = g.arc(tu[i], tv[i]);
            if (all) p.add_arc(u, v);
        }
    }
    return p;
}

OrientedGraph blowup(const OrientedGraph& base, const Multiplicity& m) {
    if ((int)m.size() != base.order())
        fail(Errc::bad_argument, "multiplicity length must equal graph order");
    for (int x : m)
        if (x < 1) fail(Errc::zero_multiplicity, "every multiplicity must be >= 1");
    std::vector<int> start(base.order() + 1, 0);
    for (int i = 0; i < base.order(); ++i) start[i + 1] = start[i] + m[i];
    OrientedGraph g(start.back());
    for (Vertex u = 0; u < base.order(); ++u)
        for (Vertex v = base.out(u).first(); v >= 0; v = base.out(u).next(v))
            for (int a = start[u]; a < start[u + 1]; ++a)
                for (int b = start[v]; b < start[v + 1]; ++b) g.add_arc(a, b);
    return g;
}

OrientedGraph disjoint_union(const std::vector<OrientedGraph>& parts) {
    if (parts.empty()) fail(Errc::empty_list, "disjoint union of no graphs");
    int total = 0;
    for (const auto& p : parts) total += p.order();
    OrientedGraph g(total);
    int off = 0;
    for (const auto& p : parts) {
        for (const auto& [u, v] : p.arcs()) g.add_arc(u + off, v + off);
        off += p.order();
    }
    return g;
}

OrientedGraph k_copies(const OrientedGraph& g, int k) {
    if (k < 1) fail(Errc::bad_argument, "k must be >= 1");
    return disjoint_union(std::vector<OrientedGraph>(k, g));
}

OrientedGraph induced_subgraph(const OrientedGraph& g, const std::vector<Vertex>& verts) {
    if (verts.empty()) fail(Errc::bad_argument, "induced subgraph needs at least one vertex");
    OrientedGraph h((int)verts.size());
    for (int i = 0; i < (int)verts.size(); ++i)
        for (int j = 0; j < (int)verts.size(); ++j)
            if (i != j && g.arc(verts[i], verts[j])) h.add_arc(i, j);
    return h;
}

namespace {

Partition blocks_from_labels(const std::vector<int>& label, int n) {
    // one block per label, ordered by smallest member
    std::vector<int> first_seen(n, -1);
    Partition p;
    for (int v = 0; v < n; ++v) {
        int l = label[v];
        if (first_seen[l] < 0) {
            first_seen[l] = (int)p.blocks.size();
            p.blocks.emplace_back();
        }
        p.blocks[first_seen[l]].push_back(v);
    }
    return p;
}

} // namespace

Partition weakly_connected_components(const OrientedGraph& g) {
    int n = g.order();
    std::vector<int> label(n, -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        int l = next++;
        label[s] = l;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            VertexSet nb = g.neighbours(u);
            for (Vertex v = nb.first(); v >= 0; v = nb.next(v))
                if (label[v] < 0) {
                    label[v] = l;
                    stack.push_back(v);
                }
        }
    }
    return blocks_from_labels(label, n);
}

std::variant<Partition, NonarcViolation> nonarc_partition(const OrientedGraph& g) {
    int n = g.order();
    // transitivity of the reflexive non-arc relation
    for (Vertex y = 0; y < n; ++y) {
        std::vector<Vertex> non;
        for (Vertex x = 0; x < n; ++x)
            if (x != y && !g.adjacent(x, y)) non.push_back(x);
        for (size_t i = 0; i < non.size(); ++i)
            for (size_t j = i + 1; j < non.size(); ++j)
                if (g.adjacent(non[i], non[j]))
                    return NonarcViolation{non[i], y, non[j]};
    }
    // classes: union of non-adjacent pairs
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
            if (!g.adjacent(x, y)) {
                int a = label[x], b = label[y];
                if (a != b)
                    for (int& l : label)
                        if (l == b) l = a;
            }
    return blocks_from_labels(label, n);
}

std::variant<Quotient, NotReducible> quotient_by_nonarc(const OrientedGraph& g) {
    auto part = nonarc_partition(g);
    if (auto* viol = std::get_if<NonarcViolation>(&part)) return NotReducible{*viol};
    Partition classes = std::get<Partition>(std::move(part));
    int k = (int)classes.size();
    OrientedGraph q(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            // all cross pairs are adjacent (distinct non-arc classes); the
            // direction must be uniform
            Arc fwd{-1, -1}, bwd{-1, -1};
            for (Vertex a : classes.blocks[i])
                for (Vertex b : classes.blocks[j]) {
                    if (g.arc(a, b) && fwd.first < 0) fwd = {a, b};
                    if (g.arc(b, a) && bwd.first < 0) bwd = {b, a};
                }
            if (fwd.first >= 0 && bwd.first >= 0) return NotReducible{MixedClassPair{fwd, bwd}};
            if (fwd.first >= 0)
                q.add_arc(i, j);
            else
                q.add_arc(j, i);
        }
    }
    Multiplicity sizes(k);
    for (int i = 0; i < k; ++i) sizes[i] = (int)classes.blocks[i].size();
    return Quotient{std::move(q), std::move(classes), std::move(sizes)};
}

bool is_tournament(const OrientedGraph& g) {
    return 2 * g.arc_count() == g.order() * (g.order() - 1);
}

bool is_acyclic(const OrientedGraph& g) {
    int n = g.order();
    std::vector<int> indeg(n);
    for (Vertex v = 0; v < n; ++v) indeg[v] = g.in_degree(v);
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
        Vertex u = ready.back();
        ready.pop_back();
        ++seen;
        for (Vertex v = g.out(u).first(); v >= 0; v = g.out(u).next(v))
            if (--indeg[v] == 0) ready.push_back(v);
    }
    return seen == n;
}

bool is_transitive_relation(const OrientedGraph& g) {
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = g.out(u).first(); v >= 0; v = g.out(u).next(v))
            for (Vertex w = g.out(v).first(); w >= 0; w = g.out(v).next(w))
                if (!g.arc(u, w)) return false;
    return true;
}

bool is_strongly_connected(const OrientedGraph& g) {
    int n = g.order();
    auto reaches_all = [&](bool forward) {
        VertexSet seen(n);
        seen.set(0);
        std::vector<Vertex> stack{0};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            const VertexSet& nb = forward ? g.out(u) : g.in(u);
            for (Vertex v = nb.first(); v >= 0; v = nb.next(v))
                if (!seen.test(v)) {
                    seen.set(v);
                    stack.push_back(v);
                }
        }
        return seen.count() == n;
    };
    return reaches_all(true) && reaches_all(false);
}

} // namespace homhom
