#ifndef HOMHOM_DIGRAPH_HPP
#define HOMHOM_DIGRAPH_HPP

#include <utility>
#include <variant>
#include <vector>

#include "homhom/caps.hpp"
#include "homhom/error.hpp"
#include "homhom/vertex_set.hpp"

namespace homhom {

using Arc = std::pair<Vertex, Vertex>;

// Finite loop-free digraph with an asymmetric arc relation. Vertices are the
// dense indices 0..order-1. Values are treated as immutable once built; every
// operation below returns a fresh graph and never mutates its inputs.
class OrientedGraph {
public:
    explicit OrientedGraph(int order);

    // Validating constructor: rejects loops, symmetric pairs and out-of-range
    // indices. Exact duplicates in `arcs` are collapsed (set semantics).
    static OrientedGraph from_arcs(int order, const std::vector<Arc>& arcs);

    int order() const { return order_; }
    int arc_count() const { return arc_count_; }

    bool arc(Vertex u, Vertex v) const { return out_[u].test(v); }
    bool adjacent(Vertex u, Vertex v) const { return arc(u, v) || arc(v, u); }

    const VertexSet& out(Vertex v) const { return out_[v]; }
    const VertexSet& in(Vertex v) const { return in_[v]; }
    int out_degree(Vertex v) const { return out_[v].count(); }
    int in_degree(Vertex v) const { return in_[v].count(); }

    // In- and out-neighbours of v.
    VertexSet neighbours(Vertex v) const;

    std::vector<Arc> arcs() const; // sorted lexicographically

    // Validated insertion, used while assembling a graph.
    void add_arc(Vertex u, Vertex v);

    bool operator==(const OrientedGraph& o) const {
        return order_ == o.order_ && out_ == o.out_;
    }

private:
    int order_;
    int arc_count_ = 0;
    std::vector<VertexSet> out_, in_;
};

inline OrientedGraph new_graph(int order, const std::vector<Arc>& arcs) {
    return OrientedGraph::from_arcs(order, arcs);
}

// Per-base-vertex block sizes of a blow-up; every entry must be >= 1.
using Multiplicity = std::vector<int>;

// Disjoint nonempty blocks covering 0..order-1. Blocks are ordered by their
// smallest member and sorted internally, so layouts are reproducible.
struct Partition {
    std::vector<std::vector<Vertex>> blocks;

    size_t size() const { return blocks.size(); }
};

// --- constructions -----------------------------------------------------

// n-th categorical power. Vertex tuples are indexed row-major with the first
// coordinate most significant; arcs hold iff they hold coordinatewise.
OrientedGraph direct_power(const OrientedGraph& g, int n, const SizeCaps& caps = default_caps());

// Replaces vertex i by a block of m[i] independent vertices, blocks laid out
// contiguously in base-vertex order; arcs inherited between blocks.
OrientedGraph blowup(const OrientedGraph& base, const Multiplicity& m);

OrientedGraph disjoint_union(const std::vector<OrientedGraph>& parts);
OrientedGraph k_copies(const OrientedGraph& g, int k);

// New graph on `verts` (any order; position defines the new index).
OrientedGraph induced_subgraph(const OrientedGraph& g, const std::vector<Vertex>& verts);

Partition weakly_connected_components(const OrientedGraph& g);

// Certificate that the reflexive non-arc relation is not transitive:
// x !~ y, y !~ z, but x ~ z.
struct NonarcViolation {
    Vertex x, y, z;
};

// Classes of the non-arc relation when it is an equivalence, else a violation.
std::variant<Partition, NonarcViolation> nonarc_partition(const OrientedGraph& g);

struct Quotient {
    OrientedGraph tournament;  // one vertex per class, in block order
    Partition classes;
    Multiplicity class_sizes;
};

// Two arcs crossing the same class pair in opposite directions.
struct MixedClassPair {
    Arc forward, backward;
};

struct NotReducible {
    std::variant<NonarcViolation, MixedClassPair> why;
};

// Collapses the non-arc classes to a tournament. Succeeds iff nonarc_partition
// succeeds and between any two classes all arcs point the same way; then
// blowup(quotient, class sizes) is isomorphic to the input.
std::variant<Quotient, NotReducible> quotient_by_nonarc(const OrientedGraph& g);

// --- predicates ---------------------------------------------------------

bool is_tournament(const OrientedGraph& g);
bool is_acyclic(const OrientedGraph& g);
bool is_transitive_relation(const OrientedGraph& g);
bool is_strongly_connected(const OrientedGraph& g);

} // namespace homhom

#endif
