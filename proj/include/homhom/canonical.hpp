#ifndef HOMHOM_CANONICAL_HPP
#define HOMHOM_CANONICAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "homhom/digraph.hpp"

namespace homhom {

// Total-order key over isomorphism classes: the row-major adjacency bits of
// the canonically relabeled graph. Two graphs have equal forms iff they are
// isomorphic. Representation holds orders up to 11 (cap default is 10).
struct CanonicalForm {
    int order = 0;
    std::array<uint64_t, 2> bits{0, 0};

    bool bit(int p, int q) const {
        int i = p * order + q;
        return (bits[i >> 6] >> (i & 63)) & 1;
    }

    auto operator<=>(const CanonicalForm&) const = default;
};

// Exhaustive permutation search refined by (in-degree, out-degree) classes.
CanonicalForm canonical_form(const OrientedGraph& g, const SizeCaps& caps = default_caps());

// Internal fast entry working on out-adjacency bitmask rows (row u bit v).
CanonicalForm canonical_form_rows(const uint16_t* out_rows, int n);

// Same key, minimizing over all n! permutations with no degree refinement.
// Slow; kept as a cross-check oracle for the refined search.
CanonicalForm canonical_form_unrefined(const OrientedGraph& g);

// The representative graph encoded by a form.
OrientedGraph canonical_graph(const CanonicalForm& cf);

// "<order>:u-v,u-v,..." with arcs of the representative in sorted order.
std::string to_string(const CanonicalForm& cf);

} // namespace homhom

#endif
