#ifndef HOMHOM_CLASSIFIER_HPP
#define HOMHOM_CLASSIFIER_HPP

#include <optional>
#include <variant>
#include <vector>

#include "homhom/canonical.hpp"
#include "homhom/digraph.hpp"
#include "homhom/homogeneity.hpp"

namespace homhom {

// Finite members of the classification: I_k and k copies of the 3-cycle.
// Everything else is NotHH with a machine-checkable reason.
enum class HHClass { empty_graph, disjoint_c3, not_hh };

struct ReasonInducedP2 {
    std::array<Vertex, 3> path; // x -> y -> z with x, z non-adjacent
};

struct ReasonComponentNotTournament {
    int component;
    Arc nonadjacent_pair; // vertices in the component with no arc between them
};

struct ReasonComponentAgesDiffer {
    int comp_a, comp_b;
    bool a_into_b, b_into_a; // at least one embedding direction fails
};

struct ReasonComponentNotHomogeneous {
    int component;
};

struct ReasonWitness {
    Witness witness;
};

using Reason = std::variant<ReasonInducedP2, ReasonComponentNotTournament,
                            ReasonComponentAgesDiffer, ReasonComponentNotHomogeneous,
                            ReasonWitness>;

struct HHLabel {
    HHClass cls = HHClass::not_hh;
    int k = 0; // order for empty_graph, number of copies for disjoint_c3
    std::optional<Reason> reason;

    bool hh() const { return cls != HHClass::not_hh; }
};

// Label from the finite classification. NotHH reasons are checked
// cheapest-first: an induced P2, then disconnected-component violations,
// then a raw witness.
HHLabel classify_hh_finite(const OrientedGraph& g, const SizeCaps& caps = default_caps());

// Finite PH coincides with finite HH; the label set is shared. K-refutations
// are reported separately (refute_ph_via_K) for explanation output.
HHLabel classify_ph_finite(const OrientedGraph& g, const SizeCaps& caps = default_caps());

// Re-derives the certificate carried by a NotHH label.
bool verify_reason(const OrientedGraph& g, const Reason& r, const SizeCaps& caps = default_caps());

struct Discrepancy {
    CanonicalForm graph;
    bool classifier_hh = false;
    bool bruteforce_hh = false;
};

// Classifier vs witness search over every isomorphism class with up to nmax
// vertices; the result must be empty.
std::vector<Discrepancy> verify_against_bruteforce(int nmax,
                                                   const SizeCaps& caps = default_caps());

std::string describe(const Reason& r);
std::string describe(const HHLabel& l);

} // namespace homhom

#endif
