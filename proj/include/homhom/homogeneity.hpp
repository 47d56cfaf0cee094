#ifndef HOMHOM_HOMOGENEITY_HPP
#define HOMHOM_HOMOGENEITY_HPP

#include <array>
#include <optional>
#include <vector>

#include "homhom/digraph.hpp"

namespace homhom {

// A local homomorphism: finite partial vertex map respecting arcs on the
// induced subgraph of its domain. domain is strictly increasing and image is
// aligned with it.
struct PartialHom {
    std::vector<Vertex> domain;
    std::vector<Vertex> image;
};

bool is_valid_partial_hom(const OrientedGraph& g, const PartialHom& h);

// Vertices w such that h together with v -> w is again a local homomorphism:
// the intersection of out-neighbourhoods of h(a) over a -> v and of
// in-neighbourhoods over v -> a.
VertexSet extension_candidates(const OrientedGraph& g, const PartialHom& h, Vertex v);

// Smallest such w, or nullopt if none. Throws InvalidPartialHom on bad input.
std::optional<Vertex> extend_one_point(const OrientedGraph& g, const PartialHom& h, Vertex v);

// (A, B, h, v) certifying failure of homomorphism homogeneity: h admits no
// extension to A u {v}.
struct Witness {
    std::vector<Vertex> domain; // A, sorted
    std::vector<Vertex> image;  // h, aligned with domain
    Vertex v = -1;

    std::vector<Vertex> image_set() const; // B, sorted without duplicates
    PartialHom hom() const { return PartialHom{domain, image}; }
};

bool verify_witness(const OrientedGraph& g, const Witness& w);

// First witness in the fixed search order: v ascending, then domains (subsets
// of the in/out-neighbourhood of v) in lexicographic subset order, then images
// lexicographically. Restricting domains to N(v) loses no witnesses; the
// unpruned search is kept in the tests as an oracle.
std::optional<Witness> find_witness(const OrientedGraph& g, const SizeCaps& caps = default_caps());

// Same, but domains enumerated by increasing size, so |A| is minimal.
std::optional<Witness> find_minimal_witness(const OrientedGraph& g,
                                            const SizeCaps& caps = default_caps());

// Homomorphism homogeneity; for finite graphs this is exactly the absence of
// a witness (greedy one-point extension builds a full endomorphism).
bool is_hh(const OrientedGraph& g, const SizeCaps& caps = default_caps());

// Every partial isomorphism admits a one-point partial-isomorphism extension
// to every vertex; for finite graphs this is homogeneity.
bool is_homogeneous(const OrientedGraph& g, const SizeCaps& caps = default_caps());

// Bounded polymorphism-homogeneity check: is_hh of powers 1..nmax.
// A sound refutation of PH, not a decision of full PH.
bool is_ph_up_to(const OrientedGraph& g, int nmax, const SizeCaps& caps = default_caps());

// A copy of configuration K at (a,b,c,d) forces an induced 2-path
// (b,d) -> (c,a) -> (d,b) in the square, so the graph is not PH.
struct KRefutation {
    std::array<Vertex, 4> k;           // image of K's vertices 0..3 = (a,b,c,d)
    std::array<Vertex, 3> square_path; // indices in the direct square
};

std::optional<KRefutation> refute_ph_via_K(const OrientedGraph& g);

// Re-checks a refutation against a freshly built square.
bool verify_k_refutation(const OrientedGraph& g, const KRefutation& r,
                         const SizeCaps& caps = default_caps());

// An induced subgraph that is a core and a retract image of g. Shrinks by
// searching, over image sizes ascending and subsets lexicographically, for an
// endomorphism into the subset; the first hit is the core.
OrientedGraph compute_core(const OrientedGraph& g, const SizeCaps& caps = default_caps());

bool hom_equivalent(const OrientedGraph& g, const OrientedGraph& h,
                    const SizeCaps& caps = default_caps());

// Minimal-witness structure report for blow-ups of tournaments.
struct MinWitnessReport {
    Witness witness;
    bool h_bijective = false;
    bool image_tournament = false;      // B induces a tournament
    bool domain_all_adjacent = false;   // every a in A is adjacent to v
    bool domain_not_tournament = false; // A does not induce a tournament
    std::optional<OrientedGraph> bhat;  // B plus v-hat, when h is bijective
    std::optional<bool> bhat_in_age;    // bhat embeds into t, within the sample order
};

// Finds the minimal witness of blowup(t, m), adjoins v-hat to B following
// (a -> v) <=> (h(a) -> v-hat), and tests the result against the induced
// subtournaments of t of order up to age_sample_order.
// Throws NoWitness when the blow-up is homomorphism homogeneous.
MinWitnessReport check_minimal_witness(const OrientedGraph& t, const Multiplicity& m,
                                       int age_sample_order,
                                       const SizeCaps& caps = default_caps());

} // namespace homhom

#endif
