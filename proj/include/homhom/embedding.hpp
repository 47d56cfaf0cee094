#ifndef HOMHOM_EMBEDDING_HPP
#define HOMHOM_EMBEDDING_HPP

#include <optional>
#include <vector>

#include "homhom/digraph.hpp"

namespace homhom {

// Injective vertex map realizing `pattern` as an induced subgraph of `host`:
// exact adjacency, both arcs and non-arcs. Pattern vertices are branched in
// descending degree order; the returned map is the first one found with
// candidates tried in ascending host order. emb[i] = host vertex of pattern i.
std::optional<std::vector<Vertex>> find_induced_embedding(const OrientedGraph& host,
                                                          const OrientedGraph& pattern);

bool contains_configuration(const OrientedGraph& host, const OrientedGraph& pattern);

// pattern embeds into host as an induced subgraph
inline bool embeds(const OrientedGraph& pattern, const OrientedGraph& host) {
    return contains_configuration(host, pattern);
}

bool is_isomorphic(const OrientedGraph& g, const OrientedGraph& h,
                   const SizeCaps& caps = default_caps());

// Arc-preserving (not necessarily injective) vertex map `from` -> `to`.
std::optional<std::vector<Vertex>> find_homomorphism(const OrientedGraph& from,
                                                     const OrientedGraph& to);

inline bool hom_exists(const OrientedGraph& from, const OrientedGraph& to) {
    return find_homomorphism(from, to).has_value();
}

} // namespace homhom

#endif
