#ifndef HOMHOM_CONFIGURATIONS_HPP
#define HOMHOM_CONFIGURATIONS_HPP

#include <optional>
#include <string>

#include "homhom/digraph.hpp"

namespace homhom {

// Named catalog of the small forbidden/characteristic configurations used by
// the deciders. Each name has one fixed indexing; consumers compare up to
// isomorphism.
enum class ConfigName { P2, L1, L2, A, B, C1, C2, K, D, Dstar, X4, X5 };

OrientedGraph get_config(ConfigName name);

std::optional<ConfigName> config_from_string(const std::string& name);
const char* to_string(ConfigName name);

// L_n: arcs i -> j iff i < j.
OrientedGraph transitive_tournament(int n);

OrientedGraph cycle_c3();

// S(2m+1): vertices on a cycle, i -> j iff (j - i) mod (2m+1) in 1..m.
OrientedGraph circular_tournament(int m);

// Henson's antichain tournaments. A_n lives on {0..n+2} with a -> b iff
// b = a+1 or b+1 < a; B_n adds a vertex alpha (largest index) with
// alpha -> 0, alpha -> n+2 and b -> alpha for all 0 < b < n+2.
OrientedGraph henson_A(int n);
OrientedGraph henson_B(int n);

} // namespace homhom

#endif
