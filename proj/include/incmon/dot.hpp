#pragma once

#include <string>

#include "incmon/context.hpp"
#include "incmon/green.hpp"

namespace incmon {

// Hasse diagram of a poset; edges point from smaller to larger and the graph
// is drawn bottom-up.
std::string hasse_dot(const Poset& p);

// Boolean lattice of the diagonal idempotents 1_J, [k] <= J <= [n], nodes
// labelled by the bit string of J, edges the covering inclusions.
std::string lattice_dot(const CrossSectionLattice& lattice);

// Poset of idempotent-variety components of a context: one node per
// admissible diagonal pattern, ordered by inclusion. Complete bipartite
// posets also get the component dimension in the node label.
std::string component_poset_dot(const MonoidContext& ctx);

}  // namespace incmon
