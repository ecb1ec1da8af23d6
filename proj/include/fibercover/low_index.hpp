#pragma once

#include "fibercover/presentation.hpp"
#include "fibercover/reidemeister_schreier.hpp"

#include <vector>

namespace fibercover {

struct LowIndexResult {
  std::vector<CosetAction> actions;  // transitive, relators trivial, one per class
  bool complete = true;              // false when the node budget ran out
  long long nodes_used = 0;
};

// All transitive actions of the presented group on up to max_index points,
// deduplicated up to relabeling, ordered by degree then canonical table.
LowIndexResult low_index_actions(const GroupPresentation& p, int max_index,
                                 long long node_budget);

// Actions of one exact degree, stopping after max_found distinct ones; used
// to stream witnesses in ascending degree without full enumeration.
LowIndexResult low_index_actions_of_degree(const GroupPresentation& p,
                                           int degree, long long node_budget,
                                           size_t max_found);

}  // namespace fibercover
