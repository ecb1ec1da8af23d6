#pragma once

#include "fibercover/free_word.hpp"
#include "fibercover/snf.hpp"
#include "fibercover/twist_word.hpp"
#include "fibercover/types.hpp"

#include <string>
#include <vector>

namespace fibercover {

struct GroupPresentation {
  int num_gens = 0;
  std::vector<FreeWord> relators;
  std::vector<std::string> gen_names;
};

GroupPresentation free_group_presentation(int rank);

// Fundamental group of the punctured-torus bundle with the given monodromy:
// <x, y, t | t x t^-1 h(x)^-1, t y t^-1 h(y)^-1> with x = 1, y = 2, t = 3.
GroupPresentation mapping_torus_presentation(const TwistWord& w);

// Same with the filling relator t^mu beta^lambda appended, where beta is the
// boundary commutator [x, y].
GroupPresentation filled_mapping_torus_presentation(const TwistWord& w,
                                                    const Slope& s);

struct AbelianInvariants {
  int b1 = 0;
  std::vector<Int> torsion;  // invariant factors > 1
};

AbelianInvariants abelian_invariants(const GroupPresentation& p);

IntMat relator_matrix(const GroupPresentation& p);  // rows = relators

}  // namespace fibercover
