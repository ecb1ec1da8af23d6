#pragma once

#include "fibercover/perm.hpp"
#include "fibercover/presentation.hpp"

#include <vector>

namespace fibercover {

// Transitive action of a presented group on {0..degree-1}; generator g (1-based)
// acts by gen_action[g-1], words acting left to right.
struct CosetAction {
  int degree = 0;
  std::vector<Perm> gen_action;
};

Perm action_of_word(const CosetAction& act, const FreeWord& w);
bool action_respects(const GroupPresentation& p, const CosetAction& act);

// Presentation of the stabilizer of point 0, with a breadth-first Schreier
// transversal (generators tried in order g1, g1^-1, g2, g2^-1, ...).
struct RSData {
  int degree = 0;
  int num_sub_gens = 0;
  std::vector<FreeWord> transversal;           // ambient word carrying 0 to c
  std::vector<std::vector<int>> schreier_idx;  // [gen-1][coset]: 1-based sub gen, 0 = tree edge
  std::vector<FreeWord> sub_gen_words;         // ambient word of each sub generator
  GroupPresentation sub;
};

RSData reidemeister_schreier(const GroupPresentation& amb,
                             const CosetAction& act);

// Rewrites the ambient word into subgroup generators, starting the trace at
// `start`; the result represents T[start] * w * T[start . w]^-1.
FreeWord rs_rewrite(const RSData& rs, const CosetAction& act,
                    const FreeWord& ambient, int start = 0);

}  // namespace fibercover
