#pragma once

#include "fibercover/slope_calculus.hpp"
#include "fibercover/types.hpp"

#include <vector>

namespace fibercover {

struct CyclicSolution {
  Int N = 0;                   // modulus, signed as derived; width is |N|
  std::vector<Int> exponents;  // e_1..e_k reduced into [0,|N|), e_1 ≡ 1
};

// Modulus of the k-block cyclic exponent system at (R, slope); 0 marks a
// degenerate family with no cover of this kind.
Int cyclic_modulus(int k, const Int& R, const Slope& s);

// Solves the cyclic exponent system over Z/|N|: e_1 = 1, the chain
// congruences lambda*(e_{i+1} - e_i) + R*mu*(e_1+...+e_i) ≡ 0, the wrap
// condition, and zero total sum. Throws std::domain_error when N = 0 and
// std::runtime_error when no exponent lift exists.
CyclicSolution cyclic_solution(int k, const Int& R, const Slope& s);

// True iff the exponents satisfy every congruence of the full system mod |N|
// (the per-row conditions for all k cyclic indices plus zero total sum).
bool cyclic_solution_valid(const std::vector<Int>& exponents, int k,
                           const Int& R, const Slope& s, const Int& N);

// Reference solver: depth-first over all residues at every step (no modular
// inverse shortcuts), returning up to max_solutions full-system solutions in
// lexicographic order. Intended for small |N|.
std::vector<std::vector<Int>> cyclic_solutions_brute(int k, const Int& R,
                                                     const Slope& s,
                                                     size_t max_solutions);

}  // namespace fibercover
