#pragma once

#include "fibercover/free_word.hpp"
#include "fibercover/presentation.hpp"
#include "fibercover/slope_calculus.hpp"
#include "fibercover/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fibercover {

// Row template for one cover construction: row_gen holds one signed free
// generator index per row (0 places the identity on that row, +g / -g the
// image of generator g or its inverse). Direct constructions (the cyclic
// doubled-cover family) carry no template and are assembled numerically.
struct CasePlan {
  std::string case_name;      // construction label: "1", "2a", ..., "5b"
  CaseTag guard = CaseTag::I; // slope hypothesis that admits the construction
  int m = 0;                  // rows
  std::vector<int> row_gen;
  int num_free = 0;
  // When nonempty, exact-order requirements are kept only for power relators
  // over these single generators; otherwise every power relator contributes.
  std::vector<int> exact_only_gens;
  // (word, bound): the witness must give the word order strictly above bound.
  std::vector<std::pair<FreeWord, Int>> min_orders;
  bool direct_construction = false;
  int cyclic_k = 0;  // block count for the cyclic family
};

// Residual relator system of a template at a concrete (R, slope), with the
// order requirements a quotient witness must certify.
struct PlanSystem {
  GroupPresentation pres;
  std::vector<std::pair<FreeWord, Int>> exact_orders;
  std::vector<std::pair<FreeWord, Int>> min_orders;
};

// The fixed row assignments for a construction; m is required (and validated)
// only for the families whose row count varies ("2b", "4a", "4b").
CasePlan case_template(const std::string& case_name, int m);

// Word placed on row i by the template.
FreeWord row_word(const CasePlan& p, int i);

// Derives the template's relators: the row-commutation conditions, the total
// product condition, and the per-row surgery conditions
// prefix_i^{R mu} (w_{i+1} w_i^{-1})^lambda, freely reduced and deduplicated
// up to rotation and inversion, plus the plan's extra relators.
PlanSystem plan_relators(const CasePlan& p, const Int& R, const Slope& s);

// Canonical form of a relator under rotation and inversion (used for
// deduplication; empty input stays empty).
FreeWord cyclic_canonical(const FreeWord& w);

// The seven-row templates carry a two-generator abelian block whose relation
// lattice is [[R mu - lambda, lambda], [R mu, u]] with u = R mu - 2 lambda
// ("5a", block generators g2, g3) or u = R mu - lambda ("5b", block
// generators g1, g2).  Whenever gcd(lambda, u) = 1 -- equivalently
// gcd(lambda, R) = 1 -- the block relations force the second block generator
// to be a power of the first, and the residual system collapses to the
// triangle group <a, b | a^p, b^block_order, (ab)^|lambda|> on the remaining
// two generators.  The guards make that triangle hyperbolic, and the
// two-generator search is far cheaper than the generic three-generator one.
struct Case5Reduction {
  bool applies = false;
  Int p = 0;            // exact order of the generator outside the block
  Int block_order = 0;  // exact order of the surviving block generator
  Int la_abs = 0;       // exact order of their product
  Int power = 0;        // eliminated generator = surviving generator ^ power
};

Case5Reduction case5_reduction(const std::string& case_name, const Int& R,
                               const Slope& s);

// If w is a literal power base^e with e >= 2, returns the primitive base and
// the exponent; otherwise returns {empty, 0}.
std::pair<FreeWord, Int> literal_power(const FreeWord& w);

struct PlanSet {
  std::vector<CasePlan> plans;        // guard-passing, in trial order
  std::vector<std::string> refusals;  // one line per rejected construction
  bool any_degenerate = false;        // a guard hit a zero denominator
};

// All applicable constructions for divisors m of n with 4 <= m <= max_rows,
// ordered by ascending m with the documented within-m priority.
PlanSet plan_cover(const Int& R, const Int& n, const Slope& s,
                   int max_rows = 64);

}  // namespace fibercover
