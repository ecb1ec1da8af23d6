#pragma once

#include "fibercover/case_plan.hpp"
#include "fibercover/cover_engine.hpp"
#include "fibercover/cyclic_solution.hpp"
#include "fibercover/quotient_search.hpp"
#include "fibercover/twist_endo.hpp"

#include <string>
#include <vector>

namespace fibercover {

struct FactoryCaps {
  int degree_cap = 64;             // quotient witness degree cap
  long long node_budget = 2'000'000;
  int regular_cap = 64;            // regular-closure group-order bound
  size_t max_witnesses = 64;
  int width_cap = 4096;            // cyclic family column count |N| cap
  size_t max_cut_candidates = 8;   // doubled-cover cut variants to try
};

// A cover with a verified monodromy lift whose surgery curve lifts closed.
struct AssembledCover {
  CoverRep rep;
  Perm tau;
  CutData cut;            // row data (pre-modification for doubled covers)
  bool modified = false;  // row advance composed with a column cut
  Perm cut_perm;          // the column cut, identity when unmodified
  std::string detail;
};

struct FactoryResult {
  std::vector<AssembledCover> covers;
  bool exhausted = false;  // caps or budget limited the stream
  std::vector<std::string> notes;
};

// Places the witness's generator images on the plan's rows.
CutData assemble_cut_data(const CasePlan& plan, const PermWitness& w);

// Quotient witnesses for the plan's residual relator system at (R, slope).
QuotientResult plan_witnesses(const CasePlan& plan, const Int& R,
                              const Slope& s, const FactoryCaps& caps);

// Validated covers for a row-template plan: every emitted cover passed
// conditions I-III, connectivity, lift existence, and the surgery lift.
FactoryResult template_covers(const CasePlan& plan, const TwistEndo& h,
                              const Int& R, const Slope& s,
                              const FactoryCaps& caps);

// Validated covers for the cyclic doubled family: the plain doubling first,
// then the horizontal-cut variants.
FactoryResult doubled_cyclic_covers(const CasePlan& plan, const TwistEndo& h,
                                    const Int& R, const Slope& s,
                                    const FactoryCaps& caps);

// Dispatch on the plan kind.
FactoryResult factory_covers(const CasePlan& plan, const TwistEndo& h,
                             const Int& R, const Slope& s,
                             const FactoryCaps& caps);

// Column cut candidates for the doubled cover at the given width: for even
// lambda one cyclically non-adjacent transposition, for odd lambda
// (|lambda|-1)/2 disjoint adjacent transpositions at each offset.
std::vector<Perm> cut_candidates(int width, long long lambda,
                                 size_t max_candidates);

// Doubled cover with the column cut composed into the two seam advances
// (rows k-1 -> k and 2k-1 -> 0).
CoverRep doubled_rep_with_cut(const CutData& doubled, int k,
                              const Perm& kappa);

// Convenience forms of the construction entry points:
// The case 2b / 4a residual Coxeter-type systems.
QuotientResult coxeter_quotient(const CasePlan& plan, const Int& R,
                                const Slope& s, const FactoryCaps& caps);
// First validated case 5 cut data; throws std::domain_error on a guard
// violation and std::runtime_error when the stream is empty.
CutData case5_assembly(const std::string& variant, const TwistEndo& h,
                       const Int& R, const Slope& s, const FactoryCaps& caps);
// First validated modified doubled cover for case 3b; same error contract.
AssembledCover case3b_cover(const TwistEndo& h, const Int& R, const Slope& s,
                            const FactoryCaps& caps);

}  // namespace fibercover
