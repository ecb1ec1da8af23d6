#pragma once

#include "fibercover/cover_engine.hpp"
#include "fibercover/presentation.hpp"
#include "fibercover/reidemeister_schreier.hpp"
#include "fibercover/snf.hpp"

#include <vector>

namespace fibercover {

struct HomologySummary {
  int b1 = 0;
  std::vector<Int> torsion;
};

HomologySummary homology_of_presentation(const GroupPresentation& p);

// First homology of the induced cover of the filled (resp. unfilled) bundle,
// computed by rewriting the ambient presentation to the stabilizer of sheet 0
// of the action (P_x, P_y, tau).
HomologySummary b1_filled_cover(const TwistWord& w, const Slope& s,
                                const CoverRep& rep, const Perm& tau);
HomologySummary b1_unfilled_cover(const TwistWord& w, const CoverRep& rep,
                                  const Perm& tau);

// Abelianized action of the lifted monodromy on H1 of the cover surface
// (columns = images of the surface-group generators).
IntMat induced_fiber_action_matrix(const TwistWord& w, const CoverRep& rep,
                                   const Perm& tau);

// Mapping-torus first Betti number from the fiber action: 1 + corank(A - I).
int wang_b1(const IntMat& fiber_action);

struct FixedPeripheral {
  int fix_rank = 0;        // rank of ker(A - I) on cover-surface homology
  int boundary_count = 0;  // boundary circles of the cover surface
  int peripheral_rank = 0; // rank of the span of the boundary classes
  bool interior_witness = false;
  std::vector<Int> witness;  // fixed class outside the peripheral span
};

FixedPeripheral fixed_and_peripheral(const TwistWord& w, const CoverRep& rep,
                                     const Perm& tau);

}  // namespace fibercover
