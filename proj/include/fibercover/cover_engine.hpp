#pragma once

#include "fibercover/perm.hpp"
#include "fibercover/twist_endo.hpp"
#include "fibercover/types.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fibercover {

// Strip-decomposed fiber cover: `rows` horizontal strips of `width` squares.
// sigma[i] is the column permutation the x-curve induces on row i (0-based).
// Sheet (i, j) has index i * width + j.
struct CutData {
  int rows = 0;
  int width = 0;
  std::vector<Perm> sigma;
};

// Permutation model of the cover: the fiber-group generators act on sheets,
// words acting left to right.
struct CoverRep {
  int degree = 0;
  Perm px;
  Perm py;
  int rows = 0;   // strip structure when known (0 otherwise)
  int width = 0;
};

struct DisconnectedCover : std::runtime_error {
  std::vector<std::vector<int>> orbit_classes;
  explicit DisconnectedCover(const std::string& msg,
                             std::vector<std::vector<int>> orbs)
      : std::runtime_error(msg), orbit_classes(std::move(orbs)) {}
};

bool cut_data_valid(const CutData& c);

// Throws DisconnectedCover when the column permutations do not act
// transitively (the cover splits along its column orbits).
CoverRep build_rep(const CutData& c);

Perm perm_of_word(const CoverRep& rep, const FreeWord& w);

// Product of the row permutations sigma[0] .. sigma[i], applied left to right.
Perm row_prefix(const CutData& c, int i);

// Per-row action of the boundary commutator: column j of row i maps to
// sigma[i+1]^-1(sigma[i](j)).
Perm row_boundary_map(const CutData& c, int i);

// Condition 1: each sigma[i] commutes with the product of its predecessors.
bool check_condition_one(const CutData& c);
// Condition 2: the full product of row permutations is the identity.
bool check_condition_two(const CutData& c);
// Condition 3 (depends on the twist sum R and the filling slope): for every
// row, prefix^(R mu) followed by the row boundary map^lambda is trivial.
bool check_condition_three(const CutData& c, const Int& R, const Slope& s);

// Row-preserving sheet map acting on row i as prefix[i]^R; intertwines the
// lifted monodromy when conditions 1 and 2 hold.
Perm canonical_intertwiner(const CutData& c, const Int& R);

// True when conj(tau, P_g) = P_{h(g)} for g = x, y.
bool is_intertwiner(const CoverRep& rep, const TwistEndo& h, const Perm& tau);

// All sheet maps conjugating the fiber action to its monodromy image,
// sorted; empty when the monodromy does not lift to this cover.
std::vector<Perm> find_intertwiners(const CoverRep& rep, const TwistEndo& h);

// The filling curve lifts closed: tau^mu * P_beta^lambda trivial.
bool surgery_lifts(const CoverRep& rep, const Perm& tau, const Slope& s);

struct SurfaceData {
  int degree = 0;
  Int chi = 0;       // Euler characteristic of the cover surface
  int punctures = 0; // boundary circles = cycles of P_beta
  int b1_surface = 0;
};

SurfaceData euler_and_boundary(const CoverRep& rep);

// Boundary tori of the filled-in mapping torus: orbits of <P_beta, tau>.
int boundary_tori(const CoverRep& rep, const Perm& tau);

}  // namespace fibercover
