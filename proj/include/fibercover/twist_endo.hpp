#pragma once

#include "fibercover/free_word.hpp"
#include "fibercover/sl2.hpp"
#include "fibercover/twist_word.hpp"

namespace fibercover {

// Endomorphism of the rank-2 free group given by the images of x and y.
struct TwistEndo {
  FreeWord img_x{1};
  FreeWord img_y{2};

  bool operator==(const TwistEndo&) const = default;
};

TwistEndo endo_identity();

// Substitutes the images of e into each letter of w.
FreeWord endo_apply(const TwistEndo& e, const FreeWord& w);

// Composition with (f then g) semantics chosen so that the abelianization of
// twist_endo(word) is the left-to-right product of the block matrices.
TwistEndo endo_compose(const TwistEndo& outer, const TwistEndo& inner);

// Endomorphism of a single twist generator power.
TwistEndo twist_gen_endo(bool is_y, long long exp);

TwistEndo twist_endo(const TwistWord& w);

Mat2 endo_abelianization(const TwistEndo& e);
bool endo_is_automorphism(const TwistEndo& e);

// The boundary commutator convention: beta = x y x^-1 y^-1.
FreeWord boundary_word();

}  // namespace fibercover
