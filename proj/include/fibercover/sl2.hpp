#pragma once

#include "fibercover/twist_word.hpp"
#include "fibercover/types.hpp"

#include <string>

namespace fibercover {

struct Mat2 {
  Int a = 1, b = 0, c = 0, d = 1;  // [[a,b],[c,d]]

  bool operator==(const Mat2&) const = default;
};

Mat2 mat2(Int a, Int b, Int c, Int d);
Mat2 mat2_identity();
Mat2 mat2_mul(const Mat2& m, const Mat2& n);
Int mat2_det(const Mat2& m);
Mat2 mat2_inverse(const Mat2& m);  // requires det = +-1
Mat2 mat2_pow(const Mat2& m, const Int& e);
Mat2 mat2_neg(const Mat2& m);
std::string mat2_str(const Mat2& m);

// Twist generator images: Dx -> [[1,1],[0,1]], Dy -> [[1,0],[1,1]].
Mat2 twist_gen_matrix(bool is_y);

// Product of the per-block matrices in word order; columns are the
// abelianized images of (x, y).
Mat2 monodromy_matrix(const TwistWord& w);

// True iff C A C^-1 = B exactly; C must have determinant +-1.
bool sl2_conjugacy_witness_check(const Mat2& A, const Mat2& B, const Mat2& C);

}  // namespace fibercover
