#include "fibercover/sl2.hpp"

#include <sstream>
#include <stdexcept>

namespace fibercover {

Mat2 mat2(Int a, Int b, Int c, Int d) {
  return Mat2{std::move(a), std::move(b), std::move(c), std::move(d)};
}

Mat2 mat2_identity() { return Mat2{}; }

Mat2 mat2_mul(const Mat2& m, const Mat2& n) {
  return Mat2{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
              m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Int mat2_det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

Mat2 mat2_inverse(const Mat2& m) {
  Int det = mat2_det(m);
  if (det != 1 && det != -1)
    throw std::domain_error("matrix not invertible over the integers");
  return Mat2{m.d * det, -m.b * det, -m.c * det, m.a * det};
}

Mat2 mat2_pow(const Mat2& m, const Int& e) {
  Mat2 base = e < 0 ? mat2_inverse(m) : m;
  Int reps = abs_int(e);
  Mat2 acc = mat2_identity();
  while (reps > 0) {
    if ((reps & 1) != 0) acc = mat2_mul(acc, base);
    base = mat2_mul(base, base);
    reps >>= 1;
  }
  return acc;
}

Mat2 mat2_neg(const Mat2& m) { return Mat2{-m.a, -m.b, -m.c, -m.d}; }

std::string mat2_str(const Mat2& m) {
  std::ostringstream os;
  os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
  return os.str();
}

Mat2 twist_gen_matrix(bool is_y) {
  return is_y ? Mat2{1, 0, 1, 1} : Mat2{1, 1, 0, 1};
}

Mat2 monodromy_matrix(const TwistWord& w) {
  Mat2 acc = mat2_identity();
  for (const TwistBlock& b : w.blocks)
    acc = mat2_mul(acc, mat2_pow(twist_gen_matrix(b.is_y), Int(b.exp)));
  return acc;
}

bool sl2_conjugacy_witness_check(const Mat2& A, const Mat2& B, const Mat2& C) {
  Int det = mat2_det(C);
  if (det != 1 && det != -1)
    throw std::domain_error("conjugator must have determinant +-1");
  return mat2_mul(mat2_mul(C, A), mat2_inverse(C)) == B;
}

}  // namespace fibercover
