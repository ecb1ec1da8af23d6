#include "fibercover/twist_endo.hpp"

#include <cstdlib>

namespace fibercover {

TwistEndo endo_identity() { return TwistEndo{}; }

FreeWord endo_apply(const TwistEndo& e, const FreeWord& w) {
  FreeWord out;
  for (int letter : w) {
    const FreeWord& img = std::abs(letter) == 1 ? e.img_x : e.img_y;
    FreeWord piece = letter > 0 ? img : word_inverse(img);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return free_reduce(out);
}

TwistEndo endo_compose(const TwistEndo& outer, const TwistEndo& inner) {
  return TwistEndo{endo_apply(outer, inner.img_x),
                   endo_apply(outer, inner.img_y)};
}

TwistEndo twist_gen_endo(bool is_y, long long exp) {
  TwistEndo step;
  if (!is_y)
    step = exp >= 0 ? TwistEndo{{1}, {2, 1}} : TwistEndo{{1}, {2, -1}};
  else
    step = exp >= 0 ? TwistEndo{{2, 1}, {2}} : TwistEndo{{-2, 1}, {2}};
  long long reps = exp < 0 ? -exp : exp;
  TwistEndo acc = endo_identity();
  for (long long i = 0; i < reps; ++i) acc = endo_compose(acc, step);
  return acc;
}

TwistEndo twist_endo(const TwistWord& w) {
  TwistEndo acc = endo_identity();
  for (const TwistBlock& b : w.blocks)
    acc = endo_compose(acc, twist_gen_endo(b.is_y, b.exp));
  return acc;
}

Mat2 endo_abelianization(const TwistEndo& e) {
  auto vx = abelianize(e.img_x, 2);
  auto vy = abelianize(e.img_y, 2);
  return Mat2{vx[0], vy[0], vx[1], vy[1]};
}

bool endo_is_automorphism(const TwistEndo& e) {
  Int det = mat2_det(endo_abelianization(e));
  return det == 1 || det == -1;
}

FreeWord boundary_word() { return FreeWord{1, 2, -1, -2}; }

}  // namespace fibercover
