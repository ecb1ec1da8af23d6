#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fibercover/free_word.hpp"
#include "fibercover/sl2.hpp"
#include "fibercover/twist_endo.hpp"
#include "fibercover/twist_word.hpp"

#include <random>
#include <stdexcept>

using namespace fibercover;

namespace {

TwistWord W(const std::string& text) { return parse_twist_word(text); }

TwistWord random_twist_word(std::mt19937_64& rng, int max_blocks) {
  std::uniform_int_distribution<int> nblocks(1, max_blocks);
  std::uniform_int_distribution<int> expd(-4, 4);
  TwistWord w;
  int k = nblocks(rng);
  for (int i = 0; i < k; ++i) {
    int e = 0;
    while (e == 0) e = expd(rng);
    w.blocks.push_back({(i % 2) == 1, e});
  }
  return normalize(w);
}

}  // namespace

TEST_CASE("free words reduce, invert, and concatenate") {
  FreeWord w{1, 2, -2, -1, 2};
  CHECK(free_reduce(w) == FreeWord{2});
  CHECK(is_reduced(free_reduce(w)));
  CHECK(word_inverse(FreeWord{1, 2}) == FreeWord{-2, -1});
  CHECK(word_concat(FreeWord{1, 2}, FreeWord{-2, 1}) == FreeWord{1, 1});
  CHECK(word_pow(FreeWord{1, 2}, 2) == FreeWord{1, 2, 1, 2});
  CHECK(word_pow(FreeWord{1, 2}, -1) == FreeWord{-2, -1});
  CHECK(word_pow(FreeWord{1, 2}, 0).empty());
  CHECK(word_conj(FreeWord{1}, FreeWord{2}) == FreeWord{1, 2, -1});
  CHECK(free_reduce(word_concat(w, word_inverse(w))).empty());
}

TEST_CASE("abelianization counts signed letters") {
  FreeWord w{1, 2, 1, -2, 1, -1};
  std::vector<Int> v = abelianize(w, 2);
  CHECK(v == std::vector<Int>{2, 0});
}

TEST_CASE("twist word parsing accepts the documented grammar") {
  TwistWord w = W("Dx Dy");
  REQUIRE(w.blocks.size() == 2);
  CHECK(w.blocks[0] == TwistBlock{false, 1});
  CHECK(w.blocks[1] == TwistBlock{true, 1});

  // separators may be omitted
  CHECK(W("DxDy") == w);
  CHECK(W("Dx^2 Dy^-4 Dx Dy^-4 Dx").blocks.size() == 5);
  CHECK(W("(Dx Dy)^18").blocks.size() == 36);
  CHECK(W("(DxDy^-1Dx)^2").blocks.size() == 5);  // inner Dx Dx merges

  ParseError err;
  CHECK(!try_parse_twist_word("Dz", &err).has_value());
  CHECK(!try_parse_twist_word("Dx^", &err).has_value());
  CHECK(!try_parse_twist_word("Dx^0", &err).has_value());
  CHECK(!try_parse_twist_word("(Dx Dy", &err).has_value());
  CHECK_THROWS_AS(parse_twist_word("D"), std::runtime_error);
}

TEST_CASE("normalization merges blocks and round-trips through text") {
  TwistWord w = twist_concat(W("Dx^2"), W("Dx^3 Dy"));
  w = normalize(w);
  REQUIRE(w.blocks.size() == 2);
  CHECK(w.blocks[0] == TwistBlock{false, 5});

  std::mt19937_64 rng(12345);
  for (int t = 0; t < 50; ++t) {
    TwistWord r = random_twist_word(rng, 6);
    CHECK(parse_twist_word(twist_str(r)) == r);
    CHECK(normalize(twist_concat(r, twist_inverse(r))).empty());
    CHECK(twist_pow(r, 0).empty());
    CHECK(twist_pow(r, -1) == twist_inverse(r));
  }
}

TEST_CASE("monodromy matrices match the four reference words") {
  CHECK(monodromy_matrix(W("DxDy")) == mat2(2, 1, 1, 1));
  CHECK(monodromy_matrix(W("Dy^5Dx^-1")) == mat2(1, -1, 5, -4));
  CHECK(monodromy_matrix(W("(DxDy^-1Dx)^2")) == mat2(-1, 0, 0, -1));
  CHECK(monodromy_matrix(W("(DxDy)^3")) == mat2(13, 8, 8, 5));
}

TEST_CASE("matrix helpers: det, inverse, powers") {
  Mat2 R = twist_gen_matrix(false), L = twist_gen_matrix(true);
  CHECK(R == mat2(1, 1, 0, 1));
  CHECK(L == mat2(1, 0, 1, 1));
  CHECK(mat2_det(mat2_mul(R, L)) == 1);
  CHECK(mat2_mul(mat2(2, 1, 1, 1), mat2_inverse(mat2(2, 1, 1, 1))) ==
        mat2_identity());
  CHECK(mat2_pow(R, 5) == mat2(1, 5, 0, 1));
  CHECK(mat2_pow(R, -3) == mat2(1, -3, 0, 1));
  CHECK(mat2_pow(mat2(2, 1, 1, 1), 0) == mat2_identity());
  Mat2 C = mat2(0, 1, -1, 3);  // det = 1
  CHECK(mat2_mul(C, mat2_inverse(C)) == mat2_identity());
}

TEST_CASE("conjugation identity between the negated product and the y-dominant word") {
  Mat2 C = mat2(-1, 1, -2, 1);
  Mat2 A = mat2_neg(monodromy_matrix(W("DxDy")));        // -(RL)
  Mat2 B = monodromy_matrix(W("Dy^5Dx^-1"));             // L^5 R^-1
  CHECK(mat2_det(C) == 1);
  CHECK(sl2_conjugacy_witness_check(A, B, C));
  CHECK(mat2_mul(mat2_mul(C, A), mat2_inverse(C)) == B);
  // a wrong conjugator is rejected
  CHECK(!sl2_conjugacy_witness_check(A, B, mat2(1, 1, 0, 1)));
}

TEST_CASE("twist generator action on the fiber group") {
  TwistEndo dx = twist_gen_endo(false, 1);
  CHECK(endo_apply(dx, FreeWord{1}) == FreeWord{1});   // x -> x
  CHECK(endo_apply(dx, FreeWord{2}) == FreeWord{2, 1});  // y -> yx
  CHECK(endo_identity() == TwistEndo{});
  CHECK(twist_endo(TwistWord{}) == endo_identity());

  // image of x under the basic positive word abelianizes to (2, 1), the
  // first column of its monodromy matrix
  TwistEndo h = twist_endo(W("DxDy"));
  CHECK(abelianize(h.img_x, 2) == std::vector<Int>{2, 1});
  CHECK(endo_abelianization(h) == monodromy_matrix(W("DxDy")));
}

TEST_CASE("endomorphism abelianization tracks the matrix product") {
  std::mt19937_64 rng(777);
  for (int t = 0; t < 40; ++t) {
    TwistWord w = random_twist_word(rng, 5);
    TwistEndo h = twist_endo(w);
    CHECK(endo_is_automorphism(h));
    CHECK(endo_abelianization(h) == monodromy_matrix(w));
  }
  CHECK(!endo_is_automorphism(TwistEndo{FreeWord{1}, FreeWord{1}}));
}

TEST_CASE("composition order matches word concatenation") {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 25; ++t) {
    TwistWord a = random_twist_word(rng, 3), b = random_twist_word(rng, 3);
    TwistEndo lhs = twist_endo(twist_concat(a, b));
    TwistEndo rhs = endo_compose(twist_endo(a), twist_endo(b));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("every twist word fixes the boundary commutator up to conjugacy") {
  FreeWord beta = boundary_word();
  CHECK(beta == FreeWord{1, 2, -1, -2});
  CHECK(endo_apply(twist_gen_endo(false, 1), beta) == beta);
  CHECK(endo_apply(twist_gen_endo(true, 1), beta) ==
        word_conj(FreeWord{2}, beta));
  CHECK(endo_apply(endo_identity(), beta) == beta);

  std::mt19937_64 rng(99);
  for (int t = 0; t < 30; ++t) {
    TwistWord w = random_twist_word(rng, 4);
    FreeWord img = endo_apply(twist_endo(w), beta);
    // cyclically reducing the image must recover beta itself
    FreeWord core = img;
    while (core.size() >= 2 && core.front() == -core.back()) {
      core.erase(core.begin());
      core.pop_back();
    }
    bool rotation_of_beta = false;
    for (size_t r = 0; r < core.size() && !rotation_of_beta; ++r) {
      FreeWord rot(core.begin() + r, core.end());
      rot.insert(rot.end(), core.begin(), core.begin() + r);
      rotation_of_beta = (rot == beta);
    }
    CHECK(core.size() == 4);
    CHECK(rotation_of_beta);
  }
}

TEST_CASE("alternating-block invariants: twist sums and gcds") {
  BundleInvariants a = bundle_invariants(W("DxDy"));
  CHECK(a.standard_ok);
  CHECK(a.R == 1);
  CHECK(a.n == 1);

  BundleInvariants b = bundle_invariants(
      twist_pow(W("Dx^2 Dy^-4 Dx Dy^-4 Dx"), 6));
  CHECK(b.standard_ok);
  CHECK(b.R == 24);
  CHECK(b.n == 4);

  BundleInvariants c = bundle_invariants(W("Dy^5Dx^-1"));
  CHECK(c.standard_ok);
  CHECK(c.R == -1);
  CHECK(c.n == 5);
  CHECK(c.swapped_ok);
  CHECK(c.R_swapped == 5);
  CHECK(c.n_swapped == 1);

  // single-generator words lose one variant
  BundleInvariants d = bundle_invariants(W("Dx^3"));
  CHECK(!d.standard_ok);  // no Dy blocks: the gcd set is empty
  CHECK(d.swapped_ok);
  CHECK(d.R_swapped == 0);
  CHECK(d.n_swapped == 3);
}

TEST_CASE("quarter-turn conjugation swaps the twist roles") {
  CHECK(quarter_turn_conjugate(W("Dx^2 Dy^3")) == W("Dy^-2 Dx^-3"));
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 40; ++t) {
    TwistWord w = random_twist_word(rng, 5);
    TwistWord q = quarter_turn_conjugate(w);
    CHECK(quarter_turn_conjugate(q) == w);
    BundleInvariants iw = bundle_invariants(w), iq = bundle_invariants(q);
    CHECK(iq.standard_ok == iw.swapped_ok);
    if (iq.standard_ok) {
      CHECK(iq.R == -iw.R_swapped);
      CHECK(iq.n == iw.n_swapped);
    }
    // quarter-turn conjugate words have conjugate monodromy matrices
    Mat2 J = mat2(0, -1, 1, 0);
    CHECK(monodromy_matrix(q) ==
          mat2_mul(mat2_mul(J, monodromy_matrix(w)), mat2_inverse(J)));
  }
}
