#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fibercover/cover_engine.hpp"
#include "fibercover/homology.hpp"
#include "fibercover/low_index.hpp"
#include "fibercover/presentation.hpp"
#include "fibercover/reidemeister_schreier.hpp"
#include "fibercover/sl2.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace fibercover;

namespace {

TwistWord W(const std::string& text) { return parse_twist_word(text); }

Perm random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(img);
}

CosetAction random_f2_action(int degree, std::mt19937_64& rng) {
  for (;;) {
    CosetAction act;
    act.degree = degree;
    act.gen_action = {random_perm(degree, rng), random_perm(degree, rng)};
    if (is_transitive(act.gen_action, degree)) return act;
  }
}

FreeWord expand_sub_word(const RSData& rs, const FreeWord& w) {
  FreeWord out;
  for (int letter : w) {
    FreeWord piece = rs.sub_gen_words[static_cast<size_t>(std::abs(letter)) - 1];
    if (letter < 0) piece = word_inverse(piece);
    out = word_concat(out, piece);
  }
  return free_reduce(out);
}

CoverRep diagonal_cover(int n) {
  CutData c;
  c.rows = n;
  c.width = n;
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  for (int i = 0; i < n; ++i) c.sigma.push_back(make_cycle(n, pts));
  return build_rep(c);
}

}  // namespace

TEST_CASE("abelianization of small presentations") {
  {
    HomologySummary h = homology_of_presentation(free_group_presentation(2));
    CHECK(h.b1 == 2);
    CHECK(h.torsion.empty());
  }
  {
    GroupPresentation p;
    p.num_gens = 1;
    p.relators = {FreeWord{1, 1}};
    HomologySummary h = homology_of_presentation(p);
    CHECK(h.b1 == 0);
    REQUIRE(h.torsion.size() == 1);
    CHECK(h.torsion[0] == 2);
    AbelianInvariants ai = abelian_invariants(p);
    CHECK(ai.b1 == h.b1);
    CHECK(ai.torsion == h.torsion);
  }
  {
    GroupPresentation p;
    p.num_gens = 2;
    p.relators = {FreeWord{1, 1}, FreeWord{2, 2, 2}, FreeWord{1, 2, -1, -2}};
    HomologySummary h = homology_of_presentation(p);
    CHECK(h.b1 == 0);
    REQUIRE(h.torsion.size() == 1);
    CHECK(h.torsion[0] == 6);
  }
}

TEST_CASE("mapping torus of the standard twist pair has infinite cyclic h1") {
  GroupPresentation p = mapping_torus_presentation(W("DxDy"));
  CHECK(p.num_gens == 3);
  CHECK(p.relators.size() == 2);
  HomologySummary h = homology_of_presentation(p);
  CHECK(h.b1 == 1);
  CHECK(h.torsion.empty());
}

TEST_CASE("filling the standard bundle") {
  TwistWord w = W("DxDy");
  {
    // meridian filling collapses everything
    HomologySummary h =
        homology_of_presentation(filled_mapping_torus_presentation(w, {1, 0}));
    CHECK(h.b1 == 0);
    CHECK(h.torsion.empty());
  }
  {
    HomologySummary h =
        homology_of_presentation(filled_mapping_torus_presentation(w, {1, 1}));
    CHECK(h.b1 == 0);
  }
  {
    // multiple of the meridian leaves cyclic torsion
    HomologySummary h =
        homology_of_presentation(filled_mapping_torus_presentation(w, {5, 1}));
    CHECK(h.b1 == 0);
    REQUIRE(h.torsion.size() == 1);
    CHECK(h.torsion[0] == 5);
  }
  {
    // longitude filling keeps the fibration class
    HomologySummary h =
        homology_of_presentation(filled_mapping_torus_presentation(w, {0, 1}));
    CHECK(h.b1 == 1);
  }
}

TEST_CASE("stabilizer of a free action is free of the expected rank") {
  std::mt19937_64 rng(4242);
  GroupPresentation f2 = free_group_presentation(2);
  for (int degree : {1, 2, 3, 5, 8, 12}) {
    CosetAction act = random_f2_action(degree, rng);
    CHECK(action_respects(f2, act));
    RSData rs = reidemeister_schreier(f2, act);
    CHECK(rs.degree == degree);
    CHECK(rs.sub.relators.empty());
    CHECK(rs.sub.num_gens == degree + 1);
    HomologySummary h = homology_of_presentation(rs.sub);
    CHECK(h.b1 == degree + 1);
    CHECK(h.torsion.empty());
    CHECK(static_cast<int>(rs.transversal.size()) == degree);
    CHECK(rs.transversal[0].empty());
  }
}

TEST_CASE("rewriting traces transversal conjugates exactly") {
  std::mt19937_64 rng(515);
  GroupPresentation f2 = free_group_presentation(2);
  std::uniform_int_distribution<int> letter_d(0, 3), len_d(0, 9);
  for (int trial = 0; trial < 40; ++trial) {
    int degree = 2 + trial % 5;
    CosetAction act = random_f2_action(degree, rng);
    RSData rs = reidemeister_schreier(f2, act);
    FreeWord w;
    int len = len_d(rng);
    for (int i = 0; i < len; ++i) {
      static const int alphabet[4] = {1, -1, 2, -2};
      w.push_back(alphabet[letter_d(rng)]);
    }
    w = free_reduce(w);
    for (int start = 0; start < degree; ++start) {
      int end = action_of_word(act, w)(start);
      FreeWord got = expand_sub_word(rs, rs_rewrite(rs, act, w, start));
      FreeWord want = free_reduce(word_concat(
          word_concat(rs.transversal[start], w),
          word_inverse(rs.transversal[end])));
      CHECK(got == want);
    }
  }
}

TEST_CASE("coset actions respect relators or are rejected") {
  GroupPresentation z3;
  z3.num_gens = 1;
  z3.relators = {FreeWord{1, 1, 1}};
  CosetAction good;
  good.degree = 3;
  good.gen_action = {make_cycle(3, {0, 1, 2})};
  CHECK(action_respects(z3, good));
  CosetAction bad;
  bad.degree = 3;
  bad.gen_action = {make_cycle(3, {0, 1})};
  CHECK(!action_respects(z3, bad));
  CHECK(action_of_word(good, FreeWord{1, 1, 1}).is_identity());
  CHECK(action_of_word(good, FreeWord{-1}) == inverse(good.gen_action[0]));
}

TEST_CASE("subgroup enumeration counts for small groups") {
  {
    LowIndexResult r = low_index_actions(free_group_presentation(2), 2, 1000000);
    CHECK(r.complete);
    int deg1 = 0, deg2 = 0;
    for (const CosetAction& a : r.actions) {
      if (a.degree == 1) ++deg1;
      if (a.degree == 2) ++deg2;
      CHECK(is_transitive(a.gen_action, a.degree));
    }
    CHECK(deg1 == 1);
    CHECK(deg2 == 3);
  }
  {
    LowIndexResult r = low_index_actions(free_group_presentation(1), 5, 1000000);
    CHECK(r.complete);
    CHECK(r.actions.size() == 5);  // one cyclic action per degree
    std::vector<int> degs;
    for (const CosetAction& a : r.actions) degs.push_back(a.degree);
    CHECK(degs == std::vector<int>{1, 2, 3, 4, 5});
  }
  {
    LowIndexResult r =
        low_index_actions_of_degree(free_group_presentation(2), 2, 1000000, 64);
    CHECK(r.actions.size() == 3);
    LowIndexResult capped =
        low_index_actions_of_degree(free_group_presentation(2), 2, 1000000, 2);
    CHECK(capped.actions.size() == 2);
  }
  {
    GroupPresentation z3;
    z3.num_gens = 1;
    z3.relators = {FreeWord{1, 1, 1}};
    LowIndexResult r = low_index_actions(z3, 4, 1000000);
    CHECK(r.complete);
    REQUIRE(r.actions.size() == 2);  // trivial and regular
    CHECK(r.actions[0].degree == 1);
    CHECK(r.actions[1].degree == 3);
  }
}

TEST_CASE("degree-one cover reproduces the abelianized monodromy") {
  for (const char* text : {"DxDy", "DxDy^4", "Dy^5Dx^-1", "Dx^2Dy^-4DxDy^-4Dx"}) {
    TwistWord w = W(text);
    CutData c;
    c.rows = 1;
    c.width = 1;
    c.sigma = {perm_identity(1)};
    CoverRep rep = build_rep(c);
    IntMat a = induced_fiber_action_matrix(w, rep, perm_identity(1));
    REQUIRE(a.rows == 2);
    REQUIRE(a.cols == 2);
    Mat2 m = monodromy_matrix(w);
    CHECK(a.at(0, 0) == m.a);
    CHECK(a.at(0, 1) == m.b);
    CHECK(a.at(1, 0) == m.c);
    CHECK(a.at(1, 1) == m.d);
    CHECK(wang_b1(a) ==
          homology_of_presentation(mapping_torus_presentation(w)).b1);
  }
}

TEST_CASE("torus-fiber count from a trivial action") {
  IntMat id2 = intmat_identity(2);
  CHECK(wang_b1(id2) == 3);
  IntMat a = intmat(2, 2);
  a.at(0, 0) = 2; a.at(0, 1) = 1; a.at(1, 0) = 1; a.at(1, 1) = 1;
  CHECK(wang_b1(a) == 1);
  IntMat par = intmat_identity(2);
  par.at(0, 1) = 3;  // parabolic: one fixed direction
  CHECK(wang_b1(par) == 2);
}

TEST_CASE("cover homology agrees between rewriting and the fiber action") {
  for (int n : {2, 3}) {
    CoverRep rep = diagonal_cover(n);
    TwistWord w = W("DxDy");
    std::vector<Perm> taus = find_intertwiners(rep, twist_endo(w));
    REQUIRE(!taus.empty());
    for (size_t i = 0; i < taus.size() && i < 3; ++i) {
      HomologySummary rs_h = b1_unfilled_cover(w, rep, taus[i]);
      int wang = wang_b1(induced_fiber_action_matrix(w, rep, taus[i]));
      CHECK(rs_h.b1 == wang);
    }
  }
}

TEST_CASE("filled cover homology matches a direct stabilizer computation") {
  CoverRep rep = diagonal_cover(2);
  TwistWord w = W("DxDy");
  std::vector<Perm> taus = find_intertwiners(rep, twist_endo(w));
  REQUIRE(!taus.empty());
  Perm tau = taus[0];
  long long ord = static_cast<long long>(to_ll(perm_order(tau)));
  Slope s{ord, 1};
  REQUIRE(surgery_lifts(rep, tau, s));

  GroupPresentation filled = filled_mapping_torus_presentation(w, s);
  CosetAction act;
  act.degree = rep.degree;
  act.gen_action = {rep.px, rep.py, tau};
  REQUIRE(action_respects(filled, act));
  HomologySummary direct =
      homology_of_presentation(reidemeister_schreier(filled, act).sub);
  HomologySummary engine = b1_filled_cover(w, s, rep, tau);
  CHECK(engine.b1 == direct.b1);
  CHECK(engine.torsion == direct.torsion);
}

TEST_CASE("fixed classes are split from boundary classes") {
  {
    // hyperbolic degree-one action: nothing is fixed
    CutData c;
    c.rows = 1;
    c.width = 1;
    c.sigma = {perm_identity(1)};
    CoverRep rep = build_rep(c);
    FixedPeripheral fp = fixed_and_peripheral(W("DxDy"), rep, perm_identity(1));
    CHECK(fp.fix_rank == 0);
    CHECK(fp.boundary_count == 1);
    CHECK(!fp.interior_witness);
  }
  {
    // identity monodromy: the whole fiber homology is fixed
    CutData c;
    c.rows = 1;
    c.width = 1;
    c.sigma = {perm_identity(1)};
    CoverRep rep = build_rep(c);
    TwistWord trivial;
    FixedPeripheral fp = fixed_and_peripheral(trivial, rep, perm_identity(1));
    CHECK(fp.fix_rank == 2);
    CHECK(fp.interior_witness);
    REQUIRE(!fp.witness.empty());
    IntMat a = induced_fiber_action_matrix(trivial, rep, perm_identity(1));
    REQUIRE(static_cast<int>(fp.witness.size()) == a.cols);
    for (int i = 0; i < a.rows; ++i) {
      Int dot = 0;
      for (int j = 0; j < a.cols; ++j)
        dot += (a.at(i, j) - (i == j ? 1 : 0)) * fp.witness[j];
      CHECK(dot == 0);
    }
  }
  {
    CoverRep rep = diagonal_cover(2);
    TwistWord w = W("DxDy");
    std::vector<Perm> taus = find_intertwiners(rep, twist_endo(w));
    REQUIRE(!taus.empty());
    FixedPeripheral fp = fixed_and_peripheral(w, rep, taus[0]);
    CHECK(fp.boundary_count == euler_and_boundary(rep).punctures);
    // the boundary classes sum to zero, so their span drops at least one rank
    CHECK(fp.peripheral_rank < fp.boundary_count);
    CHECK(fp.fix_rank <= euler_and_boundary(rep).b1_surface);
    if (fp.interior_witness) {
      IntMat a = induced_fiber_action_matrix(w, rep, taus[0]);
      for (int i = 0; i < a.rows; ++i) {
        Int dot = 0;
        for (int j = 0; j < a.cols; ++j)
          dot += (a.at(i, j) - (i == j ? 1 : 0)) * fp.witness[j];
        CHECK(dot == 0);
      }
    }
  }
}
