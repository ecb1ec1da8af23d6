#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fibercover/snf.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace fibercover;

namespace {

IntMat from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMat m = intmat(static_cast<int>(rows.size()),
                    rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

IntMat random_mat(std::mt19937_64& rng, int max_dim, int span) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_int_distribution<long long> entry(-span, span);
  IntMat m = intmat(dim(rng), dim(rng));
  for (Int& v : m.a) v = entry(rng);
  return m;
}

// gcd of all k-by-k minors; zero when every minor vanishes.
Int minor_gcd(const IntMat& m, int k) {
  std::vector<int> ri(k), ci(k);
  Int g = 0;
  std::vector<int> rsel(m.rows, 0), csel(m.cols, 0);
  std::fill(rsel.end() - k, rsel.end(), 1);
  do {
    int r = 0;
    for (int i = 0; i < m.rows; ++i)
      if (rsel[i]) ri[r++] = i;
    std::fill(csel.begin(), csel.end(), 0);
    std::fill(csel.end() - k, csel.end(), 1);
    do {
      int c = 0;
      for (int j = 0; j < m.cols; ++j)
        if (csel[j]) ci[c++] = j;
      IntMat sub = intmat(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
      g = gcd_int(g, intmat_det(sub));
    } while (std::next_permutation(csel.begin(), csel.end()));
  } while (std::next_permutation(rsel.begin(), rsel.end()));
  return abs_int(g);
}

bool is_unimodular(const IntMat& m) {
  Int d = intmat_det(m);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("dense integer matrix helpers") {
  IntMat id = intmat_identity(3);
  IntMat m = from_rows({{1, 2, 0}, {0, 1, 4}, {0, 0, 1}});
  CHECK(intmat_mul(id, m) == m);
  CHECK(intmat_mul(m, id) == m);
  CHECK(intmat_det(m) == 1);
  CHECK(intmat_det(from_rows({{2, 0}, {0, 3}})) == 6);
  CHECK(intmat_det(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(intmat_det(from_rows({{1, 2}, {2, 4}})) == 0);
  IntMat prod = intmat_mul(from_rows({{1, 2}, {3, 4}}), from_rows({{0, 1}, {1, 0}}));
  CHECK(prod == from_rows({{2, 1}, {4, 3}}));
}

TEST_CASE("diagonal reduction merges coprime factors") {
  SNFResult r = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  REQUIRE(r.diag.size() == 2);
  CHECK(r.diag[0] == 1);
  CHECK(r.diag[1] == 6);
  CHECK(r.rank == 2);
}

TEST_CASE("known reductions") {
  {
    SNFResult r = smith_normal_form(from_rows({{1, 0}, {0, 0}}));
    CHECK(r.rank == 1);
    REQUIRE(r.diag.size() == 1);
    CHECK(r.diag[0] == 1);
  }
  {
    // zero matrix has empty invariant-factor list
    SNFResult r = smith_normal_form(intmat(3, 2));
    CHECK(r.rank == 0);
    CHECK(r.diag.empty());
  }
  {
    SNFResult r = smith_normal_form(from_rows({{6, 4}, {4, 6}}));
    REQUIRE(r.diag.size() == 2);
    CHECK(r.diag[0] == 2);
    CHECK(r.diag[1] == 10);
  }
  {
    // wide matrix with a free column
    SNFResult r = smith_normal_form(from_rows({{2, 4, 6}}));
    REQUIRE(r.diag.size() == 1);
    CHECK(r.diag[0] == 2);
  }
}

TEST_CASE("invariant factors match the minor-gcd characterization") {
  std::mt19937_64 rng(424242);
  int checked = 0;
  while (checked < 1000) {
    IntMat m = random_mat(rng, 4, 3);
    SNFResult r = smith_normal_form(m);
    // d1 ... dk = gcd of k x k minors
    Int prod = 1;
    bool all_match = true;
    for (int k = 1; k <= static_cast<int>(r.diag.size()); ++k) {
      prod *= r.diag[k - 1];
      if (minor_gcd(m, k) != prod) all_match = false;
    }
    CHECK(all_match);
    // minors one past the rank all vanish
    if (r.rank < std::min(m.rows, m.cols))
      CHECK(minor_gcd(m, r.rank + 1) == 0);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("divisibility chain and positivity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    SNFResult r = smith_normal_form(random_mat(rng, 5, 9));
    for (size_t i = 0; i < r.diag.size(); ++i) {
      CHECK(r.diag[i] > 0);
      if (i + 1 < r.diag.size()) CHECK(r.diag[i + 1] % r.diag[i] == 0);
    }
    CHECK(static_cast<int>(r.diag.size()) == r.rank);
  }
}

TEST_CASE("transformation witnesses are unimodular and exact") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    IntMat m = random_mat(rng, 4, 6);
    SNFResult r = smith_normal_form(m, true);
    REQUIRE(r.witnesses);
    CHECK(r.U.rows == m.rows);
    CHECK(r.V.cols == m.cols);
    CHECK(is_unimodular(r.U));
    CHECK(is_unimodular(r.V));
    CHECK(intmat_mul(intmat_mul(r.U, m), r.V) == r.D);
    for (int i = 0; i < r.D.rows; ++i)
      for (int j = 0; j < r.D.cols; ++j)
        if (i != j) CHECK(r.D.at(i, j) == 0);
  }
}

TEST_CASE("kernel basis spans the solution lattice") {
  {
    auto k = kernel_basis(from_rows({{1, 2}, {2, 4}}));
    REQUIRE(k.size() == 1);
    // saturated: (2, -1), not a multiple of it
    Int g = gcd_int(abs_int(k[0][0]), abs_int(k[0][1]));
    CHECK(g == 1);
    CHECK(k[0][0] * 1 + k[0][1] * 2 == 0);
  }
  {
    auto k = kernel_basis(intmat_identity(3));
    CHECK(k.empty());
  }
  std::mt19937_64 rng(3333);
  for (int trial = 0; trial < 200; ++trial) {
    IntMat m = random_mat(rng, 4, 4);
    SNFResult r = smith_normal_form(m);
    auto k = kernel_basis(m);
    CHECK(static_cast<int>(k.size()) == m.cols - r.rank);
    for (const auto& v : k) {
      REQUIRE(static_cast<int>(v.size()) == m.cols);
      bool nonzero = false;
      for (const Int& x : v) nonzero = nonzero || x != 0;
      CHECK(nonzero);
      for (int i = 0; i < m.rows; ++i) {
        Int dot = 0;
        for (int j = 0; j < m.cols; ++j) dot += m.at(i, j) * v[j];
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("determinant equals the signed product of invariant factors") {
  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<long long> entry(-4, 4);
    int n = dim(rng);
    IntMat m = intmat(n, n);
    for (Int& v : m.a) v = entry(rng);
    Int d = intmat_det(m);
    SNFResult r = smith_normal_form(m);
    if (d == 0) {
      CHECK(r.rank < n);
    } else {
      Int prod = 1;
      for (const Int& f : r.diag) prod *= f;
      CHECK(prod == abs_int(d));
    }
  }
}
