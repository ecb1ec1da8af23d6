#pragma once

#include "fibercover/types.hpp"

#include <vector>

namespace fibercover {

// Dense integer matrix, row major, exact arithmetic.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }
  bool operator==(const IntMat&) const = default;
};

IntMat intmat(int rows, int cols);
IntMat intmat_identity(int n);
IntMat intmat_mul(const IntMat& x, const IntMat& y);

// Diagonal d1 | d2 | ... | dr (all positive), with unimodular witnesses
// U * input * V = D when requested.
struct SNFResult {
  IntMat D;
  std::vector<Int> diag;  // the nonzero invariant factors
  int rank = 0;
  bool witnesses = false;
  IntMat U;
  IntMat V;
};

SNFResult smith_normal_form(const IntMat& m, bool want_witnesses = false);

// Basis of { v : m v = 0 } over the integers (saturated: a Z-basis of the
// kernel lattice), one vector per entry.
std::vector<std::vector<Int>> kernel_basis(const IntMat& m);

Int intmat_det(const IntMat& m);  // square matrices only

}  // namespace fibercover
