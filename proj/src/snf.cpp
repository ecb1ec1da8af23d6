#include "fibercover/snf.hpp"

#include <stdexcept>
#include <utility>

namespace fibercover {

IntMat intmat(int rows, int cols) {
  IntMat m;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(static_cast<size_t>(rows) * cols, Int(0));
  return m;
}

IntMat intmat_identity(int n) {
  IntMat m = intmat(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat intmat_mul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("intmat_mul shape");
  IntMat r = intmat(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

namespace {

struct Worker {
  IntMat m;
  bool track;
  IntMat u, v;

  Worker(const IntMat& in, bool witnesses) : m(in), track(witnesses) {
    if (track) {
      u = intmat_identity(in.rows);
      v = intmat_identity(in.cols);
    }
  }

  void row_swap(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
    if (track)
      for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void col_swap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
    if (track)
      for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void row_addmul(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < m.cols; ++c) m.at(dst, c) += q * m.at(src, c);
    if (track)
      for (int c = 0; c < u.cols; ++c) u.at(dst, c) += q * u.at(src, c);
  }
  void col_addmul(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < m.rows; ++r) m.at(r, dst) += q * m.at(r, src);
    if (track)
      for (int r = 0; r < v.rows; ++r) v.at(r, dst) += q * v.at(r, src);
  }
  void row_negate(int i) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
    if (track)
      for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }

  bool find_pivot(int t, int& pi, int& pj) {
    bool found = false;
    Int best = 0;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j) {
        const Int& x = m.at(i, j);
        if (x == 0) continue;
        Int ax = abs_int(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  // Clear row t and column t outside the pivot, keeping the pivot at (t,t).
  void eliminate(int t) {
    for (;;) {
      int pi = t, pj = t;
      if (!find_pivot(t, pi, pj)) return;
      row_swap(t, pi);
      col_swap(t, pj);
      bool again = false;
      for (int i = t + 1; i < m.rows; ++i) {
        if (m.at(i, t) == 0) continue;
        Int q = m.at(i, t) / m.at(t, t);
        row_addmul(i, t, -q);
        if (m.at(i, t) != 0) again = true;
      }
      if (again) continue;
      for (int j = t + 1; j < m.cols; ++j) {
        if (m.at(t, j) == 0) continue;
        Int q = m.at(t, j) / m.at(t, t);
        col_addmul(j, t, -q);
        if (m.at(t, j) != 0) again = true;
      }
      if (again) continue;
      // Ensure the pivot divides every remaining entry; if not, fold the
      // offending row into row t and re-run.
      for (int i = t + 1; i < m.rows && !again; ++i)
        for (int j = t + 1; j < m.cols && !again; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            row_addmul(t, i, Int(1));
            again = true;
          }
      if (!again) return;
    }
  }
};

}  // namespace

SNFResult smith_normal_form(const IntMat& in, bool want_witnesses) {
  Worker w(in, want_witnesses);
  int bound = std::min(in.rows, in.cols);
  for (int t = 0; t < bound; ++t) {
    w.eliminate(t);
    if (w.m.at(t, t) == 0) break;
    if (w.m.at(t, t) < 0) w.row_negate(t);
  }
  SNFResult r;
  r.D = w.m;
  for (int t = 0; t < bound && w.m.at(t, t) != 0; ++t)
    r.diag.push_back(w.m.at(t, t));
  r.rank = static_cast<int>(r.diag.size());
  r.witnesses = want_witnesses;
  if (want_witnesses) {
    r.U = std::move(w.u);
    r.V = std::move(w.v);
  }
  return r;
}

std::vector<std::vector<Int>> kernel_basis(const IntMat& m) {
  SNFResult s = smith_normal_form(m, true);
  std::vector<std::vector<Int>> basis;
  for (int j = s.rank; j < m.cols; ++j) {
    std::vector<Int> v(m.cols);
    for (int i = 0; i < m.cols; ++i) v[i] = s.V.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

Int intmat_det(const IntMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("intmat_det square");
  // Fraction-free Gaussian elimination (Bareiss).
  IntMat w = m;
  Int prev = 1;
  Int sign = 1;
  int n = m.rows;
  for (int t = 0; t < n; ++t) {
    int p = -1;
    for (int i = t; i < n; ++i)
      if (w.at(i, t) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != t) {
      for (int c = 0; c < n; ++c) std::swap(w.at(t, c), w.at(p, c));
      sign = -sign;
    }
    for (int i = t + 1; i < n; ++i)
      for (int j = t + 1; j < n; ++j)
        w.at(i, j) =
            (w.at(i, j) * w.at(t, t) - w.at(i, t) * w.at(t, j)) / prev;
    prev = w.at(t, t);
  }
  return sign * w.at(n - 1, n - 1);
}

}  // namespace fibercover
