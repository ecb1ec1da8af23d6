#pragma once

#include "fibercover/types.hpp"

#include <vector>

namespace fibercover {

// Permutation of {0..n-1} stored as an image table. Products compose
// left-to-right: mul(a, b) applies a first, then b.
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(int n);
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int p) const { return img[p]; }
  bool operator==(const Perm&) const = default;
  bool operator<(const Perm& o) const { return img < o.img; }

  bool is_identity() const;
  bool is_valid() const;
};

Perm perm_identity(int n);
Perm mul(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
Perm conj(const Perm& t, const Perm& p);  // t * p * t^-1 in left-to-right products
Perm perm_power(const Perm& p, const Int& e);
Int perm_order(const Perm& p);
bool commute(const Perm& a, const Perm& b);

std::vector<std::vector<int>> cycles(const Perm& p);
int cycle_count(const Perm& p);

// Orbits of the group generated by the given permutations (all same degree).
std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int degree);
bool is_transitive(const std::vector<Perm>& gens, int degree);

// Permutation of n points cycling the listed points in order, fixing the
// rest, e.g. make_cycle(5, {0,2,4}) = (0 2 4) on 5 points.
Perm make_cycle(int n, const std::vector<int>& cyc);

std::string perm_str(const Perm& p);  // one-line image list, 1-based

}  // namespace fibercover
