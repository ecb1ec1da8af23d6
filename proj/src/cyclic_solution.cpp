#include "fibercover/cyclic_solution.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

namespace fibercover {

namespace {

Int mod_reduce(const Int& v, const Int& m) {
  Int r = v % m;
  if (r < 0) r += m;
  return r;
}

// (g, x) with g = gcd(a, m) >= 1 for m >= 1, and a*x ≡ g (mod m).
std::pair<Int, Int> ext_gcd_mod(const Int& a, const Int& m) {
  Int old_r = a, r = m;
  Int old_x = 1, x = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
  }
  return {old_r, old_x};
}

}  // namespace

Int cyclic_modulus(int k, const Int& R, const Slope& s) {
  if (k < 3) throw std::invalid_argument("cyclic family needs k >= 3");
  const Int Rmu = R * s.mu;
  const Int la = s.lambda;
  // Scaled solution of the triangular chain: f_1 = 1,
  // f_{i+1} = la*f_i - Rmu * sum_{j<=i} la^{i-j} f_j.
  std::vector<Int> f{Int(1)};
  Int weighted = 1;  // sum_{j<=i} la^{i-j} f_j, maintained incrementally
  for (int i = 1; i < k; ++i) {
    Int next = la * f.back() - Rmu * weighted;
    f.push_back(next);
    weighted = weighted * la + next;
  }
  // Closing the cycle pairs the exponents palindromically; the halved sums
  // below are the surviving constraint.
  Int closing = 0;
  if (k % 2 == 0) {
    const int half = k / 2;
    for (int j = 1; j <= half; ++j) closing = closing * la + f[j - 1];
  } else {
    const int J = (k + 1) / 2;
    for (int j = 1; j < J; ++j) closing = closing * la + f[j - 1];
    closing = 2 * closing * la + f[J - 1];
  }
  return -closing;
}

bool cyclic_solution_valid(const std::vector<Int>& exponents, int k,
                           const Int& R, const Slope& s, const Int& N) {
  if (static_cast<int>(exponents.size()) != k || N == 0) return false;
  const Int M = abs_int(N);
  const Int Rmu = R * s.mu;
  const Int la = s.lambda;
  Int total = 0;
  for (const Int& e : exponents) total += e;
  if (mod_reduce(total, M) != 0) return false;
  Int prefix = 0;
  for (int i = 0; i < k; ++i) {
    prefix += exponents[i];
    const Int& next = exponents[(i + 1) % k];
    if (mod_reduce(Rmu * prefix + la * (next - exponents[i]), M) != 0)
      return false;
  }
  return true;
}

CyclicSolution cyclic_solution(int k, const Int& R, const Slope& s) {
  const Int N = cyclic_modulus(k, R, s);
  if (N == 0) throw std::domain_error("degenerate cyclic family: zero modulus");
  const Int M = abs_int(N);
  const Int Rmu = R * s.mu;
  const Int la = mod_reduce(Int(s.lambda), M);

  // Parameter-free exponent patterns satisfy the congruences identically for
  // k = 3 and k = 4; preferring them keeps the cut geometry of the doubled
  // covers independent of search order even when every residue is admissible.
  {
    std::vector<std::vector<long long>> canon;
    if (k == 3) canon.push_back({1, -2, 1});
    if (k == 4) canon.push_back({1, -1, -1, 1});
    for (const auto& pattern : canon) {
      std::vector<Int> e;
      for (long long v : pattern) e.push_back(mod_reduce(Int(v), M));
      if (cyclic_solution_valid(e, k, R, s, N)) return {N, std::move(e)};
    }
  }

  // Chain step: la*e_{i+1} ≡ la*e_i - Rmu*prefix_i (mod M). With
  // g = gcd(la, M) the solutions are x0 + t*(M/g) for t = 0..g-1.
  const auto [g, bezout] = ext_gcd_mod(la, M);
  const Int step = M / g;
  if (g > 4096)
    throw std::runtime_error("exponent lift branching too large: gcd " +
                             g.str());

  std::vector<Int> e{mod_reduce(Int(1), M)};
  std::vector<Int> prefix{e[0]};
  long long budget = 1'000'000;

  std::function<bool()> descend = [&]() -> bool {
    if (--budget < 0)
      throw std::runtime_error("exponent lift search budget exhausted");
    if (static_cast<int>(e.size()) == k)
      return cyclic_solution_valid(e, k, R, s, N);
    const Int c = mod_reduce(la * e.back() - Rmu * prefix.back(), M);
    if (c % g != 0) return false;
    const Int x0 = mod_reduce((c / g) * bezout, step);
    for (Int t = 0; t < g; ++t) {
      Int cand = mod_reduce(x0 + t * step, M);
      e.push_back(cand);
      prefix.push_back(mod_reduce(prefix.back() + cand, M));
      if (descend()) return true;
      e.pop_back();
      prefix.pop_back();
    }
    return false;
  };

  if (!descend())
    throw std::runtime_error("cyclic exponent system has no lift mod " +
                             M.str());
  CyclicSolution out;
  out.N = N;
  out.exponents = e;
  return out;
}

std::vector<std::vector<Int>> cyclic_solutions_brute(int k, const Int& R,
                                                     const Slope& s,
                                                     size_t max_solutions) {
  const Int N = cyclic_modulus(k, R, s);
  std::vector<std::vector<Int>> found;
  if (N == 0) return found;
  const Int M = abs_int(N);
  const Int Rmu = R * s.mu;
  const Int la = s.lambda;

  std::vector<Int> e{mod_reduce(Int(1), M)};
  std::vector<Int> prefix{e[0]};
  std::function<void()> descend = [&]() {
    if (found.size() >= max_solutions) return;
    if (static_cast<int>(e.size()) == k) {
      if (cyclic_solution_valid(e, k, R, s, N)) found.push_back(e);
      return;
    }
    for (Int cand = 0; cand < M; ++cand) {
      if (mod_reduce(Rmu * prefix.back() + la * (cand - e.back()), M) != 0)
        continue;
      e.push_back(cand);
      prefix.push_back(mod_reduce(prefix.back() + cand, M));
      descend();
      e.pop_back();
      prefix.pop_back();
      if (found.size() >= max_solutions) return;
    }
  };
  descend();
  return found;
}

}  // namespace fibercover
