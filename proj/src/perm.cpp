#include "fibercover/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fibercover {

Perm::Perm(int n) : img(n) { std::iota(img.begin(), img.end(), 0); }

Perm::Perm(std::vector<int> images) : img(std::move(images)) {}

bool Perm::is_identity() const {
  for (int p = 0; p < degree(); ++p)
    if (img[p] != p) return false;
  return true;
}

bool Perm::is_valid() const {
  std::vector<char> seen(img.size(), 0);
  for (int v : img) {
    if (v < 0 || v >= degree() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm perm_identity(int n) { return Perm(n); }

Perm mul(const Perm& a, const Perm& b) {
  Perm r;
  r.img.resize(a.img.size());
  for (int p = 0; p < a.degree(); ++p) r.img[p] = b.img[a.img[p]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r;
  r.img.resize(p.img.size());
  for (int q = 0; q < p.degree(); ++q) r.img[p.img[q]] = q;
  return r;
}

Perm conj(const Perm& t, const Perm& p) { return mul(mul(t, p), inverse(t)); }

Perm perm_power(const Perm& p, const Int& e) {
  const int n = p.degree();
  Perm r(n);
  std::vector<int> cyc;
  std::vector<char> done(n, 0);
  for (int start = 0; start < n; ++start) {
    if (done[start]) continue;
    cyc.clear();
    for (int q = start; !done[q]; q = p.img[q]) {
      done[q] = 1;
      cyc.push_back(q);
    }
    const long long len = static_cast<long long>(cyc.size());
    long long shift = to_ll(((e % len) + len) % len);
    for (long long i = 0; i < len; ++i)
      r.img[cyc[i]] = cyc[(i + shift) % len];
  }
  return r;
}

Int perm_order(const Perm& p) {
  Int ord = 1;
  std::vector<char> done(p.degree(), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (done[start]) continue;
    Int len = 0;
    for (int q = start; !done[q]; q = p.img[q]) {
      done[q] = 1;
      ++len;
    }
    ord = ord / gcd_int(ord, len) * len;
  }
  return ord;
}

bool commute(const Perm& a, const Perm& b) { return mul(a, b) == mul(b, a); }

std::vector<std::vector<int>> cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> done(p.degree(), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (done[start]) continue;
    std::vector<int> cyc;
    for (int q = start; !done[q]; q = p.img[q]) {
      done[q] = 1;
      cyc.push_back(q);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

int cycle_count(const Perm& p) { return static_cast<int>(cycles(p).size()); }

std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int degree) {
  std::vector<Perm> both = gens;
  for (const Perm& g : gens) both.push_back(inverse(g));
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree, 0);
  for (int start = 0; start < degree; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit{start};
    seen[start] = 1;
    for (size_t k = 0; k < orbit.size(); ++k) {
      for (const Perm& g : both) {
        int q = g.img[orbit[k]];
        if (!seen[q]) {
          seen[q] = 1;
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(const std::vector<Perm>& gens, int degree) {
  auto obs = orbits(gens, degree);
  return obs.size() == 1;
}

Perm make_cycle(int n, const std::vector<int>& cyc) {
  Perm r(n);
  for (size_t i = 0; i < cyc.size(); ++i)
    r.img[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return r;
}

std::string perm_str(const Perm& p) {
  std::ostringstream os;
  os << "[";
  for (int q = 0; q < p.degree(); ++q) {
    if (q) os << " ";
    os << p.img[q] + 1;
  }
  os << "]";
  return os.str();
}

}  // namespace fibercover
