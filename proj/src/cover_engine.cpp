#include "fibercover/cover_engine.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fibercover {

bool cut_data_valid(const CutData& c) {
  if (c.rows <= 0 || c.width <= 0) return false;
  if (static_cast<int>(c.sigma.size()) != c.rows) return false;
  for (const Perm& s : c.sigma)
    if (s.degree() != c.width || !s.is_valid()) return false;
  return true;
}

CoverRep build_rep(const CutData& c) {
  if (!cut_data_valid(c)) throw std::invalid_argument("malformed cut data");
  if (!is_transitive(c.sigma, c.width)) {
    auto orbs = orbits(c.sigma, c.width);
    std::ostringstream os;
    os << "cover is disconnected: column orbits";
    for (const auto& o : orbs) {
      os << " {";
      for (size_t i = 0; i < o.size(); ++i) os << (i ? "," : "") << o[i] + 1;
      os << "}";
    }
    throw DisconnectedCover(os.str(), orbs);
  }
  CoverRep rep;
  rep.rows = c.rows;
  rep.width = c.width;
  rep.degree = c.rows * c.width;
  std::vector<int> px(rep.degree), py(rep.degree);
  for (int i = 0; i < c.rows; ++i)
    for (int j = 0; j < c.width; ++j) {
      px[i * c.width + j] = i * c.width + c.sigma[i](j);
      py[i * c.width + j] = ((i + 1) % c.rows) * c.width + j;
    }
  rep.px = Perm(std::move(px));
  rep.py = Perm(std::move(py));
  return rep;
}

Perm perm_of_word(const CoverRep& rep, const FreeWord& w) {
  Perm acc = perm_identity(rep.degree);
  for (int letter : w) {
    switch (letter) {
      case 1: acc = mul(acc, rep.px); break;
      case -1: acc = mul(acc, inverse(rep.px)); break;
      case 2: acc = mul(acc, rep.py); break;
      case -2: acc = mul(acc, inverse(rep.py)); break;
      default: throw std::invalid_argument("fiber words use generators 1, 2");
    }
  }
  return acc;
}

Perm row_prefix(const CutData& c, int i) {
  Perm acc = perm_identity(c.width);
  for (int k = 0; k <= i; ++k) acc = mul(acc, c.sigma[k]);
  return acc;
}

// Condition-III row factor sigma_{i+1} sigma_i^{-1}; the boundary commutator
// permutation acts on row i by the inverse of this map.
Perm row_boundary_map(const CutData& c, int i) {
  return mul(c.sigma[(i + 1) % c.rows], inverse(c.sigma[i]));
}

bool check_condition_one(const CutData& c) {
  Perm prefix = c.sigma[0];
  for (int i = 1; i < c.rows; ++i) {
    if (!commute(c.sigma[i], prefix)) return false;
    prefix = mul(prefix, c.sigma[i]);
  }
  return true;
}

bool check_condition_two(const CutData& c) {
  return row_prefix(c, c.rows - 1).is_identity();
}

bool check_condition_three(const CutData& c, const Int& R, const Slope& s) {
  for (int i = 0; i < c.rows; ++i) {
    Perm lhs = mul(perm_power(row_prefix(c, i), R * s.mu),
                   perm_power(row_boundary_map(c, i), Int(s.lambda)));
    if (!lhs.is_identity()) return false;
  }
  return true;
}

Perm canonical_intertwiner(const CutData& c, const Int& R) {
  std::vector<int> img(static_cast<size_t>(c.rows) * c.width);
  for (int i = 0; i < c.rows; ++i) {
    Perm rowmap = perm_power(row_prefix(c, i), -R);
    for (int j = 0; j < c.width; ++j)
      img[i * c.width + j] = i * c.width + rowmap(j);
  }
  return Perm(std::move(img));
}

bool is_intertwiner(const CoverRep& rep, const TwistEndo& h, const Perm& tau) {
  if (tau.degree() != rep.degree || !tau.is_valid()) return false;
  return conj(tau, rep.px) == perm_of_word(rep, h.img_x) &&
         conj(tau, rep.py) == perm_of_word(rep, h.img_y);
}

std::vector<Perm> find_intertwiners(const CoverRep& rep, const TwistEndo& h) {
  const int d = rep.degree;
  const Perm hx = perm_of_word(rep, h.img_x);
  const Perm hy = perm_of_word(rep, h.img_y);
  std::vector<Perm> found;
  const Perm ihx = inverse(hx), ihy = inverse(hy);
  const Perm ipx = inverse(rep.px), ipy = inverse(rep.py);
  const Perm* move_h[4] = {&hx, &ihx, &hy, &ihy};
  const Perm* move_p[4] = {&rep.px, &ipx, &rep.py, &ipy};
  // tau(hg(p)) = P_g(tau(p)) propagates tau from its value at one sheet; the
  // image permutations act transitively, so each anchor determines at most
  // one candidate.
  for (int anchor = 0; anchor < d; ++anchor) {
    std::vector<int> img(d, -1);
    img[0] = anchor;
    std::vector<int> queue{0};
    bool ok = true;
    while (!queue.empty() && ok) {
      int p = queue.back();
      queue.pop_back();
      for (int dir = 0; dir < 4; ++dir) {
        int q = (*move_h[dir])(p);
        int val = (*move_p[dir])(img[p]);
        if (img[q] < 0) {
          img[q] = val;
          queue.push_back(q);
        } else if (img[q] != val) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    bool total = true;
    for (int p = 0; p < d; ++p)
      if (img[p] < 0) total = false;
    if (!total) continue;
    Perm tau{img};
    if (tau.is_valid() && is_intertwiner(rep, h, tau)) found.push_back(tau);
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool surgery_lifts(const CoverRep& rep, const Perm& tau, const Slope& s) {
  Perm beta = perm_of_word(rep, boundary_word());
  return mul(perm_power(tau, Int(s.mu)), perm_power(beta, Int(s.lambda)))
      .is_identity();
}

SurfaceData euler_and_boundary(const CoverRep& rep) {
  SurfaceData out;
  out.degree = rep.degree;
  out.chi = -Int(rep.degree);
  out.punctures = cycle_count(perm_of_word(rep, boundary_word()));
  out.b1_surface = 1 + rep.degree;
  return out;
}

int boundary_tori(const CoverRep& rep, const Perm& tau) {
  Perm beta = perm_of_word(rep, boundary_word());
  return static_cast<int>(orbits({beta, tau}, rep.degree).size());
}

}  // namespace fibercover
