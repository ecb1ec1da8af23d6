#include "fibercover/case_plan.hpp"

#include "fibercover/cyclic_solution.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fibercover {

FreeWord row_word(const CasePlan& p, int i) {
  int g = p.row_gen.at(i);
  if (g == 0) return {};
  return {g};
}

FreeWord cyclic_canonical(const FreeWord& w0) {
  FreeWord w = free_reduce(w0);
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  if (w.empty()) return w;
  FreeWord best = w;
  auto consider = [&](const FreeWord& v) {
    for (size_t r = 0; r < v.size(); ++r) {
      FreeWord rot(v.begin() + r, v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + r);
      if (rot < best) best = rot;
    }
  };
  consider(w);
  consider(word_inverse(w));
  return best;
}

std::pair<FreeWord, Int> literal_power(const FreeWord& w) {
  const size_t L = w.size();
  for (size_t p = 1; p < L; ++p) {
    if (L % p != 0) continue;
    bool periodic = true;
    for (size_t i = p; i < L && periodic; ++i)
      if (w[i] != w[i % p]) periodic = false;
    if (periodic)
      return {FreeWord(w.begin(), w.begin() + p), Int(L / p)};
  }
  return {FreeWord{}, Int(0)};
}

CasePlan case_template(const std::string& case_name, int m) {
  CasePlan p;
  p.case_name = case_name;
  if (case_name == "1") {
    p.guard = CaseTag::III;
    p.m = 4;
    p.row_gen = {1, -1, 2, -2};
    p.num_free = 2;
  } else if (case_name == "2a") {
    p.guard = CaseTag::II;
    p.m = 5;
    p.row_gen = {1, 0, -1, 2, -2};
    p.num_free = 2;
  } else if (case_name == "2b") {
    if (m < 9 || m % 2 == 0)
      throw std::invalid_argument("case 2b needs odd m >= 9");
    const int k = (m - 1) / 2;
    p.guard = CaseTag::II;
    p.m = m;
    p.num_free = k - 1;
    p.row_gen = {1, -1, 2, 0, -2, 1, -1};
    for (int j = 3; j <= k - 1; ++j) {
      p.row_gen.push_back(j);
      p.row_gen.push_back(-j);
    }
  } else if (case_name == "3a") {
    p.guard = CaseTag::C3a;
    p.m = 6;
    p.row_gen = {1, 0, -1, 2, 0, -2};
    p.num_free = 2;
  } else if (case_name == "3b") {
    p.guard = CaseTag::C3b;
    p.m = 6;
    p.direct_construction = true;
    p.cyclic_k = 3;
  } else if (case_name == "4a") {
    if (m < 8 || m % 2 != 0)
      throw std::invalid_argument("case 4a needs even m >= 8");
    const int k = m / 2;
    p.guard = CaseTag::C4a;
    p.m = m;
    p.num_free = k - 1;
    p.row_gen = {1, -1, 2, -2, 1, -1};
    for (int j = 3; j <= k - 1; ++j) {
      p.row_gen.push_back(j);
      p.row_gen.push_back(-j);
    }
  } else if (case_name == "4b") {
    if (m < 8 || m % 2 != 0)
      throw std::invalid_argument("case 4b needs even m >= 8");
    p.guard = CaseTag::C4b;
    p.m = m;
    p.direct_construction = true;
    p.cyclic_k = m / 2;
  } else if (case_name == "5a") {
    p.guard = CaseTag::C5a;
    p.m = 7;
    p.row_gen = {1, 0, -1, 2, 3, -3, -2};
    p.num_free = 3;
    p.exact_only_gens = {1};
    p.min_orders = {{FreeWord{2}, Int(2)}};
  } else if (case_name == "5b") {
    p.guard = CaseTag::C5b;
    p.m = 7;
    p.row_gen = {1, 2, 0, -2, -1, 3, -3};
    p.num_free = 3;
    p.exact_only_gens = {3};
    p.min_orders = {{FreeWord{1}, Int(2)}};
  } else {
    throw std::invalid_argument("unknown construction: " + case_name);
  }
  return p;
}

PlanSystem plan_relators(const CasePlan& p, const Int& R, const Slope& s) {
  if (p.direct_construction)
    throw std::invalid_argument(
        "direct constructions carry no residual relator system");
  PlanSystem out;
  out.pres.num_gens = p.num_free;
  for (int g = 1; g <= p.num_free; ++g)
    out.pres.gen_names.push_back("g" + std::to_string(g));

  const int m = p.m;
  std::vector<FreeWord> w(m), pre(m);
  FreeWord acc;
  for (int i = 0; i < m; ++i) {
    w[i] = row_word(p, i);
    acc = free_reduce(word_concat(acc, w[i]));
    pre[i] = acc;
  }

  std::vector<FreeWord> raw;
  for (int i = 1; i < m; ++i)
    raw.push_back(free_reduce(
        word_concat(word_concat(w[i], pre[i - 1]),
                    word_concat(word_inverse(w[i]), word_inverse(pre[i - 1])))));
  raw.push_back(pre[m - 1]);
  const Int Rmu = R * s.mu;
  const Int la = s.lambda;
  for (int i = 0; i < m; ++i) {
    FreeWord factor =
        free_reduce(word_concat(w[(i + 1) % m], word_inverse(w[i])));
    raw.push_back(free_reduce(
        word_concat(word_pow(pre[i], Rmu), word_pow(factor, la))));
  }

  std::set<FreeWord> seen;
  for (const FreeWord& r : raw) {
    if (r.empty()) continue;
    FreeWord canon = cyclic_canonical(r);
    if (canon.empty()) continue;
    if (seen.insert(canon).second) out.pres.relators.push_back(r);
  }

  std::set<std::pair<FreeWord, Int>> order_seen;
  for (const FreeWord& r : out.pres.relators) {
    auto [base, e] = literal_power(r);
    if (e < 2) continue;
    if (!p.exact_only_gens.empty()) {
      if (base.size() != 1) continue;
      int g = base[0] < 0 ? -base[0] : base[0];
      if (std::find(p.exact_only_gens.begin(), p.exact_only_gens.end(), g) ==
          p.exact_only_gens.end())
        continue;
    }
    if (order_seen.insert({cyclic_canonical(base), e}).second)
      out.exact_orders.emplace_back(base, e);
  }
  if (p.case_name == "5a" || p.case_name == "5b") {
    // The abelian block fixes the order of its first generator at
    // |det| / gcd(lambda, u); demanding it exactly keeps the block faithful
    // and lets the search skip every degree below that order.
    const Int u = p.case_name == "5a" ? Int(Rmu - 2 * la) : Int(Rmu - la);
    const Int det =
        p.case_name == "5a" ? Int(u * u - 2 * la * la) : Int(u * u - Rmu * la);
    const Int g = gcd_int(abs_int(la), abs_int(u));
    if (det != 0 && g != 0)
      out.exact_orders.emplace_back(FreeWord{p.case_name == "5a" ? 2 : 1},
                                    abs_int(det) / g);
  }
  out.min_orders = p.min_orders;
  return out;
}

namespace {

struct Bezout {
  Int g, x, y;  // g = a x + b y with g >= 0
};

Bezout ext_gcd(const Int& a, const Int& b) {
  Int r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    r0 = r1; r1 = r2;
    Int x2 = x0 - q * x1;
    x0 = x1; x1 = x2;
    Int y2 = y0 - q * y1;
    y0 = y1; y1 = y2;
  }
  if (r0 < 0) return {-r0, -x0, -y0};
  return {r0, x0, y0};
}

}  // namespace

Case5Reduction case5_reduction(const std::string& case_name, const Int& R,
                               const Slope& s) {
  if (case_name != "5a" && case_name != "5b")
    throw std::invalid_argument("block reduction applies to cases 5a and 5b");
  const Int Rmu = R * s.mu;
  const Int la = s.lambda;
  const Int u = case_name == "5a" ? Int(Rmu - 2 * la) : Int(Rmu - la);
  const Int det =
      case_name == "5a" ? Int(u * u - 2 * la * la) : Int(u * u - Rmu * la);
  Case5Reduction out;
  out.p = abs_int(case_name == "5a" ? Int(Rmu - la) : Int(Rmu - 2 * la));
  out.la_abs = abs_int(la);
  if (det == 0) return out;
  Bezout bz = ext_gcd(la, u);
  if (bz.g != 1) return out;
  out.block_order = abs_int(det);
  // From lambda x + u y = 1 the eliminated generator equals the surviving
  // one raised to x (lambda - R mu) - y R mu; both defining congruences hold
  // modulo the block order because the cross terms collapse to +-det.
  Int c = (bz.x * (la - Rmu) - bz.y * Rmu) % out.block_order;
  if (c < 0) c += out.block_order;
  out.power = c;
  out.applies = true;
  return out;
}

PlanSet plan_cover(const Int& R, const Int& n, const Slope& s, int max_rows) {
  PlanSet out;
  auto refuse = [&](const std::string& name, int m, const std::string& why,
                    bool degenerate) {
    std::ostringstream os;
    os << "case " << name << " (m=" << m << "): " << why;
    out.refusals.push_back(os.str());
    if (degenerate) out.any_degenerate = true;
  };
  auto try_case = [&](const std::string& name, int m) {
    CasePlan p = case_template(name, m);
    HypothesisResult hr = hypothesis_check(p.guard, R, s);
    if (!hr.satisfied) {
      refuse(name, m,
             hr.degenerate
                 ? "degenerate slope (zero denominator in the case inequality)"
                 : "slope hypothesis not satisfied",
             hr.degenerate);
      return;
    }
    if (p.direct_construction) {
      Int N = cyclic_modulus(p.cyclic_k, R, s);
      if (N == 0) {
        refuse(name, m, "degenerate cyclic modulus N = 0", true);
        return;
      }
      if (name == "4b" && abs_int(N) < abs_int(Int(s.lambda))) {
        refuse(name, m, "cyclic modulus |N| below |lambda|", false);
        return;
      }
    }
    out.plans.push_back(std::move(p));
  };

  bool saw_divisor = false;
  for (int m = 4; m <= max_rows; ++m) {
    if (n == 0 || n % m != 0) continue;
    saw_divisor = true;
    if (m == 4) {
      try_case("1", 4);
    } else if (m == 5) {
      try_case("2a", 5);
    } else if (m == 6) {
      try_case("3b", 6);
      try_case("3a", 6);
    } else if (m == 7) {
      try_case("5a", 7);
      try_case("5b", 7);
    } else if (m % 2 == 0) {
      try_case("4a", m);
      try_case("4b", m);
    } else {
      try_case("2b", m);
    }
  }
  if (!saw_divisor) {
    std::ostringstream os;
    os << "n = " << n << " has no divisor m >= 4 within the row cap "
       << max_rows;
    out.refusals.push_back(os.str());
  }
  return out;
}

}  // namespace fibercover
