#include "fibercover/slope_calculus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fibercover {

bool slope_coprime(const Slope& s) {
  return std::gcd(s.mu, s.lambda) == 1;
}

std::string slope_str(const Slope& s) {
  std::ostringstream os;
  os << "(" << s.mu << "," << s.lambda << ")";
  return os.str();
}

std::string case_tag_str(CaseTag t) {
  switch (t) {
    case CaseTag::I: return "i";
    case CaseTag::II: return "ii";
    case CaseTag::III: return "iii";
    case CaseTag::C3a: return "3a";
    case CaseTag::C3b: return "3b";
    case CaseTag::C4a: return "4a";
    case CaseTag::C4b: return "4b";
    case CaseTag::C5a: return "5a";
    case CaseTag::C5b: return "5b";
  }
  return "?";
}

std::optional<CaseTag> parse_case_tag(const std::string& s) {
  if (s == "i") return CaseTag::I;
  if (s == "ii") return CaseTag::II;
  if (s == "iii") return CaseTag::III;
  if (s == "3a") return CaseTag::C3a;
  if (s == "3b") return CaseTag::C3b;
  if (s == "4a") return CaseTag::C4a;
  if (s == "4b") return CaseTag::C4b;
  if (s == "5a") return CaseTag::C5a;
  if (s == "5b") return CaseTag::C5b;
  return std::nullopt;
}

namespace {

// Sum of reciprocals 1/|d_i| < bound, exactly; any d_i == 0 fails and marks
// the result degenerate.
HypothesisResult reciprocal_sum_below(const std::vector<Int>& dens,
                                      const Rat& bound) {
  HypothesisResult r;
  Rat sum = 0;
  for (const Int& d : dens) {
    if (d == 0) {
      r.degenerate = true;
      return r;
    }
    sum += Rat(1, abs_int(d));
  }
  r.satisfied = sum < bound;
  return r;
}

}  // namespace

HypothesisResult hypothesis_check(CaseTag tag, const Int& R, const Slope& s) {
  const Int mu = s.mu;
  const Int la = s.lambda;
  const Int Rmu = R * mu;
  switch (tag) {
    case CaseTag::I: {
      HypothesisResult r;
      r.satisfied = abs_int(la) > 1;
      return r;
    }
    case CaseTag::II:
      return reciprocal_sum_below({Rmu - la, Rmu - 2 * la, la}, Rat(1));
    case CaseTag::III:
    case CaseTag::C4a:
      return reciprocal_sum_below({Rmu - 2 * la, Rmu - 2 * la, la}, Rat(1));
    case CaseTag::C3a:
      return reciprocal_sum_below({Rmu - la, Rmu - la, la}, Rat(1));
    case CaseTag::C3b: {
      HypothesisResult r;
      const Int gap = abs_int(Rmu - 3 * la);
      const bool odd_ok = abs_int(la) > 2 && gap >= abs_int(la);
      const bool even_ok = la != 0 && la % 2 == 0 && gap >= 4;
      r.satisfied = odd_ok || even_ok;
      return r;
    }
    case CaseTag::C4b: {
      HypothesisResult r;
      r.satisfied = abs_int(Rmu - la) <= 2 && abs_int(la) > 2;
      return r;
    }
    case CaseTag::C5a: {
      if (abs_int(la) <= 1) return {};
      HypothesisResult r =
          reciprocal_sum_below({Rmu - la, la}, Rat(2, 3));
      if (!r.satisfied) return r;
      // The abelian block must leave an element of order > 2 for either
      // orientation of the longitude.
      const Int g1 = abs_int((Rmu - 2 * la) * (Rmu - 2 * la) - 2 * la * la);
      const Int g2 = abs_int((Rmu + 2 * la) * (Rmu + 2 * la) - 2 * la * la);
      r.satisfied = g1 > 2 * abs_int(R) && g2 > 2 * abs_int(R);
      return r;
    }
    case CaseTag::C5b: {
      if (abs_int(la) <= 1) return {};
      HypothesisResult r =
          reciprocal_sum_below({Rmu - 2 * la, la}, Rat(2, 3));
      if (!r.satisfied) return r;
      const Int g1 = abs_int((Rmu - la) * (Rmu - la) - Rmu * la);
      const Int g2 = abs_int((Rmu + la) * (Rmu + la) + Rmu * la);
      r.satisfied = g1 > 2 * abs_int(R) && g2 > 2 * abs_int(R);
      return r;
    }
  }
  return {};
}

Slope apply_slope_map(const Mat2& m, const Slope& s) {
  Int mu = m.a * s.mu + m.b * s.lambda;
  Int la = m.c * s.mu + m.d * s.lambda;
  return Slope{to_ll(mu), to_ll(la)};
}

namespace {

TwistWord parse_w(const std::string& s) { return parse_twist_word(s); }

}  // namespace

const std::vector<FramingTransform>& builtin_framings() {
  static const std::vector<FramingTransform> table = [] {
    std::vector<FramingTransform> v;
    // Central involution absorbed into a y-dominant word: one boundary twist
    // per power, shifting lambda by -mu.
    v.push_back({"neg-absorb",
                 parse_w("(Dx Dy^-1 Dx)^2 Dx Dy"),
                 parse_w("Dy^5 Dx^-1"),
                 mat2(1, 0, -1, 1)});
    // Square of the basic positive word, rewritten through the central
    // involution: lambda gains +mu per power.
    v.push_back({"square-neg",
                 parse_w("(Dx Dy)^2"),
                 parse_w("((Dx Dy^-1 Dx)^2 Dx Dy)^2"),
                 mat2(1, 0, 1, 1)});
    // Composite of the two above: square directly to the y-dominant form.
    v.push_back({"square-ydom",
                 parse_w("(Dx Dy)^2"),
                 parse_w("(Dy^5 Dx^-1)^2"),
                 mat2(1, 0, -1, 1)});
    // Cube to the x-dominant alternating word.
    v.push_back({"cube-xdom",
                 parse_w("(Dx Dy)^3"),
                 parse_w("Dx^2 Dy^-4 Dx Dy^-4 Dx"),
                 mat2(1, 0, 1, 1)});
    // Eighteenth power straight to the y-dominant form.
    v.push_back({"pow18-ydom",
                 parse_w("(Dx Dy)^18"),
                 parse_w("(Dy^5 Dx^-1)^18"),
                 mat2(1, 0, -9, 1)});
    return v;
  }();
  return table;
}

std::optional<FramingApplication> apply_framing(const FramingTransform& t,
                                                const TwistWord& word,
                                                const Slope& s) {
  TwistWord w = normalize(word);
  TwistWord pat = normalize(t.pattern);
  if (pat.blocks.empty()) return std::nullopt;
  TwistWord acc;
  for (long long p = 1;; ++p) {
    acc = normalize(twist_concat(acc, pat));
    if (acc.blocks.size() > w.blocks.size()) return std::nullopt;
    if (acc == w) {
      FramingApplication out;
      out.word = normalize(twist_pow(t.target, p));
      out.slope = apply_slope_map(mat2_pow(t.slope_map, p), s);
      out.power = p;
      return out;
    }
  }
}

FramingTransform framing_inverse(const FramingTransform& t) {
  FramingTransform r;
  r.name = t.name + "-inv";
  r.pattern = t.target;
  r.target = t.pattern;
  r.slope_map = mat2_inverse(t.slope_map);
  return r;
}

bool framing_valid(const FramingTransform& t) {
  Int det = mat2_det(t.slope_map);
  if (det != 1 && det != -1) return false;
  return !normalize(t.pattern).blocks.empty();
}

std::vector<Slope> fig8_exception_scan(int window) {
  if (window < 5) throw std::invalid_argument("fig8 scan window must be >= 5");
  std::vector<Slope> out;
  for (long long mu = -window; mu <= window; ++mu) {
    for (long long la = -window; la <= window; ++la) {
      if (mu % 2 == 0 || la % 2 == 0) continue;
      Slope s{mu, la};
      if (!slope_coprime(s)) continue;
      Int dm = Int(mu) - la;
      Int dp = Int(mu) + la;
      if (abs_int(dm) < 2 || abs_int(dp) < 2) continue;
      Rat sum = Rat(1, abs_int(dp)) + Rat(1, 2 * abs_int(Int(la))) +
                Rat(1, abs_int(dm));
      if (sum >= 1) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// true iff all denominators are nonzero and the reciprocal sum is < 1
bool strict_reciprocal_sum(const std::vector<Int>& dens) {
  Rat sum = 0;
  for (const Int& d : dens) {
    if (d == 0) return false;
    sum += Rat(1, abs_int(d));
  }
  return sum < 1;
}

}  // namespace

std::vector<Slope> thm12_exception_scan(int window) {
  if (window < 2) throw std::invalid_argument("thm12 scan window must be >= 2");
  std::vector<Slope> out;
  for (long long mu = -window; mu <= window; ++mu) {
    for (long long la = -window; la <= window; ++la) {
      Slope s{mu, la};
      if ((mu == 0 && la == 0) || !slope_coprime(s)) continue;
      Int m6 = 6 * Int(mu);
      Int m9 = 9 * Int(mu);
      bool first = strict_reciprocal_sum({m6 - la, m6 + la});
      bool second =
          strict_reciprocal_sum({m9 + la, 2 * Int(la), m9 - la});
      if (!first && !second) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Slope> pell_family(int count) {
  std::vector<Slope> out;
  Int x = 1, y = 0;
  while (static_cast<int>(out.size()) < count) {
    Int nx = 3 * x + 4 * y;
    Int ny = 2 * x + 3 * y;
    x = nx;
    y = ny;
    Slope s{to_ll(x - 2 * y), to_ll(y)};
    if (s.lambda > 0) out.push_back(s);
  }
  return out;
}

}  // namespace fibercover
