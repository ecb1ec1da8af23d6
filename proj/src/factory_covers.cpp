#include "fibercover/factory_covers.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fibercover {

CutData assemble_cut_data(const CasePlan& plan, const PermWitness& w) {
  CutData c;
  c.rows = plan.m;
  c.width = w.degree;
  for (int i = 0; i < plan.m; ++i) {
    int g = plan.row_gen.at(i);
    if (g == 0)
      c.sigma.push_back(perm_identity(w.degree));
    else if (g > 0)
      c.sigma.push_back(w.gens.at(g - 1));
    else
      c.sigma.push_back(inverse(w.gens.at(-g - 1)));
  }
  return c;
}

QuotientResult plan_witnesses(const CasePlan& plan, const Int& R,
                              const Slope& s, const FactoryCaps& caps) {
  if (plan.case_name == "5a" || plan.case_name == "5b") {
    Case5Reduction rd = case5_reduction(plan.case_name, R, s);
    if (rd.applies) {
      QuotientResult tri =
          triangle_quotient(rd.p, rd.block_order, rd.la_abs, caps.degree_cap,
                            caps.node_budget, caps.regular_cap,
                            caps.max_witnesses);
      QuotientResult out;
      out.exhausted = tri.exhausted;
      for (PermWitness& w : tri.witnesses) {
        Perm dep = perm_power(w.gens.at(1), rd.power);
        PermWitness full;
        full.degree = w.degree;
        full.note = w.note + " (block-reduced)";
        if (plan.case_name == "5a")
          full.gens = {w.gens[0], w.gens[1], std::move(dep)};
        else
          full.gens = {w.gens[1], std::move(dep), w.gens[0]};
        out.witnesses.push_back(std::move(full));
      }
      return out;
    }
  }
  PlanSystem sys = plan_relators(plan, R, s);
  QuotientRequest q;
  q.num_gens = sys.pres.num_gens;
  q.relators = sys.pres.relators;
  q.exact_orders = sys.exact_orders;
  q.min_orders = sys.min_orders;
  q.degree_cap = caps.degree_cap;
  q.node_budget = caps.node_budget;
  q.regular_cap = caps.regular_cap;
  q.max_witnesses = caps.max_witnesses;
  return quotient_witnesses(q);
}

namespace {

// Picks a verified lift whose surgery curve closes; the canonical row-wise
// lift is tried first on unmodified row data.
bool attach_lift(AssembledCover& ac, const TwistEndo& h, const Int& R,
                 const Slope& s, bool try_canonical, std::string* why) {
  if (try_canonical) {
    Perm tc = canonical_intertwiner(ac.cut, R);
    if (is_intertwiner(ac.rep, h, tc) && surgery_lifts(ac.rep, tc, s)) {
      ac.tau = tc;
      return true;
    }
  }
  std::vector<Perm> all = find_intertwiners(ac.rep, h);
  if (all.empty()) {
    *why = "no lift of the monodromy";
    return false;
  }
  for (const Perm& t : all) {
    if (surgery_lifts(ac.rep, t, s)) {
      ac.tau = t;
      return true;
    }
  }
  *why = "no lift closes the surgery curve";
  return false;
}

}  // namespace

FactoryResult template_covers(const CasePlan& plan, const TwistEndo& h,
                              const Int& R, const Slope& s,
                              const FactoryCaps& caps) {
  FactoryResult out;
  QuotientResult qr = plan_witnesses(plan, R, s, caps);
  out.exhausted = qr.exhausted;
  for (const PermWitness& w : qr.witnesses) {
    CutData cut = assemble_cut_data(plan, w);
    if (!check_condition_one(cut) || !check_condition_two(cut)) {
      out.notes.push_back(w.note + ": conditions I/II failed");
      continue;
    }
    if (!check_condition_three(cut, R, s)) {
      out.notes.push_back(w.note + ": condition III failed");
      continue;
    }
    AssembledCover ac;
    try {
      ac.rep = build_rep(cut);
    } catch (const DisconnectedCover& e) {
      out.notes.push_back(w.note + ": " + e.what());
      continue;
    }
    ac.cut = std::move(cut);
    ac.cut_perm = perm_identity(ac.cut.width);
    ac.detail = "template " + plan.case_name + ", " + w.note;
    std::string why;
    if (!attach_lift(ac, h, R, s, true, &why)) {
      out.notes.push_back(w.note + ": " + why);
      continue;
    }
    out.covers.push_back(std::move(ac));
  }
  return out;
}

std::vector<Perm> cut_candidates(int width, long long lambda,
                                 size_t max_candidates) {
  std::vector<Perm> out;
  const long long al = lambda < 0 ? -lambda : lambda;
  if (al % 2 == 0) {
    for (int a = 0; a < width; ++a) {
      for (int b = a + 2; b < width; ++b) {
        if (a == 0 && b == width - 1) continue;  // cyclically adjacent
        if (out.size() >= max_candidates) return out;
        std::vector<int> img(width);
        std::iota(img.begin(), img.end(), 0);
        std::swap(img[a], img[b]);
        out.push_back(Perm(std::move(img)));
      }
    }
    return out;
  }
  const long long pairs = (al - 1) / 2;
  if (pairs == 0 || 2 * pairs > width) return out;
  for (int offset = 0; offset < width && out.size() < max_candidates;
       ++offset) {
    std::vector<int> img(width);
    std::iota(img.begin(), img.end(), 0);
    for (long long t = 0; t < pairs; ++t) {
      int a = static_cast<int>((offset + 2 * t) % width);
      int b = static_cast<int>((offset + 2 * t + 1) % width);
      std::swap(img[a], img[b]);
    }
    Perm p(std::move(img));
    if (std::find(out.begin(), out.end(), p) == out.end())
      out.push_back(std::move(p));
  }
  return out;
}

CoverRep doubled_rep_with_cut(const CutData& doubled, int k,
                              const Perm& kappa) {
  if (doubled.rows != 2 * k || kappa.degree() != doubled.width)
    throw std::invalid_argument("cut does not fit the doubled cover");
  CoverRep rep;
  rep.rows = doubled.rows;
  rep.width = doubled.width;
  rep.degree = doubled.rows * doubled.width;
  std::vector<int> px(rep.degree), py(rep.degree);
  const int w = doubled.width;
  for (int i = 0; i < doubled.rows; ++i) {
    const bool seam = (i == k - 1) || (i == doubled.rows - 1);
    for (int j = 0; j < w; ++j) {
      px[i * w + j] = i * w + doubled.sigma[i](j);
      py[i * w + j] = ((i + 1) % doubled.rows) * w + (seam ? kappa(j) : j);
    }
  }
  rep.px = Perm(std::move(px));
  rep.py = Perm(std::move(py));
  return rep;
}

FactoryResult doubled_cyclic_covers(const CasePlan& plan, const TwistEndo& h,
                                    const Int& R, const Slope& s,
                                    const FactoryCaps& caps) {
  FactoryResult out;
  const int k = plan.cyclic_k;
  CyclicSolution sol;
  try {
    sol = cyclic_solution(k, R, s);
  } catch (const std::exception& e) {
    out.notes.push_back(std::string("cyclic exponents: ") + e.what());
    return out;
  }
  const Int M_big = abs_int(sol.N);
  if (M_big > caps.width_cap) {
    std::ostringstream os;
    os << "cyclic width |N| = " << M_big << " exceeds the width cap "
       << caps.width_cap;
    out.notes.push_back(os.str());
    out.exhausted = true;
    return out;
  }
  const int M = static_cast<int>(to_ll(M_big));
  std::vector<int> pts(M);
  std::iota(pts.begin(), pts.end(), 0);
  const Perm cyc = make_cycle(M, pts);

  CutData doubled;
  doubled.rows = 2 * k;
  doubled.width = M;
  for (int half = 0; half < 2; ++half)
    for (int i = 0; i < k; ++i)
      doubled.sigma.push_back(perm_power(cyc, sol.exponents[i]));

  if (!check_condition_one(doubled) || !check_condition_two(doubled) ||
      !check_condition_three(doubled, R, s)) {
    out.notes.push_back("doubled cyclic data failed conditions I-III");
    return out;
  }

  std::ostringstream base_detail;
  base_detail << "cyclic k=" << k << ", width " << M;

  auto try_cover = [&](CoverRep rep, bool modified, const Perm& kappa,
                       const std::string& what) {
    if (!is_transitive({rep.px, rep.py}, rep.degree)) {
      out.notes.push_back(what + ": disconnected");
      return;
    }
    AssembledCover ac;
    ac.rep = std::move(rep);
    ac.cut = doubled;
    ac.modified = modified;
    ac.cut_perm = modified ? kappa : perm_identity(M);
    ac.detail = base_detail.str() + ", " + what;
    std::string why;
    if (!attach_lift(ac, h, R, s, !modified, &why)) {
      out.notes.push_back(what + ": " + why);
      return;
    }
    out.covers.push_back(std::move(ac));
  };

  try_cover(build_rep(doubled), false, perm_identity(M), "plain doubling");
  const std::vector<Perm> cuts =
      cut_candidates(M, s.lambda, caps.max_cut_candidates);
  if (cuts.empty())
    out.notes.push_back("no cut pattern fits width " + std::to_string(M));
  for (size_t ci = 0; ci < cuts.size(); ++ci) {
    if (out.covers.size() >= caps.max_witnesses) break;
    std::ostringstream what;
    what << "cut variant " << ci + 1 << " (" << perm_str(cuts[ci]) << ")";
    try_cover(doubled_rep_with_cut(doubled, k, cuts[ci]), true, cuts[ci],
              what.str());
  }
  return out;
}

FactoryResult factory_covers(const CasePlan& plan, const TwistEndo& h,
                             const Int& R, const Slope& s,
                             const FactoryCaps& caps) {
  return plan.direct_construction ? doubled_cyclic_covers(plan, h, R, s, caps)
                                  : template_covers(plan, h, R, s, caps);
}

QuotientResult coxeter_quotient(const CasePlan& plan, const Int& R,
                                const Slope& s, const FactoryCaps& caps) {
  if (plan.case_name != "2b" && plan.case_name != "4a")
    throw std::invalid_argument(
        "chained reflection systems arise for cases 2b and 4a");
  return plan_witnesses(plan, R, s, caps);
}

CutData case5_assembly(const std::string& variant, const TwistEndo& h,
                       const Int& R, const Slope& s, const FactoryCaps& caps) {
  if (variant != "5a" && variant != "5b")
    throw std::invalid_argument("variant must be 5a or 5b");
  CasePlan plan = case_template(variant, 7);
  HypothesisResult hr = hypothesis_check(plan.guard, R, s);
  if (!hr.satisfied)
    throw std::domain_error("slope hypothesis for case " + variant +
                            " does not hold");
  FactoryResult fr = template_covers(plan, h, R, s, caps);
  if (fr.covers.empty())
    throw std::runtime_error(
        fr.exhausted ? "search exhausted before a valid witness was found"
                     : "no witness satisfied the residual system");
  return fr.covers.front().cut;
}

AssembledCover case3b_cover(const TwistEndo& h, const Int& R, const Slope& s,
                            const FactoryCaps& caps) {
  CasePlan plan = case_template("3b", 6);
  HypothesisResult hr = hypothesis_check(plan.guard, R, s);
  if (!hr.satisfied)
    throw std::domain_error("slope hypothesis for case 3b does not hold");
  FactoryResult fr = doubled_cyclic_covers(plan, h, R, s, caps);
  for (AssembledCover& ac : fr.covers)
    if (ac.modified) return std::move(ac);
  throw std::runtime_error(
      fr.exhausted ? "search exhausted before a valid cover was found"
                   : "no cut variant passed the lifting checks");
}

}  // namespace fibercover
