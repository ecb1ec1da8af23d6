#include "fibercover/certify.hpp"

#include "fibercover/low_index.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fibercover {

std::string cert_status_str(CertStatus s) {
  switch (s) {
    case CertStatus::Certified:
      return "certified";
    case CertStatus::SearchExhausted:
      return "search-exhausted";
    case CertStatus::Degenerate:
      return "degenerate";
    case CertStatus::HypothesisFails:
      return "hypothesis-fails";
  }
  return "hypothesis-fails";
}

std::optional<CertStatus> parse_cert_status(const std::string& s) {
  if (s == "certified") return CertStatus::Certified;
  if (s == "search-exhausted") return CertStatus::SearchExhausted;
  if (s == "degenerate") return CertStatus::Degenerate;
  if (s == "hypothesis-fails") return CertStatus::HypothesisFails;
  return std::nullopt;
}

FactoryCaps caps_of_config(const EngineConfig& cfg) {
  FactoryCaps caps;
  caps.degree_cap = cfg.degree_cap;
  caps.node_budget = cfg.node_budget;
  caps.regular_cap = cfg.regular_cap;
  caps.max_witnesses = cfg.max_witnesses;
  caps.width_cap = cfg.width_cap;
  caps.max_cut_candidates = cfg.max_cut_candidates;
  return caps;
}

namespace {

struct Candidate {
  TwistWord w;
  Slope s;
  std::string route;
};

std::vector<Candidate> candidate_set(const TwistWord& w, const Slope& s,
                                     const EngineConfig& cfg) {
  std::vector<Candidate> out;
  std::set<std::string> seen;
  auto push = [&](const TwistWord& cw, const Slope& cs,
                  const std::string& route) {
    TwistWord nw = normalize(cw);
    if (nw.empty()) return;
    std::string key = twist_str(nw) + "|" + slope_str(cs);
    if (!seen.insert(key).second) return;
    out.push_back({std::move(nw), cs, route});
  };
  push(w, s, "direct");
  if (cfg.use_swap) push(quarter_turn_conjugate(w), s, "swap");
  if (cfg.use_framings) {
    std::vector<FramingTransform> frames = builtin_framings();
    for (const FramingTransform& f : cfg.extra_framings)
      if (framing_valid(f)) frames.push_back(f);
    const size_t base_count = out.size();
    for (size_t b = 0; b < base_count; ++b) {
      for (const FramingTransform& f : frames) {
        if (auto app = apply_framing(f, out[b].w, out[b].s))
          push(app->word, app->slope, out[b].route + "+" + f.name);
        if (auto app = apply_framing(framing_inverse(f), out[b].w, out[b].s))
          push(app->word, app->slope, out[b].route + "+" + f.name + "^-1");
      }
    }
  }
  return out;
}

std::array<long long, 4> mat_array(const Mat2& m) {
  return {to_ll(m.a), to_ll(m.b), to_ll(m.c), to_ll(m.d)};
}

CertCover cover_payload(const AssembledCover& ac) {
  CertCover cc;
  cc.rows = ac.cut.rows;
  cc.width = ac.cut.width;
  for (const Perm& p : ac.cut.sigma) cc.sigma.push_back(p.img);
  cc.px = ac.rep.px.img;
  cc.py = ac.rep.py.img;
  cc.tau = ac.tau.img;
  cc.modified = ac.modified;
  cc.cut_perm = ac.cut_perm.img;
  cc.detail = ac.detail;
  return cc;
}

// The rewritten unfilled b1 must match the fiber-action formula; a mismatch
// means the engine itself is broken, so abort rather than certify.
int cross_checked_unfilled_b1(const TwistWord& w, const CoverRep& rep,
                              const Perm& tau) {
  HomologySummary unf = b1_unfilled_cover(w, rep, tau);
  int wang = wang_b1(induced_fiber_action_matrix(w, rep, tau));
  if (unf.b1 != wang)
    throw std::logic_error(
        "internal error: unfilled b1 " + std::to_string(unf.b1) +
        " disagrees with the fiber-action value " + std::to_string(wang));
  return unf.b1;
}

CoverRep trivial_rep() {
  CoverRep r;
  r.degree = 1;
  r.px = perm_identity(1);
  r.py = perm_identity(1);
  r.rows = 1;
  r.width = 1;
  return r;
}

}  // namespace

Certificate certify(const TwistWord& w_in, const Slope& s,
                    const EngineConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const TwistWord w = normalize(w_in);
  if (w.empty()) throw std::invalid_argument("empty monodromy word");
  if (!slope_coprime(s))
    throw std::invalid_argument("filling slope " + slope_str(s) +
                                " is not coprime");

  Certificate cert;
  cert.word = twist_str(w);
  cert.slope = s;
  cert.used_word = cert.word;
  cert.used_slope = s;
  cert.route = "direct";
  cert.monodromy = mat_array(monodromy_matrix(w));
  {
    BundleInvariants inv0 = bundle_invariants(w);
    if (inv0.standard_ok) {
      cert.R = inv0.R;
      cert.n = inv0.n;
    }
  }

  auto finish = [&t0](Certificate& c) {
    c.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  };

  // Degree-1 cover: the filled manifold itself may already have b1 >= 1.
  {
    HomologySummary base =
        homology_of_presentation(filled_mapping_torus_presentation(w, s));
    if (base.b1 >= 1) {
      cert.status = CertStatus::Certified;
      cert.case_name = "base";
      cert.degree = 1;
      cert.b1 = base.b1;
      cert.torsion = base.torsion;
      CoverRep triv = trivial_rep();
      Perm id1 = perm_identity(1);
      cert.unfilled_b1 = cross_checked_unfilled_b1(w, triv, id1);
      FixedPeripheral fp = fixed_and_peripheral(w, triv, id1);
      cert.fix_rank = fp.fix_rank;
      cert.peripheral_rank = fp.peripheral_rank;
      cert.interior_witness = fp.interior_witness;
      finish(cert);
      return cert;
    }
    cert.notes.push_back("filled manifold has b1 = " + std::to_string(base.b1));
  }

  bool any_exhausted = false;
  bool any_degenerate = false;
  bool any_plan = false;
  const FactoryCaps caps = caps_of_config(cfg);

  for (const Candidate& cand : candidate_set(w, s, cfg)) {
    BundleInvariants inv = bundle_invariants(cand.w);
    if (!inv.standard_ok) {
      cert.notes.push_back(cand.route + ": invariants unavailable (no Dy block)");
      continue;
    }
    PlanSet ps = plan_cover(inv.R, inv.n, cand.s, cfg.max_rows);
    any_degenerate = any_degenerate || ps.any_degenerate;
    for (const std::string& r : ps.refusals)
      cert.notes.push_back(cand.route + ": " + r);
    if (ps.plans.empty()) continue;
    const TwistEndo h = twist_endo(cand.w);
    for (const CasePlan& plan : ps.plans) {
      any_plan = true;
      FactoryResult fr = factory_covers(plan, h, inv.R, cand.s, caps);
      any_exhausted = any_exhausted || fr.exhausted;
      for (const std::string& nt : fr.notes)
        cert.notes.push_back(cand.route + "/" + plan.case_name + ": " + nt);
      for (const AssembledCover& ac : fr.covers) {
        HomologySummary filled =
            b1_filled_cover(cand.w, cand.s, ac.rep, ac.tau);
        if (filled.b1 < 1) {
          cert.notes.push_back(cand.route + "/" + plan.case_name +
                               ": degree " + std::to_string(ac.rep.degree) +
                               " cover has b1 = " + std::to_string(filled.b1));
          continue;
        }
        cert.status = CertStatus::Certified;
        cert.route = cand.route;
        cert.used_word = twist_str(cand.w);
        cert.used_slope = cand.s;
        cert.case_name = plan.case_name;
        cert.R = inv.R;
        cert.n = inv.n;
        cert.degree = ac.rep.degree;
        cert.b1 = filled.b1;
        cert.torsion = filled.torsion;
        cert.unfilled_b1 = cross_checked_unfilled_b1(cand.w, ac.rep, ac.tau);
        FixedPeripheral fp = fixed_and_peripheral(cand.w, ac.rep, ac.tau);
        cert.fix_rank = fp.fix_rank;
        cert.peripheral_rank = fp.peripheral_rank;
        cert.interior_witness = fp.interior_witness;
        cert.cover = cover_payload(ac);
        finish(cert);
        return cert;
      }
    }
  }

  if (any_plan || any_exhausted)
    cert.status = CertStatus::SearchExhausted;
  else if (any_degenerate)
    cert.status = CertStatus::Degenerate;
  else
    cert.status = CertStatus::HypothesisFails;
  finish(cert);
  return cert;
}

Certificate certify_text(const std::string& word_text, const Slope& s,
                         const EngineConfig& cfg) {
  return certify(parse_twist_word(word_text), s, cfg);
}

std::optional<Certificate> low_index_certificate(const TwistWord& w_in,
                                                 const Slope& s, int max_index,
                                                 long long node_budget,
                                                 bool* exhausted) {
  const auto t0 = std::chrono::steady_clock::now();
  const TwistWord w = normalize(w_in);
  if (w.empty()) throw std::invalid_argument("empty monodromy word");
  if (!slope_coprime(s))
    throw std::invalid_argument("filling slope " + slope_str(s) +
                                " is not coprime");
  if (exhausted) *exhausted = false;
  const GroupPresentation filled = filled_mapping_torus_presentation(w, s);
  long long budget = node_budget;
  for (int d = 2; d <= max_index; ++d) {
    if (budget <= 0) {
      if (exhausted) *exhausted = true;
      break;
    }
    LowIndexResult lr =
        low_index_actions_of_degree(filled, d, budget, 1u << 16);
    budget -= lr.nodes_used;
    if (!lr.complete && exhausted) *exhausted = true;
    for (const CosetAction& act : lr.actions) {
      CoverRep rep;
      rep.degree = act.degree;
      rep.px = act.gen_action[0];
      rep.py = act.gen_action[1];
      rep.rows = 1;
      rep.width = act.degree;
      const Perm& tau = act.gen_action[2];
      if (!is_transitive({rep.px, rep.py}, rep.degree)) continue;
      HomologySummary hs = b1_filled_cover(w, s, rep, tau);
      if (hs.b1 < 1) continue;
      Certificate cert;
      cert.word = twist_str(w);
      cert.slope = s;
      cert.used_word = cert.word;
      cert.used_slope = s;
      cert.route = "direct";
      cert.case_name = "sweep";
      cert.status = CertStatus::Certified;
      cert.monodromy = mat_array(monodromy_matrix(w));
      BundleInvariants inv = bundle_invariants(w);
      if (inv.standard_ok) {
        cert.R = inv.R;
        cert.n = inv.n;
      }
      cert.degree = rep.degree;
      cert.b1 = hs.b1;
      cert.torsion = hs.torsion;
      cert.unfilled_b1 = cross_checked_unfilled_b1(w, rep, tau);
      FixedPeripheral fp = fixed_and_peripheral(w, rep, tau);
      cert.fix_rank = fp.fix_rank;
      cert.peripheral_rank = fp.peripheral_rank;
      cert.interior_witness = fp.interior_witness;
      CertCover cc;
      cc.rows = 1;
      cc.width = rep.degree;
      cc.px = rep.px.img;
      cc.py = rep.py.img;
      cc.tau = tau.img;
      cc.detail = "filled-group coset sweep, degree " + std::to_string(d);
      cert.cover = cc;
      cert.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
      return cert;
    }
  }
  return std::nullopt;
}

namespace {

bool replay_route(const std::string& route, const TwistWord& w0,
                  const Slope& s0, TwistWord* w_out, Slope* s_out) {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : route) {
    if (ch == '+') {
      toks.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  toks.push_back(cur);
  if (toks.empty()) return false;
  TwistWord w;
  if (toks[0] == "direct")
    w = w0;
  else if (toks[0] == "swap")
    w = quarter_turn_conjugate(w0);
  else
    return false;
  Slope s = s0;
  for (size_t i = 1; i < toks.size(); ++i) {
    std::string name = toks[i];
    bool inv = false;
    if (name.size() > 3 && name.substr(name.size() - 3) == "^-1") {
      inv = true;
      name = name.substr(0, name.size() - 3);
    }
    const FramingTransform* found = nullptr;
    for (const FramingTransform& f : builtin_framings())
      if (f.name == name) {
        found = &f;
        break;
      }
    if (!found) return false;
    FramingTransform ft = inv ? framing_inverse(*found) : *found;
    auto app = apply_framing(ft, w, s);
    if (!app) return false;
    w = app->word;
    s = app->slope;
  }
  *w_out = normalize(w);
  *s_out = s;
  return true;
}

}  // namespace

VerifyReport verify_certificate(const Certificate& c) {
  VerifyReport rep;
  auto fail = [&rep](const std::string& m) { rep.failures.push_back(m); };

  if (c.schema != "fibercover/1") fail("unknown schema '" + c.schema + "'");
  if (!slope_coprime(c.slope)) fail("slope is not coprime");

  TwistWord w, used;
  try {
    w = normalize(parse_twist_word(c.word));
    used = normalize(
        parse_twist_word(c.used_word.empty() ? c.word : c.used_word));
  } catch (const std::exception& e) {
    fail(std::string("word does not parse: ") + e.what());
    rep.ok = false;
    return rep;
  }
  if (w.empty()) fail("empty monodromy word");
  if (!rep.failures.empty()) {
    rep.ok = false;
    return rep;
  }

  if (mat_array(monodromy_matrix(w)) != c.monodromy)
    fail("stored abelianized monodromy does not match the word");

  {
    TwistWord rw;
    Slope rs{0, 0};
    if (!replay_route(c.route.empty() ? "direct" : c.route, w, c.slope, &rw,
                      &rs))
      fail("route '" + c.route + "' cannot be replayed");
    else if (twist_str(rw) != twist_str(used) || !(rs == c.used_slope))
      fail("route does not lead to the stated word and slope");
  }

  if (c.status != CertStatus::Certified) {
    if (c.cover) fail("non-certified status carries a cover");
    rep.ok = rep.failures.empty();
    return rep;
  }

  if (c.b1 < 1) fail("certified status with b1 < 1");

  if (!c.cover) {
    if (c.case_name != "base" || c.degree != 1)
      fail("certificate without a cover must be the degree-1 base case");
    HomologySummary hs = homology_of_presentation(
        filled_mapping_torus_presentation(used, c.used_slope));
    if (hs.b1 != c.b1)
      fail("recomputed base b1 = " + std::to_string(hs.b1) +
           ", certificate says " + std::to_string(c.b1));
    else if (hs.torsion != c.torsion)
      fail("recomputed torsion differs");
    if (rep.failures.empty() && c.unfilled_b1 >= 0) {
      CoverRep triv = trivial_rep();
      Perm id1 = perm_identity(1);
      HomologySummary unf = b1_unfilled_cover(used, triv, id1);
      if (unf.b1 != c.unfilled_b1 ||
          unf.b1 != wang_b1(induced_fiber_action_matrix(used, triv, id1)))
        fail("unfilled b1 cross-check failed");
    }
    rep.ok = rep.failures.empty();
    return rep;
  }

  const CertCover& cc = *c.cover;
  const size_t deg = static_cast<size_t>(cc.rows) * cc.width;
  if (deg == 0 || cc.px.size() != deg || cc.py.size() != deg ||
      cc.tau.size() != deg) {
    fail("cover arrays are inconsistent with rows x width");
    rep.ok = false;
    return rep;
  }
  CoverRep cr;
  cr.degree = static_cast<int>(deg);
  cr.px = Perm(cc.px);
  cr.py = Perm(cc.py);
  cr.rows = cc.rows;
  cr.width = cc.width;
  Perm tau(cc.tau);
  if (!cr.px.is_valid() || !cr.py.is_valid() || !tau.is_valid()) {
    fail("cover image tables are not permutations");
    rep.ok = false;
    return rep;
  }
  if (c.degree != cr.degree)
    fail("stated degree " + std::to_string(c.degree) + " is not rows x width");
  if (!is_transitive({cr.px, cr.py}, cr.degree)) fail("cover is disconnected");
  const TwistEndo h = twist_endo(used);
  if (!is_intertwiner(cr, h, tau))
    fail("tau does not intertwine the lifted monodromy");
  if (!surgery_lifts(cr, tau, c.used_slope))
    fail("the filling curve does not lift closed");
  if (!cc.modified && !cc.sigma.empty()) {
    CutData cut;
    cut.rows = cc.rows;
    cut.width = cc.width;
    for (const std::vector<int>& row : cc.sigma) cut.sigma.push_back(Perm(row));
    if (!cut_data_valid(cut) || !check_condition_one(cut) ||
        !check_condition_two(cut))
      fail("row data fails the cover conditions");
  }
  if (rep.failures.empty()) {
    HomologySummary hs = b1_filled_cover(used, c.used_slope, cr, tau);
    if (hs.b1 != c.b1)
      fail("recomputed cover b1 = " + std::to_string(hs.b1) +
           ", certificate says " + std::to_string(c.b1));
    else if (hs.torsion != c.torsion)
      fail("recomputed torsion differs");
    HomologySummary unf = b1_unfilled_cover(used, cr, tau);
    if (unf.b1 != wang_b1(induced_fiber_action_matrix(used, cr, tau)))
      fail("fiber-action cross-check failed");
    else if (c.unfilled_b1 >= 0 && unf.b1 != c.unfilled_b1)
      fail("stored unfilled b1 differs from the recomputed value");
  }
  rep.ok = rep.failures.empty();
  return rep;
}

std::vector<ScanRow> scan_slopes(const TwistWord& w, int window,
                                 const EngineConfig& cfg) {
  if (window < 0) throw std::invalid_argument("window must be nonnegative");
  std::vector<ScanRow> rows;
  for (long long mu = -window; mu <= window; ++mu) {
    for (long long la = -window; la <= window; ++la) {
      Slope s{mu, la};
      if ((mu == 0 && la == 0) || !slope_coprime(s)) continue;
      Certificate c = certify(w, s, cfg);
      rows.push_back({s, c.status, c.case_name, c.degree, c.b1});
    }
  }
  return rows;
}

}  // namespace fibercover
