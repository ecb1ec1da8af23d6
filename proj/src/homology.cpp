#include "fibercover/homology.hpp"

#include <algorithm>

namespace fibercover {

HomologySummary homology_of_presentation(const GroupPresentation& p) {
  AbelianInvariants inv = abelian_invariants(p);
  return {inv.b1, inv.torsion};
}

namespace {

CosetAction bundle_action(const CoverRep& rep, const Perm& tau) {
  return CosetAction{rep.degree, {rep.px, rep.py, tau}};
}

HomologySummary cover_homology(const GroupPresentation& amb,
                               const CosetAction& act) {
  RSData rs = reidemeister_schreier(amb, act);
  return homology_of_presentation(rs.sub);
}

}  // namespace

HomologySummary b1_filled_cover(const TwistWord& w, const Slope& s,
                                const CoverRep& rep, const Perm& tau) {
  return cover_homology(filled_mapping_torus_presentation(w, s),
                        bundle_action(rep, tau));
}

HomologySummary b1_unfilled_cover(const TwistWord& w, const CoverRep& rep,
                                  const Perm& tau) {
  return cover_homology(mapping_torus_presentation(w),
                        bundle_action(rep, tau));
}

IntMat induced_fiber_action_matrix(const TwistWord& w, const CoverRep& rep,
                                   const Perm& tau) {
  CosetAction fiber_act{rep.degree, {rep.px, rep.py}};
  GroupPresentation f2 = free_group_presentation(2);
  RSData rs = reidemeister_schreier(f2, fiber_act);
  TwistEndo h = twist_endo(w);
  const int c0 = inverse(tau)(0);
  const FreeWord& t0 = rs.transversal[c0];
  IntMat a = intmat(rs.num_sub_gens, rs.num_sub_gens);
  for (int i = 0; i < rs.num_sub_gens; ++i) {
    FreeWord img = word_conj(t0, endo_apply(h, rs.sub_gen_words[i]));
    FreeWord sub = rs_rewrite(rs, fiber_act, img, 0);
    std::vector<Int> col = abelianize(sub, rs.num_sub_gens);
    for (int r = 0; r < rs.num_sub_gens; ++r) a.at(r, i) = col[r];
  }
  return a;
}

int wang_b1(const IntMat& fiber_action) {
  IntMat m = fiber_action;
  for (int i = 0; i < m.rows; ++i) m.at(i, i) -= 1;
  SNFResult s = smith_normal_form(m);
  return 1 + (m.cols - s.rank);
}

FixedPeripheral fixed_and_peripheral(const TwistWord& w, const CoverRep& rep,
                                     const Perm& tau) {
  CosetAction fiber_act{rep.degree, {rep.px, rep.py}};
  GroupPresentation f2 = free_group_presentation(2);
  RSData rs = reidemeister_schreier(f2, fiber_act);

  IntMat a = induced_fiber_action_matrix(w, rep, tau);
  for (int i = 0; i < a.rows; ++i) a.at(i, i) -= 1;
  std::vector<std::vector<Int>> fixed = kernel_basis(a);

  FixedPeripheral out;
  out.fix_rank = static_cast<int>(fixed.size());

  Perm beta = perm_of_word(rep, boundary_word());
  std::vector<std::vector<Int>> boundary;
  for (const auto& cyc : cycles(beta)) {
    int p = *std::min_element(cyc.begin(), cyc.end());
    FreeWord lift = rs_rewrite(
        rs, fiber_act, word_pow(boundary_word(), Int(cyc.size())), p);
    boundary.push_back(abelianize(lift, rs.num_sub_gens));
  }
  out.boundary_count = static_cast<int>(boundary.size());

  IntMat b = intmat(static_cast<int>(boundary.size()), rs.num_sub_gens);
  for (size_t r = 0; r < boundary.size(); ++r)
    for (int c = 0; c < rs.num_sub_gens; ++c)
      b.at(static_cast<int>(r), c) = boundary[r][c];
  int base_rank = smith_normal_form(b).rank;
  out.peripheral_rank = base_rank;

  for (const auto& v : fixed) {
    IntMat ext = intmat(b.rows + 1, b.cols);
    ext.a = b.a;
    ext.a.insert(ext.a.end(), v.begin(), v.end());
    if (smith_normal_form(ext).rank > base_rank) {
      out.interior_witness = true;
      out.witness = v;
      break;
    }
  }
  return out;
}

}  // namespace fibercover
