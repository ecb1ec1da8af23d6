#include "fibercover/presentation.hpp"

#include "fibercover/twist_endo.hpp"

namespace fibercover {

GroupPresentation free_group_presentation(int rank) {
  GroupPresentation p;
  p.num_gens = rank;
  for (int i = 1; i <= rank; ++i) p.gen_names.push_back("g" + std::to_string(i));
  return p;
}

GroupPresentation mapping_torus_presentation(const TwistWord& w) {
  GroupPresentation p;
  p.num_gens = 3;
  p.gen_names = {"x", "y", "t"};
  TwistEndo h = twist_endo(w);
  FreeWord rx = word_concat(FreeWord{3, 1, -3}, word_inverse(h.img_x));
  FreeWord ry = word_concat(FreeWord{3, 2, -3}, word_inverse(h.img_y));
  p.relators = {rx, ry};
  return p;
}

GroupPresentation filled_mapping_torus_presentation(const TwistWord& w,
                                                    const Slope& s) {
  GroupPresentation p = mapping_torus_presentation(w);
  FreeWord fill = word_concat(word_pow(FreeWord{3}, Int(s.mu)),
                              word_pow(boundary_word(), Int(s.lambda)));
  p.relators.push_back(fill);
  return p;
}

IntMat relator_matrix(const GroupPresentation& p) {
  IntMat m = intmat(static_cast<int>(p.relators.size()), p.num_gens);
  for (size_t r = 0; r < p.relators.size(); ++r) {
    std::vector<Int> row = abelianize(p.relators[r], p.num_gens);
    for (int c = 0; c < p.num_gens; ++c) m.at(static_cast<int>(r), c) = row[c];
  }
  return m;
}

AbelianInvariants abelian_invariants(const GroupPresentation& p) {
  SNFResult s = smith_normal_form(relator_matrix(p));
  AbelianInvariants out;
  out.b1 = p.num_gens - s.rank;
  for (const Int& d : s.diag)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

}  // namespace fibercover
