#include "fibercover/reidemeister_schreier.hpp"

#include <stdexcept>

namespace fibercover {

Perm action_of_word(const CosetAction& act, const FreeWord& w) {
  Perm acc = perm_identity(act.degree);
  for (int letter : w) {
    int g = letter > 0 ? letter : -letter;
    if (g < 1 || g > static_cast<int>(act.gen_action.size()))
      throw std::invalid_argument("word letter outside generator range");
    acc = mul(acc, letter > 0 ? act.gen_action[g - 1]
                              : inverse(act.gen_action[g - 1]));
  }
  return acc;
}

bool action_respects(const GroupPresentation& p, const CosetAction& act) {
  if (static_cast<int>(act.gen_action.size()) != p.num_gens) return false;
  for (const Perm& g : act.gen_action)
    if (g.degree() != act.degree || !g.is_valid()) return false;
  for (const FreeWord& r : p.relators)
    if (!action_of_word(act, r).is_identity()) return false;
  return true;
}

RSData reidemeister_schreier(const GroupPresentation& amb,
                             const CosetAction& act) {
  if (!action_respects(amb, act))
    throw std::invalid_argument("action does not satisfy the presentation");
  if (!is_transitive(act.gen_action, act.degree))
    throw std::invalid_argument("coset action must be transitive");

  const int d = act.degree;
  const int g = amb.num_gens;
  std::vector<Perm> fwd = act.gen_action;
  std::vector<Perm> bwd;
  for (const Perm& p : fwd) bwd.push_back(inverse(p));

  RSData rs;
  rs.degree = d;
  rs.transversal.assign(d, FreeWord{});
  std::vector<bool> seen(d, false);
  std::vector<std::vector<bool>> tree(g, std::vector<bool>(d, false));
  // tree[a][c] marks the edge c --a--> fwd[a](c) as a spanning-tree edge.
  seen[0] = true;
  std::vector<int> queue{0};
  size_t head = 0;
  while (head < queue.size()) {
    int c = queue[head++];
    for (int a = 0; a < g; ++a)
      for (int dir = 0; dir < 2; ++dir) {
        int to = dir == 0 ? fwd[a](c) : bwd[a](c);
        if (seen[to]) continue;
        seen[to] = true;
        int letter = dir == 0 ? a + 1 : -(a + 1);
        rs.transversal[to] = rs.transversal[c];
        rs.transversal[to].push_back(letter);
        tree[a][dir == 0 ? c : to] = true;
        queue.push_back(to);
      }
  }

  rs.schreier_idx.assign(g, std::vector<int>(d, 0));
  for (int c = 0; c < d; ++c)
    for (int a = 0; a < g; ++a) {
      if (tree[a][c]) continue;
      FreeWord w = rs.transversal[c];
      w.push_back(a + 1);
      w = word_concat(w, word_inverse(rs.transversal[fwd[a](c)]));
      rs.schreier_idx[a][c] = ++rs.num_sub_gens;
      rs.sub_gen_words.push_back(free_reduce(w));
    }

  rs.sub.num_gens = rs.num_sub_gens;
  for (int i = 1; i <= rs.num_sub_gens; ++i)
    rs.sub.gen_names.push_back("s" + std::to_string(i));
  for (const FreeWord& r : amb.relators)
    for (int c = 0; c < d; ++c) {
      FreeWord w = rs_rewrite(rs, act, r, c);
      if (!w.empty()) rs.sub.relators.push_back(std::move(w));
    }
  return rs;
}

FreeWord rs_rewrite(const RSData& rs, const CosetAction& act,
                    const FreeWord& ambient, int start) {
  FreeWord out;
  int cur = start;
  for (int letter : ambient) {
    int a = (letter > 0 ? letter : -letter) - 1;
    if (letter > 0) {
      int idx = rs.schreier_idx[a][cur];
      if (idx != 0) out.push_back(idx);
      cur = act.gen_action[a](cur);
    } else {
      int prev = inverse(act.gen_action[a])(cur);
      int idx = rs.schreier_idx[a][prev];
      if (idx != 0) out.push_back(-idx);
      cur = prev;
    }
  }
  return free_reduce(out);
}

}  // namespace fibercover
