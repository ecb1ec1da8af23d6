#include "fibercover/low_index.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

namespace fibercover {

namespace {

std::vector<int> canonical_table(const CosetAction& act) {
  std::vector<int> best;
  const int d = act.degree;
  std::vector<Perm> inv;
  for (const Perm& p : act.gen_action) inv.push_back(inverse(p));
  for (int base = 0; base < d; ++base) {
    std::vector<int> relab(d, -1);
    std::vector<int> order;
    relab[base] = 0;
    order.push_back(base);
    for (size_t h = 0; h < order.size(); ++h) {
      int c = order[h];
      for (size_t a = 0; a < act.gen_action.size(); ++a)
        for (int dir = 0; dir < 2; ++dir) {
          int to = dir == 0 ? act.gen_action[a](c) : inv[a](c);
          if (relab[to] < 0) {
            relab[to] = static_cast<int>(order.size());
            order.push_back(to);
          }
        }
    }
    std::vector<int> flat;
    flat.reserve(act.gen_action.size() * d);
    for (const Perm& p : act.gen_action)
      for (int c = 0; c < d; ++c) flat.push_back(relab[p(order[c])]);
    if (best.empty() || flat < best) best = std::move(flat);
  }
  return best;
}

struct Searcher {
  const GroupPresentation& pres;
  int max_index;
  long long budget;
  int record_degree;  // -1: record all complete tables
  size_t max_found;
  bool complete = true;
  long long used = 0;

  int g;
  std::vector<std::vector<int>> fwd;  // [gen][coset] -> coset or -1
  std::vector<std::vector<int>> bwd;
  int count = 1;

  std::set<std::vector<int>> canon_seen;
  std::vector<CosetAction> found;

  Searcher(const GroupPresentation& p, int mi, long long nb, int rd, size_t mf)
      : pres(p),
        max_index(mi),
        budget(nb),
        record_degree(rd),
        max_found(mf),
        g(p.num_gens) {
    fwd.assign(g, std::vector<int>(mi, -1));
    bwd.assign(g, std::vector<int>(mi, -1));
  }

  bool done() const { return found.size() >= max_found || !complete; }

  void set_edge(int a, bool forward, int from, int to) {
    if (forward) {
      fwd[a][from] = to;
      bwd[a][to] = from;
    } else {
      bwd[a][from] = to;
      fwd[a][to] = from;
    }
  }

  // Scans relator r from coset c; deduces the edge when exactly one is
  // missing. Returns false on contradiction.
  bool scan(const FreeWord& r, int c, bool* deduced) {
    int cur = c;
    for (size_t i = 0; i < r.size(); ++i) {
      int letter = r[i];
      int a = (letter > 0 ? letter : -letter) - 1;
      int next = letter > 0 ? fwd[a][cur] : bwd[a][cur];
      if (next >= 0) {
        cur = next;
        continue;
      }
      // walk backwards from the closing coset to locate the edge target
      int tail = c;
      for (size_t j = r.size(); j > i + 1; --j) {
        int lj = r[j - 1];
        int aj = (lj > 0 ? lj : -lj) - 1;
        int prev = lj > 0 ? bwd[aj][tail] : fwd[aj][tail];
        if (prev < 0) return true;  // two holes: nothing to conclude
        tail = prev;
      }
      if (letter > 0) {
        if (bwd[a][tail] >= 0 && bwd[a][tail] != cur) return false;
        set_edge(a, true, cur, tail);
      } else {
        if (fwd[a][tail] >= 0 && fwd[a][tail] != cur) return false;
        set_edge(a, false, cur, tail);
      }
      *deduced = true;
      return true;
    }
    return cur == c;
  }

  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const FreeWord& r : pres.relators)
        for (int c = 0; c < count; ++c) {
          bool deduced = false;
          if (!scan(r, c, &deduced)) return false;
          changed = changed || deduced;
        }
    }
    return true;
  }

  bool find_slot(int* c, int* a) {
    for (int cc = 0; cc < count; ++cc)
      for (int aa = 0; aa < g; ++aa)
        if (fwd[aa][cc] < 0) {
          *c = cc;
          *a = aa;
          return true;
        }
    return false;
  }

  void record() {
    if (record_degree >= 0 && count != record_degree) return;
    CosetAction act;
    act.degree = count;
    for (int a = 0; a < g; ++a) {
      std::vector<int> img(fwd[a].begin(), fwd[a].begin() + count);
      act.gen_action.emplace_back(std::move(img));
    }
    if (!is_transitive(act.gen_action, count)) return;
    if (canon_seen.insert(canonical_table(act)).second)
      found.push_back(std::move(act));
  }

  void dfs() {
    if (done()) return;
    ++used;
    if (budget-- <= 0) {
      complete = false;
      return;
    }
    if (!propagate()) return;  // caller restores state
    int c, a;
    if (!find_slot(&c, &a)) {
      record();
      return;
    }
    for (int target = 0; target <= count && !done(); ++target) {
      bool fresh = target == count;
      if (fresh && count >= max_index) break;
      if (!fresh && bwd[a][target] >= 0) continue;
      auto sf = fwd;
      auto sb = bwd;
      int sc = count;
      if (fresh) ++count;
      set_edge(a, true, c, target);
      dfs();
      fwd = std::move(sf);
      bwd = std::move(sb);
      count = sc;
    }
  }
};

LowIndexResult run_search(const GroupPresentation& p, int max_index,
                          long long node_budget, int record_degree,
                          size_t max_found) {
  if (max_index < 1) return {{}, true};
  if (p.num_gens == 0) {
    CosetAction trivial{1, {}};
    bool keep = record_degree < 0 || record_degree == 1;
    return {keep ? std::vector<CosetAction>{trivial}
                 : std::vector<CosetAction>{},
            true};
  }
  Searcher s(p, max_index, node_budget, record_degree, max_found);
  s.dfs();
  std::vector<std::pair<std::vector<int>, CosetAction>> keyed;
  for (CosetAction& a : s.found)
    keyed.emplace_back(canonical_table(a), std::move(a));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) {
              if (x.second.degree != y.second.degree)
                return x.second.degree < y.second.degree;
              return x.first < y.first;
            });
  LowIndexResult out;
  out.complete = s.complete;
  out.nodes_used = s.used;
  for (auto& kv : keyed) out.actions.push_back(std::move(kv.second));
  return out;
}

}  // namespace

LowIndexResult low_index_actions(const GroupPresentation& p, int max_index,
                                 long long node_budget) {
  return run_search(p, max_index, node_budget, -1,
                    std::numeric_limits<size_t>::max());
}

LowIndexResult low_index_actions_of_degree(const GroupPresentation& p,
                                           int degree, long long node_budget,
                                           size_t max_found) {
  return run_search(p, degree, node_budget, degree, max_found);
}

}  // namespace fibercover
