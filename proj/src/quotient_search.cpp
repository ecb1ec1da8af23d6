#include "fibercover/quotient_search.hpp"

#include "fibercover/low_index.hpp"
#include "fibercover/reidemeister_schreier.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fibercover {

Int min_degree_for_order(const Int& order) {
  if (order <= 0) return Int(1) << 62;  // unreachable sentinel
  if (order == 1) return 1;
  Int rest = order;
  Int total = 0;
  for (Int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    Int pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    total += pk;
  }
  if (rest > 1) total += rest;
  return total;
}

namespace {

Perm witness_word(const std::vector<Perm>& gens, const FreeWord& w, int deg) {
  Perm acc = perm_identity(deg);
  for (int letter : w) {
    int a = (letter > 0 ? letter : -letter) - 1;
    acc = mul(acc, letter > 0 ? gens[a] : inverse(gens[a]));
  }
  return acc;
}

bool orders_ok(const QuotientRequest& q, const std::vector<Perm>& gens,
               int deg) {
  for (const auto& [w, ord] : q.exact_orders) {
    if (ord <= 0) return false;
    if (perm_order(witness_word(gens, w, deg)) != ord) return false;
  }
  for (const auto& [w, bound] : q.min_orders)
    if (perm_order(witness_word(gens, w, deg)) <= bound) return false;
  return true;
}

std::vector<int> flatten(const PermWitness& w) {
  std::vector<int> key{w.degree};
  for (const Perm& p : w.gens)
    key.insert(key.end(), p.img.begin(), p.img.end());
  return key;
}

}  // namespace

std::optional<PermWitness> regular_closure(const PermWitness& w, int cap) {
  // enumerate the generated group by breadth-first products
  std::map<std::vector<int>, int> index;
  std::vector<Perm> elems;
  Perm id = perm_identity(w.degree);
  index[id.img] = 0;
  elems.push_back(id);
  for (size_t h = 0; h < elems.size(); ++h) {
    for (const Perm& g : w.gens) {
      Perm nxt = mul(elems[h], g);
      if (index.count(nxt.img)) continue;
      if (static_cast<int>(elems.size()) >= cap) return std::nullopt;
      index[nxt.img] = static_cast<int>(elems.size());
      elems.push_back(std::move(nxt));
    }
  }
  const int n = static_cast<int>(elems.size());
  if (n == w.degree) return std::nullopt;  // already regular
  PermWitness out;
  out.degree = n;
  for (const Perm& g : w.gens) {
    std::vector<int> img(n);
    for (int e = 0; e < n; ++e) img[e] = index.at(mul(elems[e], g).img);
    out.gens.emplace_back(std::move(img));
  }
  out.note = w.note + " regular-closure";
  return out;
}

QuotientResult quotient_witnesses(const QuotientRequest& q) {
  QuotientResult out;
  int start_deg = 1;
  for (const auto& [w, ord] : q.exact_orders) {
    (void)w;
    if (ord <= 0) return out;  // unsatisfiable exactly
    Int md = min_degree_for_order(ord);
    if (md > q.degree_cap) {
      out.exhausted = true;  // no permutation of allowed degree has the order
      return out;
    }
    if (md > start_deg) start_deg = static_cast<int>(to_ll(md));
  }

  GroupPresentation pres = free_group_presentation(q.num_gens);
  pres.relators = q.relators;

  long long budget = q.node_budget;
  std::set<std::vector<int>> seen;
  for (int deg = start_deg; deg <= q.degree_cap; ++deg) {
    if (budget <= 0) {
      out.exhausted = true;
      break;
    }
    LowIndexResult res =
        low_index_actions_of_degree(pres, deg, budget, 4 * q.max_witnesses);
    budget -= res.nodes_used;
    if (!res.complete) {
      out.exhausted = true;
      break;  // deeper rounds are at least as hard
    }
    for (const CosetAction& act : res.actions) {
      if (!orders_ok(q, act.gen_action, act.degree)) continue;
      PermWitness w{act.degree, act.gen_action,
                    "degree-" + std::to_string(act.degree)};
      if (seen.insert(flatten(w)).second) out.witnesses.push_back(w);
      if (auto reg = regular_closure(w, q.regular_cap))
        if (seen.insert(flatten(*reg)).second)
          out.witnesses.push_back(std::move(*reg));
      if (out.witnesses.size() >= q.max_witnesses) return out;
    }
  }
  if (out.witnesses.empty()) out.exhausted = true;
  return out;
}

QuotientResult triangle_quotient(const Int& p, const Int& q, const Int& r,
                                 int degree_cap, long long node_budget,
                                 int regular_cap, size_t max_witnesses) {
  QuotientRequest req;
  req.num_gens = 2;
  req.degree_cap = degree_cap;
  req.node_budget = node_budget;
  req.regular_cap = regular_cap;
  req.max_witnesses = max_witnesses;
  FreeWord a{1}, b{2}, ab{1, 2};
  req.relators = {word_pow(a, p), word_pow(b, q), word_pow(ab, r)};
  req.exact_orders = {{a, p}, {b, q}, {ab, r}};

  if (p == 2 && q == 2 && r >= 2) {
    // Dihedral closed form: a(j) = -j, b(j) = 1 - j, ab(j) = j + 1 mod r.
    QuotientResult out;
    if (r == 2) {
      PermWitness w{4,
                    {Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})},
                    "klein-closed-form"};
      if (w.degree <= degree_cap) out.witnesses.push_back(std::move(w));
      else out.exhausted = true;
      return out;
    }
    long long rr = to_ll(r);
    if (rr <= degree_cap) {
      std::vector<int> ia(rr), ib(rr);
      for (long long j = 0; j < rr; ++j) {
        ia[j] = static_cast<int>((rr - j) % rr);
        ib[j] = static_cast<int>(((1 - j) % rr + rr) % rr);
      }
      PermWitness w{static_cast<int>(rr),
                    {Perm(std::move(ia)), Perm(std::move(ib))},
                    "dihedral-closed-form"};
      out.witnesses.push_back(std::move(w));
    } else {
      out.exhausted = true;
    }
    return out;
  }
  return quotient_witnesses(req);
}

}  // namespace fibercover
