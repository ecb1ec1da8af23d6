#pragma once

#include "fibercover/perm.hpp"
#include "fibercover/presentation.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fibercover {

struct PermWitness {
  int degree = 0;
  std::vector<Perm> gens;
  std::string note;
};

struct QuotientRequest {
  int num_gens = 0;
  std::vector<FreeWord> relators;
  // ord(word) must equal the value exactly (value 0 is unsatisfiable).
  std::vector<std::pair<FreeWord, Int>> exact_orders;
  // ord(word) must exceed the value.
  std::vector<std::pair<FreeWord, Int>> min_orders;
  int degree_cap = 64;
  long long node_budget = 2'000'000;
  int regular_cap = 64;      // regular-closure group-order bound
  size_t max_witnesses = 64;  // stop streaming after this many
};

struct QuotientResult {
  std::vector<PermWitness> witnesses;
  bool exhausted = false;  // budget ran out or cap reached without certainty
};

// Transitive permutation witnesses satisfying every relator and order
// requirement, streamed in ascending degree; each witness whose generated
// group is small enough is followed by its regular closure.
QuotientResult quotient_witnesses(const QuotientRequest& q);

// Witnesses for <a, b | a^p, b^q, (ab)^r> with exact element orders p, q, r.
QuotientResult triangle_quotient(const Int& p, const Int& q, const Int& r,
                                 int degree_cap, long long node_budget,
                                 int regular_cap = 64,
                                 size_t max_witnesses = 64);

// Smallest permutation degree admitting an element of the given order.
Int min_degree_for_order(const Int& order);

// Right-regular action of the group generated by the witness, when its order
// does not exceed cap.
std::optional<PermWitness> regular_closure(const PermWitness& w, int cap);

}  // namespace fibercover
