#pragma once

#include "fibercover/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fibercover {

// Monodromy word as a sequence of signed twist powers, written left to right:
// Dx^{r1} Dy^{s1} Dx^{r2} ...  Block exponents are nonzero after
// normalization, and adjacent blocks use distinct generators.
struct TwistBlock {
  bool is_y = false;
  long long exp = 0;

  bool operator==(const TwistBlock&) const = default;
};

struct TwistWord {
  std::vector<TwistBlock> blocks;

  bool operator==(const TwistWord&) const = default;
  bool empty() const { return blocks.empty(); }
};

struct ParseError {
  std::string message;
  size_t position = 0;
};

// Grammar: blocks `Dx`/`Dy` with optional `^<int>`, separated by whitespace
// (the separator may be omitted), plus parenthesized groups `(...)^<int>`.
TwistWord parse_twist_word(const std::string& text);  // throws std::runtime_error
std::optional<TwistWord> try_parse_twist_word(const std::string& text,
                                              ParseError* err);

TwistWord normalize(const TwistWord& w);
TwistWord twist_concat(const TwistWord& a, const TwistWord& b);
TwistWord twist_pow(const TwistWord& w, long long e);
TwistWord twist_inverse(const TwistWord& w);
std::string twist_str(const TwistWord& w);

// Sum/gcd invariants of the alternating block form. The standard variant sums
// the Dx exponents and takes the gcd of the Dy exponents; the swapped variant
// exchanges the two roles. A variant is unavailable when its gcd set is empty
// (no blocks of that generator).
struct BundleInvariants {
  bool standard_ok = false;
  Int R = 0;  // sum of Dx exponents
  Int n = 0;  // gcd of |Dy exponents|
  bool swapped_ok = false;
  Int R_swapped = 0;  // sum of Dy exponents
  Int n_swapped = 0;  // gcd of |Dx exponents|
};

BundleInvariants bundle_invariants(const TwistWord& w);

// Conjugating a word by the quarter-turn symmetry of the fiber exchanges the
// twist generators with inverses: each Dx^r Dy^s pair maps to Dy^-r Dx^-s.
// The filling slope is unchanged.
TwistWord quarter_turn_conjugate(const TwistWord& w);

}  // namespace fibercover
