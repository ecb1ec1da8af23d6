#pragma once

#include "fibercover/sl2.hpp"
#include "fibercover/twist_word.hpp"
#include "fibercover/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fibercover {

enum class CaseTag { I, II, III, C3a, C3b, C4a, C4b, C5a, C5b };

std::string case_tag_str(CaseTag t);
std::optional<CaseTag> parse_case_tag(const std::string& s);

struct HypothesisResult {
  bool satisfied = false;
  bool degenerate = false;  // some denominator vanished
};

// Exact rational evaluation of the per-case slope inequality or guard.
// A vanishing denominator makes the hypothesis false and sets `degenerate`.
HypothesisResult hypothesis_check(CaseTag tag, const Int& R, const Slope& s);

// Word-rewriting rule: a word equal to pattern^p (p >= 1) maps to target^p,
// and the slope is acted on by slope_map^p (column vector (mu, lambda)).
struct FramingTransform {
  std::string name;
  TwistWord pattern;
  TwistWord target;
  Mat2 slope_map;
};

const std::vector<FramingTransform>& builtin_framings();

Slope apply_slope_map(const Mat2& m, const Slope& s);

struct FramingApplication {
  TwistWord word;
  Slope slope;
  long long power = 0;
};

std::optional<FramingApplication> apply_framing(const FramingTransform& t,
                                                const TwistWord& word,
                                                const Slope& s);

FramingTransform framing_inverse(const FramingTransform& t);

// Validity gate for user-supplied transforms.
bool framing_valid(const FramingTransform& t);

std::vector<Slope> fig8_exception_scan(int window);
std::vector<Slope> thm12_exception_scan(int window);
std::vector<Slope> pell_family(int count);

}  // namespace fibercover
