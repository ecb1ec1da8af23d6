#pragma once

#include "fibercover/types.hpp"

#include <string>
#include <vector>

namespace fibercover {

// Freely reduced word over generators g_1, g_2, ...; letter +k means g_k,
// letter -k means g_k^{-1}. Generator indices are 1-based; the fiber group
// uses g_1 = x, g_2 = y.
using FreeWord = std::vector<int>;

FreeWord free_reduce(const FreeWord& w);
FreeWord word_inverse(const FreeWord& w);
FreeWord word_concat(const FreeWord& a, const FreeWord& b);
FreeWord word_pow(const FreeWord& w, const Int& e);
FreeWord word_conj(const FreeWord& t, const FreeWord& w);  // t w t^-1

// Exponent-sum vector over the first `gens` generators.
std::vector<Int> abelianize(const FreeWord& w, int gens);

bool is_reduced(const FreeWord& w);
std::string word_str(const FreeWord& w, const std::vector<std::string>& names);

}  // namespace fibercover
