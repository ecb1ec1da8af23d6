#include "fibercover/free_word.hpp"

#include <cstdlib>
#include <sstream>

namespace fibercover {

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int letter : w) {
    if (letter == 0) continue;
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

FreeWord word_inverse(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

FreeWord word_concat(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

FreeWord word_pow(const FreeWord& w, const Int& e) {
  FreeWord base = e < 0 ? word_inverse(w) : w;
  Int reps = abs_int(e);
  FreeWord out;
  for (Int i = 0; i < reps; ++i) out = word_concat(out, base);
  return out;
}

FreeWord word_conj(const FreeWord& t, const FreeWord& w) {
  return word_concat(word_concat(t, w), word_inverse(t));
}

std::vector<Int> abelianize(const FreeWord& w, int gens) {
  std::vector<Int> v(gens, 0);
  for (int letter : w) {
    int g = std::abs(letter) - 1;
    if (g < gens) v[g] += letter > 0 ? 1 : -1;
  }
  return v;
}

bool is_reduced(const FreeWord& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == -w[i + 1] || w[i] == 0) return false;
  return !(w.size() == 1 && w[0] == 0);
}

std::string word_str(const FreeWord& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size();) {
    int letter = w[i];
    size_t j = i;
    while (j < w.size() && w[j] == letter) ++j;
    size_t run = j - i;
    int g = std::abs(letter) - 1;
    std::string name = g < static_cast<int>(names.size())
                           ? names[g]
                           : "g" + std::to_string(g + 1);
    os << name;
    long long e = static_cast<long long>(run) * (letter > 0 ? 1 : -1);
    if (e != 1) os << "^" << e;
    i = j;
  }
  return os.str();
}

}  // namespace fibercover
