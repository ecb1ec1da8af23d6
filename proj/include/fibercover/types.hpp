#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibercover {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline long long to_ll(const Int& v) {
  if (v > Int(INT64_MAX) || v < Int(INT64_MIN))
    throw std::overflow_error("integer out of 64-bit range: " + v.str());
  return static_cast<long long>(v);
}

struct Slope {
  long long mu = 0;
  long long lambda = 0;

  bool operator==(const Slope&) const = default;
  bool operator<(const Slope& o) const {
    return mu != o.mu ? mu < o.mu : lambda < o.lambda;
  }
};

bool slope_coprime(const Slope& s);
std::string slope_str(const Slope& s);

}  // namespace fibercover
