#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace nncirc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// Smallest nonnegative r with v <= 2^r, for v >= 0.
inline int bits_needed(const Int& v) {
  if (v <= 1) return 0;
  return static_cast<int>(boost::multiprecision::msb(Int(v - 1))) + 1;
}

// RES(a/b) = ceil(max(log2|a+1|, log2|b+1|)), computed by integer
// bit-length only. The backing rational is always in lowest terms with
// positive denominator, as the definition requires.
inline int resolution(const Rat& q) {
  Int a = numerator(q);
  Int b = denominator(q);
  Int na = abs(Int(a + 1));
  Int nb = abs(Int(b + 1));
  return std::max(bits_needed(na), bits_needed(nb));
}

// "p/q" with q omitted when 1; optional leading sign, no whitespace.
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace nncirc
