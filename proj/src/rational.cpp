#include "nncirc/rational.hpp"

namespace nncirc {

std::string rat_to_string(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  size_t slash = s.find('/');
  auto parse_int = [](const std::string& t) -> Int {
    if (t.empty()) throw std::invalid_argument("bad rational literal");
    size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("bad rational literal");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("bad rational literal: " + t);
    // big-int construction rejects a leading '+'
    return t[0] == '+' ? Int(t.substr(1)) : Int(t);
  };
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rat(num, den);  // normalizes sign and gcd
}

}  // namespace nncirc
