#include "orbitcc/rational.hpp"

#include <cstdlib>

#include "orbitcc/errors.hpp"

namespace orbitcc {

bool is_integer(const Rat& r) { return r.denominator() == 1; }

long long rat_floor(const Rat& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

Rat frac_part(const Rat& r) { return r - Rat(rat_floor(r)); }

std::string rat_to_string(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long n = std::stoll(text, &used);
      if (used != text.size()) throw ParseError("bad rational literal: " + text);
      return Rat(n);
    }
    long long num = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw ParseError("bad rational literal: " + text);
    long long den = std::stoll(text.substr(slash + 1), &used);
    if (used != text.size() - slash - 1 || den == 0)
      throw ParseError("bad rational literal: " + text);
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + text);
  } catch (const std::out_of_range&) {
    throw ParseError("rational literal out of range: " + text);
  }
}

std::string ratvec_to_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(v[i]);
  }
  return s + ")";
}

}  // namespace orbitcc
