#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

namespace orbitcc {

// All engine arithmetic is exact; no floating point anywhere.
using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;

bool is_integer(const Rat& r);

/// Largest integer <= r.
long long rat_floor(const Rat& r);

/// r - floor(r), in [0, 1).
Rat frac_part(const Rat& r);

/// "p/q" in lowest terms, or "p" when integral.
std::string rat_to_string(const Rat& r);

/// Accepts "p", "-p" or "p/q". Throws ParseError on anything else.
Rat parse_rational(const std::string& text);

std::string ratvec_to_string(const RatVec& v);

}  // namespace orbitcc
