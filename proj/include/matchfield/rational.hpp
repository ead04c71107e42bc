#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace matchfield {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using IntVector = std::vector<int>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Canonical text form: "p" for integers, otherwise "p/q" with q > 0 and gcd(p,q) = 1.
std::string to_string(const Rational& value);

/// Parses "p", "-p", "p/q"; throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(std::string_view text);

RationalVector to_rational(const IntVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const IntVector& a, const RationalVector& b);
long long dot(const IntVector& a, const IntVector& b);

bool is_integral(const Rational& value);

}  // namespace matchfield
