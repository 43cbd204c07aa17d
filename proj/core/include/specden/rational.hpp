#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace specden {

// All certified quantities in this project are exact: arbitrary-precision
// integers and rationals. binary64 appears only in display columns and in the
// Monte Carlo / float-eigensolver paths, which are never used for certificates.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int pow_int(const Int& base, std::uint64_t e);

// base^e with e possibly negative; throws std::domain_error on 0^negative.
Rational pow_rational(const Rational& base, std::int64_t e);

// Accepts "p/q", plain integers, and decimal literals such as "0.27" or
// "1.5e-3". The result is exact (decimals are scaled powers of ten).
Rational rational_from_string(const std::string& s);

std::string fraction_string(const Rational& r);  // "p/q", or "p" when q == 1

double to_double(const Rational& r);

}  // namespace specden
