#include "specden/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace specden {

Int pow_int(const Int& base, std::uint64_t e) {
  Int acc = 1;
  Int b = base;
  while (e != 0) {
    if (e & 1u) acc *= b;
    e >>= 1u;
    if (e != 0) b *= b;
  }
  return acc;
}

Rational pow_rational(const Rational& base, std::int64_t e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0) throw std::domain_error("pow_rational: 0^negative");
  const std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Int num = pow_int(numerator(base), k);
  Int den = pow_int(denominator(base), k);
  if (e < 0) num.swap(den);
  return Rational(num, den);
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational_from_string: empty");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational_from_string: zero denominator");
    return Rational(num, den);
  }
  // decimal / scientific form
  std::string mant = s;
  std::int64_t exp10 = 0;
  const auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    mant = s.substr(0, epos);
    exp10 = std::stoll(s.substr(epos + 1));
  }
  bool neg = false;
  std::size_t i = 0;
  if (i < mant.size() && (mant[i] == '+' || mant[i] == '-')) {
    neg = mant[i] == '-';
    ++i;
  }
  Int digits = 0;
  std::int64_t frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < mant.size(); ++i) {
    const char c = mant[i];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("rational_from_string: bad literal " + s);
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      if (seen_dot) ++frac_digits;
      seen_digit = true;
    } else {
      throw std::invalid_argument("rational_from_string: bad literal " + s);
    }
  }
  if (!seen_digit) throw std::invalid_argument("rational_from_string: bad literal " + s);
  Rational r(digits);
  const std::int64_t e = exp10 - frac_digits;
  r *= pow_rational(Rational(10), e);
  return neg ? -r : r;
}

std::string fraction_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace specden
