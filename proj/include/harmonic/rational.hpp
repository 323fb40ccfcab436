#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "harmonic/errors.hpp"

namespace harmonic {

// All counting is exact. BigInt is unbounded; Rational keeps gcd(num,den)=1
// and den>0 at all times (cpp_rational maintains that canonical form).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ratNumerator(const Rational& r) { return numerator(r); }
inline BigInt ratDenominator(const Rational& r) { return denominator(r); }

inline bool isIntegral(const Rational& r) { return denominator(r) == 1; }

/// "p/q" with the "/q" omitted for integral values; e.g. "2848/3", "3", "-5/3".
inline std::string ratToString(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline Rational ratFromString(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw DomainError("rational: zero denominator in '" + s + "'");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw DomainError("rational: cannot parse '" + s + "'");
  }
}

/// base^exp as an exact rational; negative exponents give 1/base^(-exp).
inline Rational ratPow(const BigInt& base, int exp) {
  BigInt p = 1;
  for (int i = 0; i < (exp >= 0 ? exp : -exp); ++i) p *= base;
  return exp >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

/// Narrowing check used where a spec value is known to be desk-scale.
inline bool fitsInt64(const BigInt& v) {
  return v >= std::numeric_limits<long long>::min() &&
         v <= std::numeric_limits<long long>::max();
}

} // namespace harmonic
