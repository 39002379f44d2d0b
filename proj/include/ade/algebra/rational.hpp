#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "ade/errors.hpp"

namespace ade {

/// Arbitrary precision rational, always kept in canonical form
/// (positive denominator, coprime numerator and denominator).
using BigRational = mpq_class;
using BigInteger = mpz_class;

inline BigRational make_rational(long num, long den = 1) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const BigRational& r) { return r.get_str(10); }

inline BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return InvalidParameter("malformed rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  BigRational r;
  if (r.set_str(s, 10) != 0) throw bad();
  if (r.get_den() == 0) throw bad();
  r.canonicalize();
  return r;
}

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

}  // namespace ade
