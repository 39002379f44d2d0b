#pragma once

#include <utility>
#include <vector>

#include "ade/algebra/cyclotomic.hpp"
#include "ade/algebra/polynomial.hpp"

namespace ade {

/// Polynomials s_i(t) with s_i(q + 1/q) = q^i + q^-i for i = 0..k
/// (s_0 = 2, s_1 = t, s_{i+1} = t*s_i - s_{i-1}).
inline std::vector<QPoly> symmetric_power_sums(std::size_t k) {
  std::vector<QPoly> s;
  s.push_back(QPoly::constant(Var::t, BigRational(2)));
  if (k >= 1) s.push_back(var_power(Var::t, 1));
  for (std::size_t i = 1; i < k; ++i) s.push_back(var_power(Var::t, 1) * s[i] - s[i - 1]);
  return s;
}

/// For a palindromic p of even degree 2k, the unique F of degree k with
/// p(q) = q^k F(q + 1/q).
inline QPoly fold_palindromic(const QPoly& p) {
  if (p.var() != Var::q) throw VariableMismatch("fold_palindromic expects a polynomial in q");
  if (p.is_zero()) return QPoly(Var::t);
  if (p.degree() % 2 != 0) throw InvalidParameter("fold_palindromic needs even degree");
  if (!p.is_palindromic(p.degree())) throw InvalidParameter("fold_palindromic needs a palindromic polynomial");
  const auto k = static_cast<std::size_t>(p.degree() / 2);
  const auto basis = symmetric_power_sums(k);
  QPoly f = QPoly::constant(Var::t, p.coeffs()[k]);
  for (std::size_t i = 1; i <= k; ++i) f += basis[i].scaled(p.coeffs()[k + i]);
  return f;
}

/// p(q + 1/q) = P(q) / q^d with d = deg p. Returns (P, d).
inline std::pair<QPoly, int> substitute_t(const QPoly& p) {
  if (p.var() != Var::t) throw VariableMismatch("substitute_t expects a polynomial in t");
  if (p.is_zero()) return {QPoly(Var::q), 0};
  const int d = p.degree();
  const QPoly q2p1 = make_poly(Var::q, {1, 0, 1});
  QPoly out(Var::q);
  QPoly power = one_poly(Var::q);  // (q^2 + 1)^j
  for (int j = 0; j <= d; ++j) {
    const BigRational& c = p.coeffs()[static_cast<std::size_t>(j)];
    if (sgn(c) != 0) out += power.scaled(c).shifted(static_cast<std::size_t>(d - j));
    power *= q2p1;
  }
  return {out, d};
}

/// Minimal polynomial of 2cos(pi/h), obtained by folding Phi_{2h}.
inline QPoly cox(int h) {
  if (h < 2) throw InvalidParameter("Coxeter number must be at least 2");
  return fold_palindromic(cyclotomic(2L * h, Var::q));
}

}  // namespace ade
