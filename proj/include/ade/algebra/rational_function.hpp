#pragma once

#include <algorithm>
#include <string>
#include <utility>

#include "ade/algebra/polynomial.hpp"

namespace ade {

/// Reduced fraction num/den over Q: gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  explicit RationalFunction(Var var = Var::q) : num_(var), den_(one_poly(var)) {}
  explicit RationalFunction(QPoly num) : num_(std::move(num)), den_(one_poly(num_.var())) {}
  RationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  Var var() const { return num_.var(); }
  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// The numerator when the denominator is 1; throws otherwise.
  QPoly as_polynomial() const {
    if (!is_polynomial()) throw NonPolynomialResult("rational function has a nontrivial denominator");
    return num_;
  }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    const QPoly g = gcd(a.den_, b.den_);
    const QPoly ad = exact_div(a.den_, g);
    const QPoly bd = exact_div(b.den_, g);
    return RationalFunction(a.num_ * bd + b.num_ * ad, ad * b.den_);
  }

  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction(a.var());
    // cross-cancel first so the products stay small
    const QPoly g1 = gcd(a.num_, b.den_);
    const QPoly g2 = gcd(b.num_, a.den_);
    return RationalFunction(exact_div(a.num_, g1) * exact_div(b.num_, g2), exact_div(a.den_, g2) * exact_div(b.den_, g1));
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw Error("rational function division by zero");
    return a * RationalFunction(b.den_, b.num_);
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  RationalFunction scaled(const BigRational& c) const { return RationalFunction(num_.scaled(c), den_); }

 private:
  struct Reduced {};
  RationalFunction(QPoly num, QPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (num_.var() != den_.var()) throw VariableMismatch("numerator and denominator in different variables");
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = one_poly(num_.var());
      return;
    }
    const QPoly g = gcd(primitive_part(num_), primitive_part(den_));
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    const BigRational lead = den_.leading();
    if (lead != 1) {
      const BigRational inv = BigRational(1) / lead;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  QPoly num_;
  QPoly den_;
};

inline std::string to_string(const RationalFunction& r) {
  if (r.is_polynomial()) return to_string(r.num());
  auto wrap = [](const QPoly& p) {
    std::string s = to_string(p);
    return p.coeffs().size() > 1 && std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                                  [](const BigRational& c) { return sgn(c) != 0; }) > 1
               ? "(" + s + ")"
               : s;
  };
  return wrap(r.num()) + "/" + wrap(r.den());
}

}  // namespace ade
