#pragma once

#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ade/algebra/polynomial.hpp"
#include "ade/algebra/rational.hpp"
#include "ade/errors.hpp"

namespace ade {

inline long euler_phi(long n) {
  if (n < 1) throw InvalidParameter("euler_phi needs n >= 1");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

/// n-th cyclotomic polynomial, obtained by dividing var^n - 1 by every
/// Phi_d with d a proper divisor of n.
inline QPoly cyclotomic(long n, Var var = Var::q) {
  if (n < 1) throw InvalidParameter("cyclotomic index must be positive");
  std::vector<QPoly> phi(static_cast<std::size_t>(n) + 1, QPoly(var));
  for (long d : divisors(n)) {
    QPoly p = var_power(var, static_cast<std::size_t>(d)) - one_poly(var);
    for (long e : divisors(d))
      if (e < d) p = exact_div(p, phi[static_cast<std::size_t>(e)]);
    phi[static_cast<std::size_t>(d)] = std::move(p);
  }
  return phi[static_cast<std::size_t>(n)];
}

/// Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1). Immutable and
/// shared by every element of the field.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> make(long conductor) {
    return std::shared_ptr<const CyclotomicField>(new CyclotomicField(conductor));
  }

  long conductor() const { return n_; }
  std::size_t dimension() const { return dim_; }
  const QPoly& modulus() const { return modulus_; }

  /// Coefficients of zeta^e reduced modulo Phi_N.
  const std::vector<BigRational>& power(long e) const {
    long r = e % n_;
    if (r < 0) r += n_;
    return powers_[static_cast<std::size_t>(r)];
  }

  /// Reduce a coefficient vector of arbitrary length modulo Phi_N in place.
  void reduce(std::vector<BigRational>& v) const {
    const auto& m = modulus_.coeffs();
    for (std::size_t k = v.size(); k-- > dim_;) {
      if (sgn(v[k]) == 0) continue;
      const BigRational f = v[k];
      const std::size_t shift = k - dim_;
      for (std::size_t j = 0; j <= dim_; ++j)
        if (sgn(m[j]) != 0) v[shift + j] -= f * m[j];
    }
    v.resize(dim_);
  }

 private:
  explicit CyclotomicField(long n) : n_(n) {
    if (n < 1) throw InvalidParameter("conductor must be positive");
    modulus_ = cyclotomic(n, Var::q);
    dim_ = static_cast<std::size_t>(modulus_.degree());
    powers_.reserve(static_cast<std::size_t>(n));
    std::vector<BigRational> cur(dim_, BigRational(0));
    cur[0] = 1;
    for (long e = 0; e < n; ++e) {
      powers_.push_back(cur);
      std::vector<BigRational> next(dim_ + 1, BigRational(0));
      for (std::size_t i = 0; i < dim_; ++i) next[i + 1] = cur[i];
      reduce(next);
      cur = std::move(next);
    }
  }

  long n_;
  std::size_t dim_ = 0;
  QPoly modulus_{Var::q};
  std::vector<std::vector<BigRational>> powers_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Element of Q(zeta_N), stored as a residue modulo Phi_N.
class CycNumber {
 public:
  CycNumber(FieldPtr field, std::vector<BigRational> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw InvalidParameter("cyclotomic number without a field");
    if (coeffs_.size() > field_->dimension()) {
      field_->reduce(coeffs_);
    } else {
      coeffs_.resize(field_->dimension(), BigRational(0));
    }
  }

  static CycNumber zero(const FieldPtr& f) { return CycNumber(f, {}); }
  static CycNumber one(const FieldPtr& f) { return rational(f, BigRational(1)); }
  static CycNumber rational(const FieldPtr& f, const BigRational& r) { return CycNumber(f, std::vector<BigRational>{r}); }
  static CycNumber zeta(const FieldPtr& f, long e) { return CycNumber(f, f->power(e)); }

  const FieldPtr& field() const { return field_; }
  long conductor() const { return field_->conductor(); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (sgn(c) != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (sgn(coeffs_[i]) != 0) return false;
    return true;
  }

  /// Image under zeta -> zeta^-1 (complex conjugation in the standard embedding).
  CycNumber conj() const { return galois(-1); }

  /// Image under zeta -> zeta^k for k coprime to N.
  CycNumber galois(long k) const {
    if (std::gcd(k, field_->conductor()) != 1) throw InvalidParameter("Galois exponent not coprime to conductor");
    std::vector<BigRational> out(field_->dimension(), BigRational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (sgn(coeffs_[i]) == 0) continue;
      const auto& p = field_->power(k * static_cast<long>(i));
      for (std::size_t j = 0; j < out.size(); ++j)
        if (sgn(p[j]) != 0) out[j] += coeffs_[i] * p[j];
    }
    return CycNumber(field_, std::move(out));
  }

  CycNumber inverse() const {
    if (is_zero()) throw Error("inverse of zero cyclotomic number");
    QPoly a(Var::q, coeffs_);
    auto [g, s, t] = extended_gcd(a, field_->modulus());
    if (g.degree() != 0) throw Error("cyclotomic element is not invertible");
    return CycNumber(field_, s.coeffs());
  }

  /// Re-express in Q(zeta_M) for a multiple M of the conductor.
  CycNumber embed(const FieldPtr& target) const {
    const long n = conductor(), m = target->conductor();
    if (m % n != 0) throw ConductorMismatch("embedding target conductor is not a multiple");
    const long step = m / n;
    std::vector<BigRational> out(target->dimension(), BigRational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (sgn(coeffs_[i]) == 0) continue;
      const auto& p = target->power(step * static_cast<long>(i));
      for (std::size_t j = 0; j < out.size(); ++j)
        if (sgn(p[j]) != 0) out[j] += coeffs_[i] * p[j];
    }
    return CycNumber(target, std::move(out));
  }

  CycNumber operator-() const {
    std::vector<BigRational> v = coeffs_;
    for (auto& c : v) c = -c;
    return CycNumber(field_, std::move(v));
  }

  friend bool operator==(const CycNumber& a, const CycNumber& b) {
    return a.conductor() == b.conductor() && a.coeffs_ == b.coeffs_;
  }

  friend CycNumber operator+(const CycNumber& a, const CycNumber& b) {
    check(a, b);
    std::vector<BigRational> v = a.coeffs_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coeffs_[i];
    return CycNumber(a.field_, std::move(v));
  }

  friend CycNumber operator-(const CycNumber& a, const CycNumber& b) {
    check(a, b);
    std::vector<BigRational> v = a.coeffs_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.coeffs_[i];
    return CycNumber(a.field_, std::move(v));
  }

  friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    check(a, b);
    const std::size_t d = a.coeffs_.size();
    std::vector<BigRational> v(2 * d - 1, BigRational(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (sgn(b.coeffs_[j]) != 0) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    a.field_->reduce(v);
    return CycNumber(a.field_, std::move(v));
  }

  friend CycNumber operator*(const CycNumber& a, const BigRational& r) {
    std::vector<BigRational> v = a.coeffs_;
    for (auto& c : v) c *= r;
    return CycNumber(a.field_, std::move(v));
  }

  friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

  CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
  CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }

 private:
  static void check(const CycNumber& a, const CycNumber& b) {
    if (a.conductor() != b.conductor())
      throw ConductorMismatch("cyclotomic conductors differ: " + std::to_string(a.conductor()) + " vs " +
                              std::to_string(b.conductor()));
  }

  FieldPtr field_;
  std::vector<BigRational> coeffs_;
};

template <>
struct CoeffTraits<CycNumber> {
  static CycNumber zero_like(const CycNumber& x) { return CycNumber::zero(x.field()); }
  static CycNumber one_like(const CycNumber& x) { return CycNumber::one(x.field()); }
  static bool is_zero(const CycNumber& x) { return x.is_zero(); }
  static CycNumber inverse(const CycNumber& x) { return x.inverse(); }
};

using CycPoly = Polynomial<CycNumber>;

/// Rational value of a Galois-invariant element.
inline BigRational cyc_to_rational(const CycNumber& x) {
  if (!x.is_rational()) throw NotRational("cyclotomic number has irrational components");
  return x.coeffs()[0];
}

/// Collapse a polynomial over Q(zeta_N) whose coefficients are all rational.
inline QPoly collapse_to_rational(const CycPoly& p) {
  std::vector<BigRational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(cyc_to_rational(c));
  return QPoly(p.var(), std::move(v));
}

/// "1/2*z^3-z+1"-style rendering with z = zeta_N.
inline std::string to_string(const CycNumber& x) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = x.coeffs().size(); i-- > 0;) {
    const BigRational& c = x.coeffs()[i];
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) out << '-';
    else if (!first) out << '+';
    BigRational a = abs(c);
    if (i == 0) out << to_string(a);
    else {
      if (a != 1) out << to_string(a) << '*';
      out << 'z';
      if (i > 1) out << '^' << i;
    }
    first = false;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace ade
