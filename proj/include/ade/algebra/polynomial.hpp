#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ade/algebra/rational.hpp"
#include "ade/errors.hpp"

namespace ade {

/// Every polynomial carries the name of its indeterminate; mixing t and q in
/// one operation is an error rather than a silent coercion.
enum class Var { t, q };

inline char var_name(Var v) { return v == Var::t ? 't' : 'q'; }

/// Coefficient-domain hooks. Types whose zero depends on a context (a
/// cyclotomic field) derive it from an existing value via zero_like.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<BigRational> {
  static BigRational zero() { return BigRational(0); }
  static BigRational zero_like(const BigRational&) { return BigRational(0); }
  static BigRational one_like(const BigRational&) { return BigRational(1); }
  static bool is_zero(const BigRational& x) { return sgn(x) == 0; }
  static BigRational inverse(const BigRational& x) {
    if (sgn(x) == 0) throw Error("division by zero");
    return BigRational(1) / x;
  }
};

/// Dense univariate polynomial, index = exponent. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
template <class C>
class Polynomial {
 public:
  using coeff_type = C;
  using traits = CoeffTraits<C>;

  explicit Polynomial(Var var = Var::q) : var_(var) {}
  Polynomial(Var var, std::vector<C> coeffs) : var_(var), coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Var var, C c) { return Polynomial(var, std::vector<C>{std::move(c)}); }

  static Polynomial monomial(Var var, const C& c, std::size_t exponent) {
    std::vector<C> v(exponent, traits::zero_like(c));
    v.push_back(c);
    return Polynomial(var, std::move(v));
  }

  Var var() const { return var_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<C>& coeffs() const { return coeffs_; }
  const C& leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  C coeff(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    if constexpr (requires { traits::zero(); }) {
      return traits::zero();
    } else {
      if (coeffs_.empty()) throw Error("coefficient of a context-free zero polynomial");
      return traits::zero_like(coeffs_.front());
    }
  }

  /// Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!traits::is_zero(coeffs_[i])) return static_cast<int>(i);
    return -1;
  }

  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Multiply by var^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<C> v(k, traits::zero_like(coeffs_.front()));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(var_, std::move(v));
  }

  /// Exact division by var^k; throws when the low coefficients are nonzero.
  Polynomial unshifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i)
      if (!traits::is_zero(coeffs_[i])) throw NonPolynomialResult("division by a power of the variable is not exact");
    if (k >= coeffs_.size()) return Polynomial(var_);
    return Polynomial(var_, std::vector<C>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
  }

  Polynomial scaled(const C& s) const {
    std::vector<C> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c * s);
    return Polynomial(var_, std::move(v));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(traits::inverse(leading()));
  }

  /// Coefficients reversed around `center_degree`: var^d * p(1/var).
  Polynomial reciprocal(int center_degree) const {
    if (is_zero()) return *this;
    if (degree() > center_degree) throw InvalidParameter("reciprocal degree below polynomial degree");
    std::vector<C> v(static_cast<std::size_t>(center_degree) + 1, traits::zero_like(coeffs_.front()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[static_cast<std::size_t>(center_degree) - i] = coeffs_[i];
    return Polynomial(var_, std::move(v));
  }

  /// var^d * p(1/var) == p(var).
  bool is_palindromic(int center_degree) const {
    if (is_zero()) return true;
    if (degree() > center_degree) return false;
    return reciprocal(center_degree) == *this;
  }

  C evaluate(const C& x) const {
    if (coeffs_.empty()) return traits::zero_like(x);
    C acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  Polynomial operator-() const {
    std::vector<C> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return Polynomial(var_, std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_var(a, b);
    const Polynomial& big = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
    const Polynomial& small = &big == &a ? b : a;
    std::vector<C> v = big.coeffs_;
    for (std::size_t i = 0; i < small.coeffs_.size(); ++i) v[i] = v[i] + small.coeffs_[i];
    return Polynomial(a.var_, std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_var(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.var_);
    std::vector<C> v(a.coeffs_.size() + b.coeffs_.size() - 1, traits::zero_like(a.coeffs_.front()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (traits::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (traits::is_zero(b.coeffs_[j])) continue;
        v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(a.var_, std::move(v));
  }

  friend Polynomial operator*(const Polynomial& a, const C& s) { return a.scaled(s); }
  friend Polynomial operator*(const C& s, const Polynomial& a) { return a.scaled(s); }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Euclidean division over a field: a = q*b + r with deg r < deg b.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    check_var(a, b);
    if (b.is_zero()) throw Error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(a.var_), a};
    const C inv_lead = traits::inverse(b.leading());
    std::vector<C> rem = a.coeffs_;
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<C> quot(rem.size() - db, traits::zero_like(b.leading()));
    for (std::size_t k = rem.size(); k-- > db;) {
      if (traits::is_zero(rem[k])) continue;
      C f = rem[k] * inv_lead;
      const std::size_t shift = k - db;
      for (std::size_t j = 0; j <= db; ++j) {
        if (traits::is_zero(b.coeffs_[j])) continue;
        rem[shift + j] = rem[shift + j] - f * b.coeffs_[j];
      }
      quot[shift] = std::move(f);
    }
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(db), rem.end());
    return {Polynomial(a.var_, std::move(quot)), Polynomial(a.var_, std::move(rem))};
  }

  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  /// Division that must leave no remainder.
  friend Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw NonPolynomialResult("polynomial division is not exact");
    return q;
  }

  /// Monic greatest common divisor (zero if both inputs are zero).
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    check_var(a, b);
    while (!b.is_zero()) {
      Polynomial r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Extended Euclid: returns (g, s, t) with s*a + t*b = g and g monic.
  friend std::tuple<Polynomial, Polynomial, Polynomial> extended_gcd(const Polynomial& a, const Polynomial& b) {
    check_var(a, b);
    const Var v = a.var_;
    auto one = [&](const Polynomial& p) {
      return Polynomial::constant(v, traits::one_like(p.leading()));
    };
    if (a.is_zero() && b.is_zero()) return {Polynomial(v), Polynomial(v), Polynomial(v)};
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = a.is_zero() ? Polynomial(v) : one(a), s1(v);
    Polynomial t0(v), t1 = b.is_zero() ? Polynomial(v) : one(b);
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::exchange(r1, std::move(r));
      s0 = std::exchange(s1, s0 - q * s1);
      t0 = std::exchange(t1, t0 - q * t1);
    }
    const C inv = traits::inverse(r0.leading());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
  }

 private:
  static void check_var(const Polynomial& a, const Polynomial& b) {
    if (a.var_ != b.var_) throw VariableMismatch("polynomials in different variables");
  }

  void trim() {
    while (!coeffs_.empty() && traits::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  Var var_;
  std::vector<C> coeffs_;
};

using QPoly = Polynomial<BigRational>;

inline QPoly make_poly(Var var, std::initializer_list<long> coeffs) {
  std::vector<BigRational> v;
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(var, std::move(v));
}

inline QPoly var_power(Var var, std::size_t k) { return QPoly::monomial(var, BigRational(1), k); }

inline QPoly one_poly(Var var) { return QPoly::constant(var, BigRational(1)); }

/// Sum of coefficient * var^exponent for each exponent in the list (repeats add).
inline QPoly poly_from_exponents(Var var, const std::vector<int>& exponents) {
  QPoly p(var);
  for (int e : exponents) p += var_power(var, static_cast<std::size_t>(e));
  return p;
}

inline bool has_integer_coeffs(const QPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const BigRational& c) { return is_integer(c); });
}

inline bool has_nonnegative_coeffs(const QPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const BigRational& c) { return sgn(c) >= 0; });
}

/// Positive rational c such that p / c has coprime integer coefficients and a
/// positive leading coefficient sign is preserved.
inline BigRational content(const QPoly& p) {
  if (p.is_zero()) return BigRational(1);
  BigInteger num = 0, den = 1;
  for (const auto& c : p.coeffs()) {
    if (sgn(c) == 0) continue;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(BigRational(1) / content(p));
}

/// Multiset of exponents: coefficient c at exponent e contributes c copies of e.
/// Requires nonnegative integer coefficients.
inline std::vector<int> exponent_multiset(const QPoly& p) {
  if (!has_integer_coeffs(p) || !has_nonnegative_coeffs(p))
    throw InvalidParameter("exponent multiset needs nonnegative integer coefficients");
  std::vector<int> out;
  for (std::size_t e = 0; e < p.coeffs().size(); ++e) {
    long n = p.coeffs()[e].get_num().get_si();
    for (long k = 0; k < n; ++k) out.push_back(static_cast<int>(e));
  }
  return out;
}

namespace detail {

inline std::string coeff_text(const BigRational& c, bool leading_term, bool is_const, std::string& sign) {
  sign = sgn(c) < 0 ? "-" : (leading_term ? "" : "+");
  BigRational a = abs(c);
  if (is_const) return to_string(a);
  if (a == 1) return "";
  if (is_integer(a)) return to_string(a);
  return "(" + to_string(a) + ")";
}

}  // namespace detail

/// Human-readable form. q-polynomials are written in ascending powers
/// ("1-q^2+q^4"), t-polynomials in descending powers ("t^2-3").
inline std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  const char x = var_name(p.var());
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (sgn(p.coeffs()[i]) != 0) order.push_back(i);
  if (p.var() == Var::t) std::reverse(order.begin(), order.end());
  std::ostringstream out;
  bool first = true;
  for (std::size_t e : order) {
    std::string sign;
    std::string c = detail::coeff_text(p.coeffs()[e], first, e == 0, sign);
    out << sign << c;
    if (e > 0) {
      out << x;
      if (e > 1) out << '^' << e;
    }
    first = false;
  }
  return out.str();
}

}  // namespace ade
