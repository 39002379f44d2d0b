#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "ade/algebra/cyclotomic.hpp"
#include "ade/algebra/fold.hpp"
#include "ade/algebra/matrix.hpp"
#include "ade/algebra/rational_function.hpp"

using namespace ade;

namespace {

int mobius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

// Phi_n = prod_{d | n} (q^d - 1)^mu(n/d), evaluated as numerator / denominator.
QPoly mobius_cyclotomic(long n) {
  QPoly num = one_poly(Var::q), den = one_poly(Var::q);
  for (long d = 1; d <= n; ++d) {
    if (n % d) continue;
    const QPoly f = var_power(Var::q, static_cast<std::size_t>(d)) - one_poly(Var::q);
    const int mu = mobius(n / d);
    if (mu == 1) num *= f;
    if (mu == -1) den *= f;
  }
  return exact_div(num, den);
}

QPoly random_poly(std::mt19937& rng, Var var, int max_degree, bool nonzero = false) {
  std::uniform_int_distribution<int> deg(0, max_degree), c(-9, 9);
  for (;;) {
    std::vector<BigRational> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : v) x = c(rng);
    QPoly p(var, v);
    if (!nonzero || !p.is_zero()) return p;
  }
}

CycNumber random_cyc(std::mt19937& rng, const FieldPtr& f) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
  for (;;) {
    std::vector<BigRational> v(f->dimension());
    for (auto& x : v) x = make_rational(num(rng), den(rng));
    CycNumber z(f, v);
    if (!z.is_zero()) return z;
  }
}

}  // namespace

TEST(Rational, CanonicalForm) {
  const BigRational r = make_rational(6, -4);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_GT(r.get_den(), 0);
  EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_THROW(make_rational(1, 0), InvalidParameter);
}

TEST(Polynomial, TrimsAndRejectsMixedVariables) {
  const QPoly p(Var::q, {BigRational(1), BigRational(0), BigRational(0)});
  EXPECT_EQ(p.degree(), 0);
  EXPECT_EQ(QPoly(Var::q).degree(), -1);
  EXPECT_TRUE(QPoly(Var::q).coeffs().empty());
  EXPECT_THROW(make_poly(Var::q, {1}) + make_poly(Var::t, {1}), VariableMismatch);
}

TEST(Polynomial, DivisionIdentity) {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const QPoly a = random_poly(rng, Var::q, 10), b = random_poly(rng, Var::q, 5, true);
    const auto [quo, rem] = divmod(a, b);
    EXPECT_EQ(quo * b + rem, a);
    EXPECT_LT(rem.degree(), b.degree());
  }
}

TEST(Polynomial, GcdDividesBoth) {
  std::mt19937 rng(12);
  for (int i = 0; i < 30; ++i) {
    const QPoly c = random_poly(rng, Var::t, 3, true);
    const QPoly a = c * random_poly(rng, Var::t, 4, true), b = c * random_poly(rng, Var::t, 4, true);
    const QPoly g = gcd(a, b);
    EXPECT_TRUE((a % g).is_zero());
    EXPECT_TRUE((b % g).is_zero());
    EXPECT_TRUE((g % c.monic()).is_zero());
    EXPECT_EQ(g.leading(), 1);
  }
}

TEST(Polynomial, TextForms) {
  EXPECT_EQ(to_string(make_poly(Var::q, {1, 0, -1, 0, 1})), "1-q^2+q^4");
  EXPECT_EQ(to_string(make_poly(Var::t, {-3, 0, 1})), "t^2-3");
  EXPECT_EQ(to_string(make_poly(Var::q, {0, 1, 0, 2, 0, 1})), "q+2q^3+q^5");
}

TEST(Cyclotomic, SmallCases) {
  EXPECT_EQ(cyclotomic(1, Var::q), make_poly(Var::q, {-1, 1}));
  EXPECT_EQ(cyclotomic(4, Var::q), make_poly(Var::q, {1, 0, 1}));
  EXPECT_EQ(cyclotomic(12, Var::q), make_poly(Var::q, {1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, AgreesWithMobiusProduct) {
  for (long n = 1; n <= 60; ++n) EXPECT_EQ(cyclotomic(n, Var::q), mobius_cyclotomic(n)) << n;
}

TEST(Cyclotomic, DivisorProductIsQnMinusOne) {
  for (long n = 1; n <= 60; ++n) {
    QPoly prod = one_poly(Var::q);
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) prod *= cyclotomic(d, Var::q);
    EXPECT_EQ(prod, var_power(Var::q, static_cast<std::size_t>(n)) - one_poly(Var::q)) << n;
  }
}

TEST(Cyclotomic, EulerPhiIsDegree) {
  for (long n = 1; n <= 60; ++n) EXPECT_EQ(cyclotomic(n, Var::q).degree(), euler_phi(n));
}

TEST(CycNumber, InverseAndConjugation) {
  std::mt19937 rng(13);
  for (long n : {4L, 8L, 12L, 20L, 24L, 60L}) {
    const FieldPtr f = CyclotomicField::make(n);
    const CycNumber one = CycNumber::one(f);
    for (int i = 0; i < 100; ++i) {
      const CycNumber x = random_cyc(rng, f), y = random_cyc(rng, f);
      EXPECT_EQ(x * x.inverse(), one);
      EXPECT_EQ(x.conj().conj(), x);
      EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
      EXPECT_EQ(x.coeffs().size(), static_cast<std::size_t>(euler_phi(n)));
    }
  }
}

TEST(CycNumber, ZetaIsPrimitiveRoot) {
  for (long n : {5L, 12L, 60L}) {
    const FieldPtr f = CyclotomicField::make(n);
    EXPECT_EQ(CycNumber::zeta(f, n), CycNumber::one(f));
    for (long k = 1; k < n; ++k) EXPECT_NE(CycNumber::zeta(f, k), CycNumber::one(f));
  }
}

// Compare against floating-point evaluation at exp(2 pi i / N).
TEST(CycNumber, MatchesComplexEmbedding) {
  std::mt19937 rng(14);
  const long n = 24;
  const FieldPtr f = CyclotomicField::make(n);
  const std::complex<double> z = std::polar(1.0, 2 * 3.14159265358979323846 / n);
  auto eval = [&](const CycNumber& x) {
    std::complex<double> s = 0, p = 1;
    for (const auto& c : x.coeffs()) {
      s += c.get_d() * p;
      p *= z;
    }
    return s;
  };
  for (int i = 0; i < 20; ++i) {
    const CycNumber x = random_cyc(rng, f), y = random_cyc(rng, f);
    EXPECT_LT(std::abs(eval(x * y) - eval(x) * eval(y)), 1e-9);
    EXPECT_LT(std::abs(eval(x.conj()) - std::conj(eval(x))), 1e-9);
  }
}

TEST(CycNumber, CollapseToRational) {
  const FieldPtr f12 = CyclotomicField::make(12);
  EXPECT_EQ(cyc_to_rational(CycNumber::rational(f12, make_rational(3, 2))), make_rational(3, 2));
  const FieldPtr f5 = CyclotomicField::make(5);
  CycNumber s = CycNumber::zero(f5);
  for (long k = 1; k <= 4; ++k) s += CycNumber::zeta(f5, k);
  EXPECT_EQ(cyc_to_rational(s), -1);
  EXPECT_THROW(cyc_to_rational(CycNumber::zeta(CyclotomicField::make(8), 1)), NotRational);
}

TEST(CycNumber, ConductorsDoNotMix) {
  const FieldPtr f4 = CyclotomicField::make(4), f8 = CyclotomicField::make(8);
  EXPECT_THROW(CycNumber::zeta(f4, 1) + CycNumber::zeta(f8, 1), ConductorMismatch);
  EXPECT_EQ(CycNumber::zeta(f4, 1).embed(f8), CycNumber::zeta(f8, 2));
}

TEST(Fold, Examples) {
  EXPECT_EQ(fold_palindromic(make_poly(Var::q, {1, 0, -1, 0, 1})), make_poly(Var::t, {-3, 0, 1}));
  EXPECT_EQ(fold_palindromic(make_poly(Var::q, {1, 0, 1})), make_poly(Var::t, {0, 1}));
  EXPECT_EQ(fold_palindromic(one_poly(Var::q)), one_poly(Var::t));
  EXPECT_THROW(fold_palindromic(make_poly(Var::q, {1, 1, 0})), InvalidParameter);
  EXPECT_THROW(fold_palindromic(make_poly(Var::q, {1, 2, 3})), InvalidParameter);
}

TEST(Fold, CoxExamples) {
  EXPECT_EQ(cox(6), make_poly(Var::t, {-3, 0, 1}));
  EXPECT_EQ(cox(2), make_poly(Var::t, {0, 1}));
  EXPECT_EQ(cox(3), make_poly(Var::t, {-1, 1}));
  EXPECT_THROW(cox(1), InvalidParameter);
}

// Roots of cox(h) include 2cos(pi/h).
TEST(Fold, CoxVanishesAtTwoCos) {
  for (int h = 2; h <= 30; ++h) {
    const QPoly c = cox(h);
    const double x = 2 * std::cos(3.14159265358979323846 / h);
    double v = 0;
    for (int i = c.degree(); i >= 0; --i) v = v * x + c.coeffs()[static_cast<std::size_t>(i)].get_d();
    EXPECT_NEAR(v, 0.0, 1e-8) << h;
    EXPECT_EQ(c.degree(), euler_phi(2L * h) / 2);
  }
}

TEST(Fold, SubstituteExamples) {
  EXPECT_EQ(substitute_t(make_poly(Var::t, {-3, 0, 1})), std::make_pair(make_poly(Var::q, {1, 0, -1, 0, 1}), 2));
  EXPECT_EQ(substitute_t(make_poly(Var::t, {0, 1})), std::make_pair(make_poly(Var::q, {1, 0, 1}), 1));
  EXPECT_EQ(substitute_t(one_poly(Var::t)), std::make_pair(one_poly(Var::q), 0));
}

TEST(Fold, RoundTripOnRandomPolynomials) {
  std::mt19937 rng(15);
  for (int i = 0; i < 200; ++i) {
    const QPoly p = random_poly(rng, Var::t, 12);
    const auto [sub, d] = substitute_t(p);
    EXPECT_EQ(fold_palindromic(sub), p);
    if (!p.is_zero()) EXPECT_EQ(sub.degree(), 2 * d);
  }
}

TEST(RationalFunction, ReducedForm) {
  const RationalFunction f(make_poly(Var::t, {0, 2, 2}), make_poly(Var::t, {0, 0, 4}));
  EXPECT_EQ(f.num(), make_poly(Var::t, {1, 1}).scaled(make_rational(1, 2)));
  EXPECT_EQ(f.den(), make_poly(Var::t, {0, 1}));
  EXPECT_THROW(RationalFunction(one_poly(Var::t), QPoly(Var::t)), Error);
}

TEST(RationalFunction, FieldIdentities) {
  std::mt19937 rng(16);
  for (int i = 0; i < 100; ++i) {
    const QPoly a = random_poly(rng, Var::t, 8, true), b = random_poly(rng, Var::t, 8, true);
    const RationalFunction x(a, b), y(b, a);
    EXPECT_EQ(x * y, RationalFunction(one_poly(Var::t)));
    EXPECT_TRUE((x + (-x)).num().is_zero());
    EXPECT_EQ(x.den().leading(), 1);
    EXPECT_EQ(gcd(x.num(), x.den()).degree(), 0);
  }
}

TEST(Matrix, DeterminantOfPath) {
  // tI - adjacency of a path on three nodes
  PolyMatrix m(3, 3, QPoly(Var::t));
  for (std::size_t i = 0; i < 3; ++i) m(i, i) = var_power(Var::t, 1);
  m(0, 1) = m(1, 0) = m(1, 2) = m(2, 1) = make_poly(Var::t, {-1});
  EXPECT_EQ(determinant(m, Var::t), make_poly(Var::t, {0, -2, 0, 1}));
}

TEST(Matrix, SolveChecksBySubstitution) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 4;
    PolyMatrix m(n, n, QPoly(Var::t));
    std::vector<QPoly> rhs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, Var::t, 2);
      m(i, i) += var_power(Var::t, 3);
      rhs.push_back(random_poly(rng, Var::t, 2));
    }
    const auto x = solve_linear(m, rhs);
    for (std::size_t i = 0; i < n; ++i) {
      RationalFunction s(Var::t);
      for (std::size_t j = 0; j < n; ++j) s += RationalFunction(m(i, j)) * x[j];
      EXPECT_EQ(s, RationalFunction(rhs[i]));
    }
  }
  PolyMatrix singular(2, 2, make_poly(Var::t, {0, 1}));
  EXPECT_THROW(solve_linear(singular, {one_poly(Var::t), one_poly(Var::t)}), SingularSystem);
}
