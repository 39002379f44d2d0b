#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ade/algebra/fold.hpp"
#include "ade/algebra/matrix.hpp"
#include "ade/algebra/polynomial.hpp"
#include "ade/algebra/rational_function.hpp"
#include "ade/graphs.hpp"

namespace ade {

/// Node weights n_i in Q(t) for a semiaffine graph, normalized by n_0 = 1.
struct TWeights {
  DynkinType type;
  std::vector<RationalFunction> values;
};

/// Weight polynomials N_i(q) normalized so that N_0 = 1 + q^h.
struct QNumerators {
  DynkinType type;
  int h = 0, a = 0, b = 0;
  std::vector<QPoly> N;
};

inline QNumerators make_qnumerators(const DynkinType& type, std::vector<QPoly> n) {
  const auto [a, b] = type.degrees();
  return QNumerators{type, type.coxeter_number(), a, b, std::move(n)};
}

/// Solve t*n_i = sum_j mult[i][j]*n_j at every node with outgoing edges,
/// with n_0 = 1 fixed. The sink (affine node) contributes no equation.
inline TWeights solve_semiaffine(const DirectedGraph& g) {
  if (g.form != GraphForm::semiaffine || !g.affine_index || *g.affine_index != 0)
    throw InvalidParameter("solve_semiaffine needs a semiaffine graph with affine node 0");
  const std::size_t n = g.size();
  for (std::size_t i = 1; i < n; ++i)
    if (g.out_degree(i) == 0) throw SingularSystem("non-affine node without successors");
  if (g.out_degree(0) != 0) throw InvalidParameter("affine node must be a sink");

  const std::size_t r = n - 1;
  PolyMatrix m(r, r, QPoly(Var::t));
  std::vector<QPoly> rhs;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      QPoly entry = QPoly::constant(Var::t, BigRational(-g.mult[i][j]));
      if (i == j) entry += var_power(Var::t, 1);
      m(i - 1, j - 1) = std::move(entry);
    }
    rhs.push_back(QPoly::constant(Var::t, BigRational(g.mult[i][0])));
  }
  TWeights w{g.type, {RationalFunction(one_poly(Var::t))}};
  for (auto& x : solve_linear(m, rhs)) w.values.push_back(std::move(x));
  return w;
}

/// Re-substitute the weights into the node equations.
inline bool satisfies_weight_equation(const DirectedGraph& g, const TWeights& w) {
  const RationalFunction t(var_power(Var::t, 1));
  if (w.values.size() != g.size() || !(w.values[0] == RationalFunction(one_poly(Var::t)))) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.out_degree(i) == 0) continue;
    RationalFunction rhs(Var::t);
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g.mult[i][j]) rhs += w.values[j].scaled(BigRational(g.mult[i][j]));
    if (!(t * w.values[i] == rhs)) return false;
  }
  return true;
}

/// Least common multiple of the reduced denominators (monic).
inline QPoly common_denominator(const TWeights& w) {
  QPoly l = one_poly(Var::t);
  for (const auto& v : w.values) l = exact_div(l * v.den(), gcd(l, v.den()));
  return l.monic();
}

/// Substitute t = q + 1/q into a t-rational function.
inline RationalFunction substitute_t(const RationalFunction& f) {
  auto [num, dn] = substitute_t(f.num());
  auto [den, dd] = substitute_t(f.den());
  if (f.is_zero()) return RationalFunction(Var::q);
  // f = (num / q^dn) / (den / q^dd)
  if (dd >= dn) return RationalFunction(num.shifted(static_cast<std::size_t>(dd - dn)), den);
  return RationalFunction(num, den.shifted(static_cast<std::size_t>(dn - dd)));
}

/// N_i(q) = (1 + q^h) * n_i(q + 1/q), required to be integral polynomials.
inline QNumerators to_q_numerators(const TWeights& w) {
  const int h = w.type.coxeter_number();
  const RationalFunction scale(one_poly(Var::q) + var_power(Var::q, static_cast<std::size_t>(h)));
  std::vector<QPoly> n;
  for (const auto& v : w.values) {
    const RationalFunction x = substitute_t(v) * scale;
    if (!x.is_polynomial() || !has_integer_coeffs(x.num()))
      throw NonPolynomialResult("weight does not clear to an integral polynomial: " + to_string(x));
    n.push_back(x.num());
  }
  return make_qnumerators(w.type, std::move(n));
}

/// Weights cleared by the common denominator L(t), substituted and scaled by
/// q^deg L, then divided by their common factor: coprime integral polynomials.
inline std::vector<QPoly> intermediate_q_weights(const TWeights& w) {
  const QPoly l = common_denominator(w);
  const int big = l.degree();
  std::vector<QPoly> out;
  for (const auto& v : w.values) {
    const QPoly p = (RationalFunction(l) * v).as_polynomial();
    auto [pq, d] = substitute_t(p);
    if (d > big) throw NonPolynomialResult("weight numerator exceeds the common denominator degree");
    out.push_back(pq.shifted(static_cast<std::size_t>(big - d)));
  }
  QPoly g(Var::q);
  for (const auto& p : out) g = gcd(g, p);
  BigInteger num = 0, den = 1;
  for (auto& p : out) {
    p = exact_div(p, g);
    const BigRational c = content(p);
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  BigRational unit(den, num);
  unit.canonicalize();
  if (!out.empty() && !out[0].is_zero() && sgn(out[0].leading()) < 0) unit = -unit;
  for (auto& p : out) p = p.scaled(unit);
  return out;
}

namespace detail {

// E-type numerators as exponent lists in canonical node order.
inline std::vector<std::vector<int>> e_exponents(int m) {
  if (m == 6)
    return {{0, 12}, {1, 5, 7, 11}, {2, 4, 6, 6, 8, 10}, {3, 5, 7, 9}, {4, 8}, {3, 5, 7, 9}, {4, 8}};
  if (m == 7)
    return {{0, 18},          {1, 7, 11, 17},           {2, 6, 8, 10, 12, 16}, {3, 5, 7, 9, 9, 11, 13, 15},
            {4, 6, 8, 10, 12, 14}, {5, 7, 11, 13},      {6, 12},               {4, 8, 10, 14}};
  return {{0, 30},
          {1, 11, 19, 29},
          {2, 10, 12, 18, 20, 28},
          {3, 9, 11, 13, 17, 19, 21, 27},
          {4, 8, 10, 12, 14, 16, 18, 20, 22, 26},
          {5, 7, 9, 11, 13, 15, 15, 17, 19, 21, 23, 25},
          {6, 8, 12, 14, 16, 18, 22, 24},
          {7, 13, 17, 23},
          {6, 10, 14, 16, 20, 24}};
}

}  // namespace detail

/// Expected numerators from the closed exponent formulas.
///   A_m: N_k = q^k + q^(h-k).
///   D_m: central node k: q^k + q^(k+2) + q^(h-k-2) + q^(h-k); far tips
///        q^(m-2) + q^m; near tip q^2 + q^(h-2).
///   E_6, E_7, E_8: tabulated.
inline QNumerators closed_form(const DynkinType& type) {
  const int h = type.coxeter_number();
  const int m = type.m();
  std::vector<std::vector<int>> ex;
  switch (type.family()) {
    case Family::A:
      for (int k = 0; k <= m; ++k) ex.push_back({k, h - k});
      break;
    case Family::D:
      ex.push_back({0, h});
      for (int k = 1; k <= m - 3; ++k) ex.push_back({k, k + 2, h - k - 2, h - k});
      ex.push_back({m - 2, m});
      ex.push_back({m - 2, m});
      ex.push_back({2, h - 2});
      break;
    case Family::E:
      ex = detail::e_exponents(m);
      break;
  }
  std::vector<QPoly> n;
  for (const auto& e : ex) n.push_back(poly_from_exponents(Var::q, e));
  return make_qnumerators(type, std::move(n));
}

/// q * [(q + 1/q) N_0 - sum_j mult_affine[0][j] N_j].
inline QPoly specialization_lhs(const QNumerators& nq) {
  const DirectedGraph g = build_graph(nq.type, GraphForm::affine);
  QPoly sum(Var::q);
  for (std::size_t j = 0; j < g.size(); ++j)
    if (g.mult[0][j]) sum += nq.N[j].scaled(BigRational(g.mult[0][j]));
  return make_poly(Var::q, {1, 0, 1}) * nq.N[0] - sum.shifted(1);
}

/// (1 - q^a)(1 - q^b).
inline QPoly standard_denominator(int a, int b) {
  const QPoly one = one_poly(Var::q);
  return (one - var_power(Var::q, static_cast<std::size_t>(a))) * (one - var_power(Var::q, static_cast<std::size_t>(b)));
}

inline bool specialization_identity(const QNumerators& nq) {
  return specialization_lhs(nq) == standard_denominator(nq.a, nq.b);
}

/// Modulo 1 + q^h the finite-type node equations hold (the affine node
/// weight vanishes there).
inline bool finite_reduction_check(const QNumerators& nq) {
  const DirectedGraph g = build_graph(nq.type, GraphForm::semiaffine);
  const QPoly modulus = one_poly(Var::q) + var_power(Var::q, static_cast<std::size_t>(nq.h));
  const QPoly q2p1 = make_poly(Var::q, {1, 0, 1});
  if (nq.N.size() != g.size()) return false;
  for (std::size_t i = 1; i < g.size(); ++i) {
    QPoly sum(Var::q);
    for (std::size_t j = 1; j < g.size(); ++j)
      if (g.mult[i][j]) sum += nq.N[j].scaled(BigRational(g.mult[i][j]));
    if (!((q2p1 * nq.N[i] - sum.shifted(1)) % modulus).is_zero()) return false;
  }
  return true;
}

/// Every N_i is a nonnegative integral palindrome of degree <= h with even value at 1.
inline bool palindrome_check(const QNumerators& nq) {
  for (const auto& p : nq.N) {
    if (!has_integer_coeffs(p) || !has_nonnegative_coeffs(p)) return false;
    if (p.degree() > nq.h || !p.is_palindromic(nq.h)) return false;
    if (!is_integer(p.evaluate(BigRational(1)) / 2)) return false;
  }
  return true;
}

/// N_i(1) / 2.
inline std::vector<BigRational> marks(const QNumerators& nq) {
  std::vector<BigRational> out;
  for (const auto& p : nq.N) out.push_back(p.evaluate(BigRational(1)) / 2);
  return out;
}

struct NotesReport {
  bool note1 = false;  // extreme exponents step by one along chains from the affine node
  bool note2 = false;  // parity pattern
  bool note3 = false;  // term count is half the neighbours' total
  std::string detail;
  bool all() const { return note1 && note2 && note3; }
};

inline NotesReport check_notes(const QNumerators& nq) {
  NotesReport r{true, true, true, {}};
  const DirectedGraph g = build_graph(nq.type, GraphForm::affine);
  const auto dist = undirected_distances(g, 0);
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag) r.detail += why + "; ";
    flag = false;
  };
  for (std::size_t i = 0; i < g.size(); ++i) {
    const QPoly& p = nq.N[i];
    if (p.valuation() != dist[i] || p.degree() != nq.h - dist[i])
      fail(r.note1, "node " + std::to_string(i) + " extreme exponents " + std::to_string(p.valuation()) + "," +
                        std::to_string(p.degree()) + " at distance " + std::to_string(dist[i]));
  }
  auto parity = [](const QPoly& p) {
    int par = -1;
    for (std::size_t e = 0; e < p.coeffs().size(); ++e) {
      if (sgn(p.coeffs()[e]) == 0) continue;
      const int pe = static_cast<int>(e % 2);
      if (par >= 0 && par != pe) return 2;
      par = pe;
    }
    return par;
  };
  if (nq.h % 2 == 0) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      const int pi = parity(nq.N[i]);
      if (pi == 2) fail(r.note2, "node " + std::to_string(i) + " mixes parities");
      for (std::size_t j = 0; j < g.size(); ++j)
        if (g.mult[i][j] && parity(nq.N[j]) == pi) fail(r.note2, "adjacent nodes share parity");
    }
  } else {
    for (const auto& p : nq.N)
      for (std::size_t e = 0; e < p.coeffs().size(); ++e) {
        if (sgn(p.coeffs()[e]) == 0) continue;
        const int partner = nq.h - static_cast<int>(e);
        if (partner < 0 || sgn(p.coeff(static_cast<std::size_t>(partner))) == 0 || (partner % 2) == static_cast<int>(e % 2))
          fail(r.note2, "exponent " + std::to_string(e) + " lacks an opposite-parity partner");
      }
  }
  const auto mk = marks(nq);
  for (std::size_t i = 0; i < g.size(); ++i) {
    BigRational sum = 0;
    for (std::size_t j = 0; j < g.size(); ++j) sum += g.mult[i][j] * (2 * mk[j]);
    if (sum != 4 * mk[i]) fail(r.note3, "term count at node " + std::to_string(i));
  }
  return r;
}

/// Exponent-sum notation: "(3+5+7+2\times 9+11+13+15)".
inline std::string to_latex_exponents(const QPoly& p) {
  std::string s = "(";
  bool first = true;
  for (std::size_t e = 0; e < p.coeffs().size(); ++e) {
    const BigRational& c = p.coeffs()[e];
    if (sgn(c) == 0) continue;
    if (!first) s += "+";
    if (c != 1) s += to_string(c) + "\\times ";
    s += std::to_string(e);
    first = false;
  }
  return s + ")";
}

}  // namespace ade
