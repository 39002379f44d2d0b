#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "ade/algebra/cyclotomic.hpp"
#include "ade/algebra/polynomial.hpp"
#include "ade/algebra/rational_function.hpp"
#include "ade/graphs.hpp"
#include "ade/su2/characters.hpp"
#include "ade/su2/group.hpp"
#include "ade/weights.hpp"

namespace ade {

struct McKayResult {
  std::vector<std::vector<int>> matrix;   // indexed by character rows
  std::vector<std::size_t> node_of_row;   // character row -> affine node
  std::vector<std::size_t> row_of_node;   // affine node -> character row
};

namespace detail {

inline std::vector<int> bfs_layers(const std::vector<std::vector<int>>& adj, std::size_t source) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < adj.size(); ++v)
      if (adj[u][v] && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

/// Isomorphism from graph `a` onto graph `b` fixing vertex 0, matched by
/// breadth-first layer and weighted degree with backtracking.
inline std::optional<std::vector<std::size_t>> match_graphs(const std::vector<std::vector<int>>& a,
                                                           const std::vector<std::vector<int>>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  const auto la = bfs_layers(a, 0), lb = bfs_layers(b, 0);
  auto degree = [](const std::vector<std::vector<int>>& m, std::size_t i) {
    int d = 0;
    for (int x : m[i]) d += x;
    return d;
  };
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return la[x] < la[y]; });

  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t pos) {
    if (pos == n) return true;
    const std::size_t u = order[pos];
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || lb[v] != la[u] || degree(b, v) != degree(a, u) || a[u][u] != b[v][v]) continue;
      if ((u == 0) != (v == 0)) continue;
      bool ok = true;
      for (std::size_t p = 0; p < pos && ok; ++p) {
        const std::size_t w = order[p];
        ok = a[u][w] == b[v][map[w]] && a[w][u] == b[map[w]][v];
      }
      if (!ok) continue;
      map[u] = v;
      used[v] = true;
      if (assign(pos + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return map;
}

}  // namespace detail

/// A_ij = multiplicity of chi_j in V (x) chi_i, matched onto the affine graph
/// of the group's Dynkin type with the trivial character on the affine node.
inline McKayResult mckay_matrix(const FiniteSubgroup& G, const CharTable& table) {
  const std::size_t k = table.rows.size();
  const ClassFunction v = defining_character(G);
  McKayResult r;
  r.matrix.assign(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    const ClassFunction vi = pointwise_product(v, table.rows[i]);
    for (std::size_t j = 0; j < k; ++j) {
      const BigRational x = cyc_to_rational(inner_product(G, vi, table.rows[j]));
      if (!is_integer(x) || sgn(x) < 0) throw ValidationFailed("McKay entry is not a nonnegative integer");
      r.matrix[i][j] = static_cast<int>(x.get_num().get_si());
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (r.matrix[i][j] != r.matrix[j][i]) throw ValidationFailed("McKay matrix is not symmetric");
  const DirectedGraph affine = build_graph(G.type, GraphForm::affine);
  auto map = detail::match_graphs(r.matrix, affine.mult);
  if (!map) throw NoIsomorphism("McKay graph of " + G.type.name() + " does not match the affine diagram");
  r.node_of_row = *map;
  r.row_of_node.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) r.row_of_node[r.node_of_row[i]] = i;
  return r;
}

/// Generalized Molien series per character row together with its standard
/// form numerator N_i = m_i (1 - q^a)(1 - q^b).
struct MolienSet {
  DynkinType type;
  int h = 0, a = 0, b = 0;
  std::vector<RationalFunction> m;
  std::vector<QPoly> N;
};

/// m_i = (1/|G|) sum_c |c| chi_i(c) / (1 - tau_c q + q^2), summed over
/// Q(zeta_N) with the common denominator prod over distinct traces, then
/// collapsed to Q.
inline MolienSet molien_series(const FiniteSubgroup& G, const CharTable& table) {
  const FieldPtr& f = G.field;
  const CycNumber one = CycNumber::one(f);
  auto local_den = [&](const CycNumber& tau) { return CycPoly(Var::q, {one, -tau, one}); };
  std::vector<CycNumber> distinct;
  for (const auto& c : G.classes)
    if (std::find(distinct.begin(), distinct.end(), c.trace) == distinct.end()) distinct.push_back(c.trace);
  CycPoly common = CycPoly::constant(Var::q, one);
  for (const auto& tau : distinct) common *= local_den(tau);
  std::vector<CycPoly> cofactor;
  for (const auto& c : G.classes) cofactor.push_back(exact_div(common, local_den(c.trace)));

  const QPoly den = collapse_to_rational(common);
  const auto [a, b] = G.type.degrees();
  const QPoly standard = standard_denominator(a, b);
  MolienSet out{G.type, G.type.coxeter_number(), a, b, {}, {}};
  const BigRational inv_order = make_rational(1, static_cast<long>(G.order()));
  for (const auto& row : table.rows) {
    CycPoly num(Var::q);
    for (std::size_t c = 0; c < G.class_count(); ++c)
      num += cofactor[c].scaled(row[c] * BigRational(static_cast<long>(G.classes[c].size())));
    const RationalFunction m(collapse_to_rational(num).scaled(inv_order), den);
    const RationalFunction n = m * RationalFunction(standard);
    if (!n.is_polynomial()) throw NonPolynomialResult("Molien numerator is not a polynomial: " + to_string(n));
    if (!has_integer_coeffs(n.num()) || !has_nonnegative_coeffs(n.num()))
      throw NonPolynomialResult("Molien numerator has non-natural coefficients: " + to_string(n.num()));
    out.m.push_back(m);
    out.N.push_back(n.num());
  }
  return out;
}

/// Reorder a per-character MolienSet into affine node order.
inline QNumerators molien_numerators_by_node(const MolienSet& ms, const McKayResult& mk) {
  std::vector<QPoly> n;
  for (std::size_t node = 0; node < mk.row_of_node.size(); ++node) n.push_back(ms.N[mk.row_of_node[node]]);
  return make_qnumerators(ms.type, std::move(n));
}

/// First `terms` Taylor coefficients at q = 0.
inline std::vector<BigRational> power_series(const RationalFunction& f, std::size_t terms) {
  const auto& den = f.den().coeffs();
  if (den.empty() || sgn(den[0]) == 0) throw Error("power series of a function with a pole at 0");
  const BigRational inv = BigRational(1) / den[0];
  std::vector<BigRational> out;
  for (std::size_t n = 0; n < terms; ++n) {
    BigRational c = f.num().coeff(n);
    for (std::size_t j = 1; j < den.size() && j <= n; ++j) c -= den[j] * out[n - j];
    out.push_back(c * inv);
  }
  return out;
}

/// Entry [m][i] = <Sym^m V, chi_i>, from eigenvalue power sums
/// sum_{j=0..m} lambda^(m-2j) on each class.
inline std::vector<std::vector<BigRational>> sym_power_multiplicities(const FiniteSubgroup& G, const CharTable& table,
                                                                      int mmax) {
  if (mmax < 0) throw InvalidParameter("mmax must be nonnegative");
  std::vector<std::vector<BigRational>> out;
  for (int m = 0; m <= mmax; ++m) {
    ClassFunction sym;
    for (const auto& c : G.classes) {
      CycNumber s = CycNumber::zero(G.field);
      for (int j = 0; j <= m; ++j) s += CycNumber::zeta(G.field, c.eigen_exponent * (m - 2 * j));
      sym.push_back(std::move(s));
    }
    std::vector<BigRational> row;
    for (const auto& chi : table.rows) row.push_back(cyc_to_rational(inner_product(G, sym, chi)));
    out.push_back(std::move(row));
  }
  return out;
}

/// (q + 1/q) m_i = sum_j A_ij m_j at every non-affine node, and
/// (q + 1/q) m_0 = sum_j A_0j m_j + 1/q at the affine node, with A the
/// affine multiplicity matrix carried to character rows by the bijection.
inline bool recurrence_check(const MolienSet& ms, const McKayResult& mk, const DirectedGraph& affine) {
  const QPoly q2p1 = make_poly(Var::q, {1, 0, 1});
  const RationalFunction qq(var_power(Var::q, 1));
  for (std::size_t u = 0; u < affine.size(); ++u) {
    RationalFunction sum(Var::q);
    for (std::size_t v = 0; v < affine.size(); ++v)
      if (affine.mult[u][v]) sum += ms.m[mk.row_of_node[v]].scaled(BigRational(affine.mult[u][v]));
    // multiplied through by q
    const RationalFunction lhs = RationalFunction(q2p1) * ms.m[mk.row_of_node[u]];
    const RationalFunction rhs = qq * sum + (u == 0 ? RationalFunction(one_poly(Var::q)) : RationalFunction(Var::q));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace ade
