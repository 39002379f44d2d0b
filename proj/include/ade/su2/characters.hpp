#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "ade/algebra/cyclotomic.hpp"
#include "ade/errors.hpp"
#include "ade/su2/group.hpp"

namespace ade {

/// Values on the conjugacy classes of a FiniteSubgroup, in class order.
using ClassFunction = std::vector<CycNumber>;

/// <f, g> = (1/|G|) sum_c |c| f(c) conj(g(c)).
inline CycNumber inner_product(const FiniteSubgroup& G, const ClassFunction& f, const ClassFunction& g) {
  CycNumber acc = CycNumber::zero(G.field);
  for (std::size_t c = 0; c < G.class_count(); ++c)
    acc += f[c] * g[c].conj() * BigRational(static_cast<long>(G.classes[c].size()));
  return acc * make_rational(1, static_cast<long>(G.order()));
}

inline ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g) {
  ClassFunction out;
  for (std::size_t c = 0; c < f.size(); ++c) out.push_back(f[c] * g[c]);
  return out;
}

/// Character of the defining 2-dimensional representation.
inline ClassFunction defining_character(const FiniteSubgroup& G) {
  ClassFunction out;
  for (const auto& c : G.classes) out.push_back(c.trace);
  return out;
}

/// Characters of Sym^0 V .. Sym^mmax V via s_{m+1} = tau s_m - s_{m-1}.
inline std::vector<ClassFunction> symmetric_power_characters(const FiniteSubgroup& G, int mmax) {
  std::vector<ClassFunction> out;
  ClassFunction prev, cur;
  for (const auto& c : G.classes) {
    prev.push_back(CycNumber::zero(G.field));
    cur.push_back(CycNumber::one(G.field));
  }
  for (int m = 0; m <= mmax; ++m) {
    out.push_back(cur);
    ClassFunction next;
    for (std::size_t c = 0; c < cur.size(); ++c) next.push_back(G.classes[c].trace * cur[c] - prev[c]);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

struct CharTable {
  std::vector<ClassFunction> rows;  // rows[0] is the trivial character
  std::vector<int> degrees;
  std::optional<std::size_t> defining_row;  // row equal to the class traces, when V is irreducible
};

struct TableCheck {
  bool ok = true;
  std::string failure;
};

/// Orthogonality relations, degree identities and the presence of the
/// defining character. Reports the first relation that fails.
inline TableCheck validate_table(const CharTable& table, const FiniteSubgroup& G) {
  const std::size_t k = G.class_count();
  auto fail = [](std::string why) { return TableCheck{false, std::move(why)}; };
  if (table.rows.size() != k) return fail("table has " + std::to_string(table.rows.size()) + " rows for " + std::to_string(k) + " classes");
  for (const auto& r : table.rows)
    if (r.size() != k) return fail("row length differs from class count");
  if (table.degrees.size() != k) return fail("degree vector length");
  const CycNumber one = CycNumber::one(G.field), zero = CycNumber::zero(G.field);
  for (std::size_t c = 0; c < k; ++c)
    if (!(table.rows[0][c] == one)) return fail("row 0 is not the trivial character");
  long degree_sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const CycNumber& at_identity = table.rows[i][0];
    if (!at_identity.is_rational() || at_identity.coeffs()[0] != table.degrees[i] || table.degrees[i] <= 0)
      return fail("character " + std::to_string(i) + " at the identity differs from its degree");
    degree_sum += static_cast<long>(table.degrees[i]) * table.degrees[i];
  }
  if (degree_sum != static_cast<long>(G.order())) return fail("sum of squared degrees is " + std::to_string(degree_sum));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const CycNumber ip = inner_product(G, table.rows[i], table.rows[j]);
      if (!(ip == (i == j ? one : zero)))
        return fail("row orthogonality fails for characters " + std::to_string(i) + "," + std::to_string(j));
    }
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = 0; d <= c; ++d) {
      CycNumber acc = zero;
      for (std::size_t i = 0; i < k; ++i) acc += table.rows[i][c] * table.rows[i][d].conj();
      const CycNumber expected =
          c == d ? CycNumber::rational(G.field, make_rational(static_cast<long>(G.order()), static_cast<long>(G.classes[c].size())))
                 : zero;
      if (!(acc == expected))
        return fail("column orthogonality fails for classes " + std::to_string(c) + "," + std::to_string(d));
    }
  // the class traces must be a genuine character of the table
  const ClassFunction v = defining_character(G);
  ClassFunction rebuilt(k, zero);
  for (std::size_t i = 0; i < k; ++i) {
    const CycNumber m = inner_product(G, v, table.rows[i]);
    if (!m.is_rational() || !is_integer(m.coeffs()[0]) || sgn(m.coeffs()[0]) < 0)
      return fail("defining character has a non-natural multiplicity on row " + std::to_string(i));
    for (std::size_t c = 0; c < k; ++c) rebuilt[c] = rebuilt[c] + m * table.rows[i][c];
  }
  if (!(rebuilt == v)) return fail("defining character is not spanned by the table");
  if (table.defining_row && (*table.defining_row >= k || !(table.rows[*table.defining_row] == v)))
    return fail("row marked as defining differs from the class traces");
  return {};
}

namespace detail {

/// Exponent s in [0, N) with zeta_N^s equal to x, or -1.
inline long root_exponent(const CycNumber& x) {
  const long n = x.conductor();
  for (long s = 0; s < n; ++s)
    if (CycNumber::zeta(x.field(), s) == x) return s;
  return -1;
}

inline CharTable finish_table(std::vector<ClassFunction> rows, const FiniteSubgroup& G) {
  CharTable t;
  const ClassFunction v = defining_character(G);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    t.degrees.push_back(static_cast<int>(cyc_to_rational(rows[i][0]).get_num().get_si()));
    if (rows[i] == v) t.defining_row = i;
  }
  t.rows = std::move(rows);
  const TableCheck check = validate_table(t, G);
  if (!check.ok) throw ValidationFailed(G.type.name() + " character table: " + check.failure);
  return t;
}

/// Cyclic group generated by diag(zeta_n, zeta_n^-1): chi_j(g^k) = zeta_n^(jk).
inline CharTable cyclic_table(const FiniteSubgroup& G) {
  const long n = G.type.m() + 1, step = G.field->conductor() / n;
  std::vector<long> k_of_class;
  for (const auto& c : G.classes) {
    const long s = root_exponent(G.elements[c.representative].a);
    if (s < 0 || s % step != 0) throw ValidationFailed("cyclic class representative is not a generator power");
    k_of_class.push_back(s / step);
  }
  std::vector<ClassFunction> rows;
  for (long j = 0; j < n; ++j) {
    ClassFunction row;
    for (long k : k_of_class) row.push_back(CycNumber::zeta(G.field, step * j * k));
    rows.push_back(std::move(row));
  }
  return finish_table(std::move(rows), G);
}

/// Binary dihedral group of order 4k generated by a = diag(zeta_2k, zeta_2k^-1)
/// and b = [[0, 1], [-1, 0]]. Four linear characters (alpha, beta) on (a, b)
/// with alpha = +-1 and beta^2 = alpha^k, then chi_l(a^j) = zeta_2k^(lj) +
/// zeta_2k^(-lj), chi_l(a^j b) = 0 for l = 1..k-1.
inline CharTable binary_dihedral_table(const FiniteSubgroup& G) {
  const long k = G.type.m() - 2, step = G.field->conductor() / (2 * k);
  const FieldPtr& f = G.field;
  struct ClassInfo {
    bool rotation;
    long j;
  };
  std::vector<ClassInfo> info;
  for (const auto& c : G.classes) {
    const UnitaryElement& x = G.elements[c.representative];
    const bool rot = x.b.is_zero();
    const long s = root_exponent(rot ? x.a : x.b);
    if (s < 0 || s % step != 0) throw ValidationFailed("binary dihedral class representative not recognized");
    info.push_back({rot, s / step});
  }
  const CycNumber one = CycNumber::one(f), minus_one = -one;
  const CycNumber eps = k % 2 == 0 ? one : CycNumber::zeta(f, f->conductor() / 4);
  auto power = [&](const CycNumber& base, long e) {
    CycNumber r = one;
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
  };
  std::vector<ClassFunction> rows;
  const std::vector<std::pair<CycNumber, CycNumber>> linear = {
      {one, one}, {one, minus_one}, {minus_one, eps}, {minus_one, -eps}};
  for (const auto& [alpha, beta] : linear) {
    ClassFunction row;
    for (const auto& c : info) row.push_back(c.rotation ? power(alpha, c.j) : power(alpha, c.j) * beta);
    rows.push_back(std::move(row));
  }
  for (long l = 1; l < k; ++l) {
    ClassFunction row;
    for (const auto& c : info)
      row.push_back(c.rotation ? CycNumber::zeta(f, step * l * c.j) + CycNumber::zeta(f, -step * l * c.j)
                               : CycNumber::zero(f));
    rows.push_back(std::move(row));
  }
  return finish_table(std::move(rows), G);
}

}  // namespace detail

/// All one-dimensional characters. A linear character is fixed by its values
/// zeta_N^e_g on the generators; an assignment is valid when it is
/// consistent along every edge of the Cayley graph.
inline std::vector<ClassFunction> linear_characters(const FiniteSubgroup& G) {
  const std::size_t ng = G.gens.size();
  const long n = G.field->conductor();
  // word vector of every element along the spanning tree
  std::vector<std::vector<long>> word(G.order(), std::vector<long>(ng, 0));
  for (std::size_t x = 1; x < G.order(); ++x) {
    word[x] = word[G.parent[x]];
    ++word[x][G.parent_gen[x]];
  }
  std::vector<std::vector<long>> relations;
  for (std::size_t x = 0; x < G.order(); ++x)
    for (std::size_t g = 0; g < ng; ++g) {
      std::vector<long> r = word[x];
      ++r[g];
      const auto& w = word[G.right_gen[x][g]];
      bool trivial = true;
      for (std::size_t i = 0; i < ng; ++i) {
        r[i] -= w[i];
        trivial = trivial && r[i] == 0;
      }
      if (!trivial) relations.push_back(std::move(r));
    }
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());

  std::vector<long> gen_order;
  for (std::size_t g = 0; g < ng; ++g) {
    long o = 1;
    std::size_t x = G.right_gen[0][g];
    while (x != 0) {
      x = G.right_gen[x][g];
      ++o;
    }
    gen_order.push_back(o);
  }

  std::vector<ClassFunction> out;
  std::vector<long> e(ng, 0);
  // e_g ranges over multiples of n / ord(g)
  std::vector<long> idx(ng, 0);
  while (true) {
    for (std::size_t g = 0; g < ng; ++g) e[g] = idx[g] * (n / gen_order[g]);
    bool ok = true;
    for (const auto& r : relations) {
      long s = 0;
      for (std::size_t g = 0; g < ng; ++g) s += r[g] * e[g];
      if (((s % n) + n) % n != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ClassFunction row;
      for (const auto& c : G.classes) {
        long s = 0;
        for (std::size_t g = 0; g < ng; ++g) s += word[c.representative][g] * e[g];
        row.push_back(CycNumber::zeta(G.field, s));
      }
      out.push_back(std::move(row));
    }
    std::size_t g = 0;
    while (g < ng && ++idx[g] == gen_order[g]) idx[g++] = 0;
    if (g == ng) break;
  }
  return out;
}

/// Irreducible characters by peeling: start from the linear characters,
/// take symmetric powers of V and products of known irreducibles, subtract
/// the known constituents, and accept any remainder of norm 1.
inline CharTable computed_char_table(const FiniteSubgroup& G) {
  const std::size_t k = G.class_count();
  const ClassFunction v = defining_character(G);
  std::vector<ClassFunction> found;
  std::vector<ClassFunction> linear = linear_characters(G);
  std::deque<ClassFunction> queue;
  std::vector<ClassFunction> pending;

  auto peel = [&](const ClassFunction& psi) {
    ClassFunction rho = psi;
    for (const auto& chi : found) {
      const CycNumber m = inner_product(G, psi, chi);
      if (m.is_zero()) continue;
      for (std::size_t c = 0; c < k; ++c) rho[c] = rho[c] - m * chi[c];
    }
    return rho;
  };
  auto add = [&](ClassFunction chi) {
    for (const auto& lam : linear) queue.push_back(pointwise_product(chi, lam));
    queue.push_back(pointwise_product(chi, v));
    found.push_back(std::move(chi));
  };

  // the linear characters are irreducible and distinct
  for (auto& lam : linear) found.push_back(lam);
  for (const auto& lam : linear) queue.push_back(pointwise_product(lam, v));
  for (const auto& s : symmetric_power_characters(G, 2 * G.type.coxeter_number())) queue.push_back(s);

  bool retried_products = false;
  while (found.size() < k) {
    if (queue.empty()) {
      const std::size_t before = found.size();
      std::vector<ClassFunction> again;
      again.swap(pending);
      for (auto& p : again) queue.push_back(std::move(p));
      while (!queue.empty() && found.size() < k) {
        ClassFunction rho = peel(queue.front());
        queue.pop_front();
        const CycNumber norm = inner_product(G, rho, rho);
        if (norm == CycNumber::one(G.field)) add(std::move(rho));
        else if (!norm.is_zero()) pending.push_back(std::move(rho));
      }
      if (found.size() == before) {
        if (retried_products) throw ValidationFailed("character peeling stalled for " + G.type.name());
        retried_products = true;
        for (std::size_t i = 0; i < found.size(); ++i)
          for (std::size_t j = i; j < found.size(); ++j) queue.push_back(pointwise_product(found[i], found[j]));
      }
      continue;
    }
    ClassFunction rho = peel(queue.front());
    queue.pop_front();
    const CycNumber norm = inner_product(G, rho, rho);
    if (norm == CycNumber::one(G.field)) add(std::move(rho));
    else if (!norm.is_zero()) pending.push_back(std::move(rho));
  }
  // trivial first, then by degree, discovery order within a degree
  std::stable_sort(found.begin() + 1, found.end(), [](const ClassFunction& a, const ClassFunction& b) {
    return a[0].coeffs()[0] < b[0].coeffs()[0];
  });
  return detail::finish_table(std::move(found), G);
}

/// Character table of the group attached to the Dynkin type. Closed formulas
/// for the cyclic and binary dihedral families, peeling for the E types; every
/// table is validated before it is returned.
inline CharTable char_table(const FiniteSubgroup& G) {
  switch (G.type.family()) {
    case Family::A: return detail::cyclic_table(G);
    case Family::D: return detail::binary_dihedral_table(G);
    case Family::E: return computed_char_table(G);
  }
  throw InvalidParameter("unknown family");
}

}  // namespace ade
