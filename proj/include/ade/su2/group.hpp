#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "ade/algebra/cyclotomic.hpp"
#include "ade/errors.hpp"
#include "ade/graphs.hpp"

namespace ade {

/// 2x2 matrix [[a, b], [c, d]] over Q(zeta_N).
struct UnitaryElement {
  CycNumber a, b, c, d;

  static UnitaryElement identity(const FieldPtr& f) {
    return {CycNumber::one(f), CycNumber::zero(f), CycNumber::zero(f), CycNumber::one(f)};
  }

  const FieldPtr& field() const { return a.field(); }

  friend UnitaryElement operator*(const UnitaryElement& x, const UnitaryElement& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  friend bool operator==(const UnitaryElement&, const UnitaryElement&) = default;

  /// Conjugate transpose; the inverse for unitary elements.
  UnitaryElement adjoint() const { return {a.conj(), c.conj(), b.conj(), d.conj()}; }

  CycNumber det() const { return a * d - b * c; }
  CycNumber trace() const { return a + d; }

  bool is_special_unitary() const {
    return det() == CycNumber::one(field()) && adjoint() * *this == identity(field());
  }

  /// Canonical text key used for element lookup.
  std::string key() const {
    std::string k;
    for (const CycNumber* x : {&a, &b, &c, &d}) {
      for (const auto& q : x->coeffs()) {
        k += q.get_str(16);
        k += ',';
      }
      k += ';';
    }
    return k;
  }
};

/// Smallest N such that Q(zeta_N) holds every matrix entry, eigenvalue and
/// character value of the group attached to `type` (its exponent).
inline long group_conductor(const DynkinType& type) {
  switch (type.family()) {
    case Family::A: return type.m() + 1;
    case Family::D: return std::lcm(4L, 2L * (type.m() - 2));
    case Family::E: return type.m() == 6 ? 12 : type.m() == 7 ? 24 : 60;
  }
  return 0;
}

/// Quaternion w + x i + y j + z k as [[w + x i, y + z i], [-y + z i, w - x i]].
inline UnitaryElement quaternion(const FieldPtr& f, const CycNumber& w, const CycNumber& x, const CycNumber& y,
                                 const CycNumber& z) {
  if (f->conductor() % 4 != 0) throw InvalidParameter("quaternion embedding needs i in the field");
  const CycNumber i = CycNumber::zeta(f, f->conductor() / 4);
  return {w + x * i, y + z * i, -y + z * i, w - x * i};
}

namespace detail {

inline UnitaryElement rotation(const FieldPtr& f, long order) {
  const long step = f->conductor() / order;
  return {CycNumber::zeta(f, step), CycNumber::zero(f), CycNumber::zero(f), CycNumber::zeta(f, -step)};
}

inline UnitaryElement quaternion_q(const FieldPtr& f, const BigRational& w, const BigRational& x, const BigRational& y,
                                   const BigRational& z) {
  return quaternion(f, CycNumber::rational(f, w), CycNumber::rational(f, x), CycNumber::rational(f, y),
                    CycNumber::rational(f, z));
}

}  // namespace detail

/// Generators of the finite subgroup of SU(2) attached to `type`, over the
/// field `f` (whose conductor must be a multiple of group_conductor(type)).
inline std::vector<UnitaryElement> generators(const DynkinType& type, const FieldPtr& f) {
  if (f->conductor() % group_conductor(type) != 0) throw ConductorMismatch("field too small for " + type.name());
  const BigRational half = make_rational(1, 2), zero = 0, one = 1;
  switch (type.family()) {
    case Family::A:
      return {detail::rotation(f, type.m() + 1)};
    case Family::D:
      return {detail::rotation(f, 2L * (type.m() - 2)), detail::quaternion_q(f, zero, zero, one, zero)};
    case Family::E: {
      std::vector<UnitaryElement> g{detail::quaternion_q(f, zero, one, zero, zero),
                                    detail::quaternion_q(f, zero, zero, one, zero),
                                    detail::quaternion_q(f, -half, half, half, half)};
      if (type.m() == 7) {
        g.push_back(detail::rotation(f, 8));  // (1 + i) / sqrt 2
      } else if (type.m() == 8) {
        // (phi + phi^-1 i + j) / 2 with phi = 1 + zeta_5 + zeta_5^-1
        const long s = f->conductor() / 5;
        const CycNumber inv_phi = CycNumber::zeta(f, s) + CycNumber::zeta(f, -s);
        const CycNumber phi = inv_phi + CycNumber::one(f);
        g.push_back(quaternion(f, phi * half, inv_phi * half, CycNumber::rational(f, half), CycNumber::zero(f)));
      }
      return g;
    }
  }
  return {};
}

inline std::vector<UnitaryElement> generators(const DynkinType& type) {
  return generators(type, CyclotomicField::make(group_conductor(type)));
}

struct ConjClass {
  std::size_t representative = 0;
  std::vector<std::size_t> members;
  CycNumber trace;
  long eigen_exponent = 0;  // eigenvalues zeta_N^(+-eigen_exponent)
  long order = 1;
  std::size_t size() const { return members.size(); }
};

struct FiniteSubgroup {
  DynkinType type;
  FieldPtr field;
  std::vector<UnitaryElement> gens;
  std::vector<UnitaryElement> elements;  // elements[0] is the identity
  std::vector<std::size_t> inverse;
  std::vector<std::vector<std::size_t>> right_gen;  // index of elements[x] * gens[g]
  std::vector<std::size_t> parent, parent_gen;      // breadth-first spanning tree over right_gen
  std::vector<ConjClass> classes;                   // classes[0] is {identity}
  std::vector<std::size_t> class_of;

  std::size_t order() const { return elements.size(); }
  std::size_t class_count() const { return classes.size(); }
};

namespace detail {

class ElementIndex {
 public:
  std::size_t find(const UnitaryElement& x) const {
    auto it = map_.find(x.key());
    if (it == map_.end()) throw ValidationFailed("product left the enumerated set");
    return it->second;
  }
  std::pair<std::size_t, bool> insert(const UnitaryElement& x, std::size_t next) {
    auto [it, added] = map_.emplace(x.key(), next);
    return {it->second, added};
  }

 private:
  std::unordered_map<std::string, std::size_t> map_;
};

}  // namespace detail

/// Breadth-first closure of the generators, then conjugacy classes as orbits
/// under conjugation by the generators.
inline FiniteSubgroup enumerate(const DynkinType& type, const std::vector<UnitaryElement>& gens) {
  if (gens.empty()) throw InvalidParameter("no generators");
  const FieldPtr field = gens.front().field();
  for (const auto& g : gens) {
    if (g.field()->conductor() != field->conductor()) throw ConductorMismatch("generators over different fields");
    if (!g.is_special_unitary()) throw InvalidParameter("generator is not in SU(2)");
  }
  const std::size_t expected = static_cast<std::size_t>(type.group_order());

  FiniteSubgroup G{type, field, gens, {UnitaryElement::identity(field)}, {}, {}, {0}, {0}, {}, {}};
  detail::ElementIndex index;
  index.insert(G.elements[0], 0);
  for (std::size_t x = 0; x < G.elements.size(); ++x) {
    G.right_gen.emplace_back();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      UnitaryElement y = G.elements[x] * gens[g];
      auto [id, added] = index.insert(y, G.elements.size());
      if (added) {
        G.elements.push_back(std::move(y));
        G.parent.push_back(x);
        G.parent_gen.push_back(g);
        if (G.elements.size() > 2 * expected)
          throw ClosureOverflow("closure of " + type.name() + " generators exceeds " + std::to_string(2 * expected));
      }
      G.right_gen[x].push_back(id);
    }
  }
  if (G.elements.size() != expected)
    throw ValidationFailed("closure of " + type.name() + " has " + std::to_string(G.elements.size()) +
                           " elements, expected " + std::to_string(expected));

  for (const auto& x : G.elements) G.inverse.push_back(index.find(x.adjoint()));

  std::vector<UnitaryElement> gen_inv;
  for (const auto& g : gens) gen_inv.push_back(g.adjoint());
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  G.class_of.assign(G.order(), unassigned);
  const long n = field->conductor();
  for (std::size_t x = 0; x < G.order(); ++x) {
    if (G.class_of[x] != unassigned) continue;
    const std::size_t cls = G.classes.size();
    ConjClass c{x, {x}, G.elements[x].trace(), 0, 1};
    G.class_of[x] = cls;
    for (std::size_t k = 0; k < c.members.size(); ++k) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::size_t y = index.find(gens[g] * G.elements[c.members[k]] * gen_inv[g]);
        if (G.class_of[y] != unassigned) continue;
        G.class_of[y] = cls;
        c.members.push_back(y);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    bool found = false;
    for (long s = 0; s < n && !found; ++s) {
      if (CycNumber::zeta(field, s) + CycNumber::zeta(field, -s) == c.trace) {
        c.eigen_exponent = s;
        c.order = n / std::gcd(n, s);
        found = true;
      }
    }
    if (!found) throw ValidationFailed("class trace is not a sum of inverse roots of unity");
    G.classes.push_back(std::move(c));
  }
  return G;
}

inline FiniteSubgroup enumerate(const DynkinType& type) { return enumerate(type, generators(type)); }

}  // namespace ade
