#pragma once

#include <set>
#include <string>
#include <vector>

#include "ade/algebra/cyclotomic.hpp"
#include "ade/algebra/polynomial.hpp"
#include "ade/algebra/rational_function.hpp"
#include "ade/graphs.hpp"
#include "ade/su2/characters.hpp"
#include "ade/su2/group.hpp"
#include "ade/su2/molien.hpp"
#include "ade/weights.hpp"
#include "json.hpp"

// JSON encodings shared by every module:
//   rational    "p/q" (or "p")
//   polynomial  {"var": "q"|"t", "coeffs": [rational strings, index = exponent]}
//   cyclotomic  {"N": int, "coeffs": [rational strings]}
namespace ade::io {

using Json = nlohmann::ordered_json;

inline Json encode(const BigRational& r) { return to_string(r); }

inline BigRational decode_rational(const Json& j) {
  if (!j.is_string()) throw InvalidParameter("rational must be a JSON string");
  return parse_rational(j.get<std::string>());
}

inline Json coeff_array(const QPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

inline Json encode(const QPoly& p) {
  return Json{{"var", std::string(1, var_name(p.var()))}, {"coeffs", coeff_array(p)}};
}

inline Var decode_var(const Json& j) {
  const std::string v = j.get<std::string>();
  if (v == "q") return Var::q;
  if (v == "t") return Var::t;
  throw InvalidParameter("unknown polynomial variable '" + v + "'");
}

inline QPoly decode_coeff_array(Var var, const Json& a) {
  if (!a.is_array()) throw InvalidParameter("coefficients must be an array");
  std::vector<BigRational> c;
  for (const auto& x : a) c.push_back(decode_rational(x));
  QPoly p(var, c);
  if (p.coeffs().size() != c.size()) throw InvalidParameter("polynomial has a zero leading coefficient");
  return p;
}

inline QPoly decode_polynomial(const Json& j) { return decode_coeff_array(decode_var(j.at("var")), j.at("coeffs")); }

inline Json encode(const CycNumber& x) {
  Json a = Json::array();
  for (const auto& c : x.coeffs()) a.push_back(to_string(c));
  return Json{{"N", x.conductor()}, {"coeffs", a}};
}

inline CycNumber decode_cyclotomic(const Json& j, const FieldPtr& field) {
  if (j.at("N").get<long>() != field->conductor()) throw ConductorMismatch("encoded conductor differs from field");
  std::vector<BigRational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(decode_rational(x));
  if (c.size() != field->dimension()) throw InvalidParameter("cyclotomic coefficient count differs from phi(N)");
  return CycNumber(field, std::move(c));
}

inline CycNumber decode_cyclotomic(const Json& j) { return decode_cyclotomic(j, CyclotomicField::make(j.at("N").get<long>())); }

inline Json encode(const RationalFunction& f) { return Json{{"num", encode(f.num())}, {"den", encode(f.den())}}; }

inline RationalFunction decode_rational_function(const Json& j) {
  return RationalFunction(decode_polynomial(j.at("num")), decode_polynomial(j.at("den")));
}

inline Json encode(const DirectedGraph& g) {
  Json edges = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g.mult[i][j]) edges.push_back(Json{{"from", i}, {"to", j}, {"mult", g.mult[i][j]}});
  return Json{{"type", g.type.name()},
              {"form", to_string(g.form)},
              {"nodes", g.labels},
              {"affine_index", g.affine_index ? Json(*g.affine_index) : Json(nullptr)},
              {"edges", edges}};
}

inline DirectedGraph decode_graph(const Json& j) {
  DirectedGraph g{DynkinType::parse(j.at("type").get<std::string>()), parse_graph_form(j.at("form").get<std::string>()),
                  {}, std::nullopt, j.at("nodes").get<std::vector<std::string>>()};
  const std::size_t n = g.labels.size();
  g.mult.assign(n, std::vector<int>(n, 0));
  if (!j.at("affine_index").is_null()) g.affine_index = j.at("affine_index").get<std::size_t>();
  for (const auto& e : j.at("edges")) g.mult.at(e.at("from").get<std::size_t>()).at(e.at("to").get<std::size_t>()) = e.at("mult").get<int>();
  return g;
}

inline Json encode(const TWeights& w) {
  Json v = Json::array();
  for (const auto& x : w.values) v.push_back(encode(x));
  return Json{{"type", w.type.name()}, {"basis", "t"}, {"weights", v}};
}

inline TWeights decode_tweights(const Json& j) {
  TWeights w{DynkinType::parse(j.at("type").get<std::string>()), {}};
  for (const auto& x : j.at("weights")) w.values.push_back(decode_rational_function(x));
  return w;
}

inline Json encode(const QNumerators& nq) {
  Json n = Json::array();
  for (const auto& p : nq.N) n.push_back(coeff_array(p));
  return Json{{"type", nq.type.name()}, {"h", nq.h}, {"a", nq.a}, {"b", nq.b}, {"N", n}};
}

inline QNumerators decode_qnumerators(const Json& j) {
  QNumerators nq{DynkinType::parse(j.at("type").get<std::string>()), j.at("h").get<int>(), j.at("a").get<int>(),
                 j.at("b").get<int>(), {}};
  for (const auto& a : j.at("N")) nq.N.push_back(decode_coeff_array(Var::q, a));
  return nq;
}

/// Minimal polynomial over Q of a cyclotomic number (product over its
/// distinct Galois conjugates).
inline QPoly minimal_polynomial(const CycNumber& x, Var var = Var::t) {
  const long n = x.conductor();
  std::vector<CycNumber> conjugates;
  for (long k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    CycNumber y = x.galois(k);
    if (std::find(conjugates.begin(), conjugates.end(), y) == conjugates.end()) conjugates.push_back(std::move(y));
  }
  const CycNumber one = CycNumber::one(x.field());
  CycPoly p = CycPoly::constant(var, one);
  for (const auto& y : conjugates) p *= CycPoly(var, {-y, one});
  return collapse_to_rational(p);
}

inline Json encode_classes(const FiniteSubgroup& G) {
  Json a = Json::array();
  for (const auto& c : G.classes)
    a.push_back(Json{{"order", c.order},
                     {"size", c.size()},
                     {"trace", encode(c.trace)},
                     {"trace_min_poly", encode(minimal_polynomial(c.trace))}});
  return a;
}

inline Json encode_group(const FiniteSubgroup& G) {
  return Json{{"type", G.type.name()}, {"order", G.order()}, {"conductor", G.field->conductor()}, {"classes", encode_classes(G)}};
}

inline Json encode(const CharTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(encode(x));
    rows.push_back(row);
  }
  return Json{{"degrees", t.degrees}, {"rows", rows}};
}

/// MolienSet in affine node order (via the McKay bijection).
inline Json encode(const MolienSet& ms, const McKayResult& mk, std::size_t series_terms = 0) {
  Json series = Json::array(), n = Json::array(), rows = Json::array(), coeffs = Json::array();
  for (std::size_t node = 0; node < mk.row_of_node.size(); ++node) {
    const std::size_t r = mk.row_of_node[node];
    series.push_back(encode(ms.m[r]));
    n.push_back(coeff_array(ms.N[r]));
    rows.push_back(r);
    if (series_terms) {
      Json c = Json::array();
      for (const auto& x : power_series(ms.m[r], series_terms)) c.push_back(to_string(x));
      coeffs.push_back(c);
    }
  }
  Json j{{"type", ms.type.name()}, {"h", ms.h}, {"a", ms.a}, {"b", ms.b}, {"character_of_node", rows}, {"series", series}, {"N", n}};
  if (series_terms) j["series_terms"] = coeffs;
  return j;
}

inline Json encode(const CharpolyReport& r) {
  return Json{{"type", r.type.name()},       {"semiaffine", encode(r.semiaffine)},
              {"finite", encode(r.finite)},  {"d", r.d},
              {"cofactor", encode(r.cofactor)}, {"cox", encode(r.cox)},
              {"structural_identity", r.structural_identity}, {"claim_holds", r.claim_holds}};
}

}  // namespace ade::io
