#pragma once

#include <compare>
#include <cstddef>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ade/algebra/cyclotomic.hpp"
#include "ade/algebra/fold.hpp"
#include "ade/algebra/matrix.hpp"
#include "ade/algebra/polynomial.hpp"
#include "ade/errors.hpp"

namespace ade {

enum class Family { A, D, E };

/// A simply-laced Dynkin type: A_m (m >= 1), D_m (m >= 4), E_6, E_7, E_8.
class DynkinType {
 public:
  DynkinType(Family family, int m) : family_(family), m_(m) {
    const bool ok = (family == Family::A && m >= 1) || (family == Family::D && m >= 4) ||
                    (family == Family::E && m >= 6 && m <= 8);
    if (!ok) throw InvalidParameter("invalid Dynkin type " + name());
  }

  static DynkinType parse(std::string_view text) {
    if (text.size() < 2) throw InvalidParameter("malformed Dynkin type '" + std::string(text) + "'");
    Family f;
    switch (text[0]) {
      case 'A': case 'a': f = Family::A; break;
      case 'D': case 'd': f = Family::D; break;
      case 'E': case 'e': f = Family::E; break;
      default: throw InvalidParameter("unknown Dynkin family in '" + std::string(text) + "'");
    }
    int m = 0;
    for (char c : text.substr(1)) {
      if (c < '0' || c > '9' || m > 100000) throw InvalidParameter("malformed Dynkin type '" + std::string(text) + "'");
      m = m * 10 + (c - '0');
    }
    return DynkinType(f, m);
  }

  Family family() const { return family_; }
  int m() const { return m_; }
  int rank() const { return m_; }
  std::size_t node_count(bool with_affine = true) const { return static_cast<std::size_t>(m_ + (with_affine ? 1 : 0)); }

  std::string name() const {
    const char c = family_ == Family::A ? 'A' : family_ == Family::D ? 'D' : 'E';
    return c + std::to_string(m_);
  }

  int coxeter_number() const {
    switch (family_) {
      case Family::A: return m_ + 1;
      case Family::D: return 2 * m_ - 2;
      case Family::E: return m_ == 6 ? 12 : m_ == 7 ? 18 : 30;
    }
    return 0;
  }

  int group_order() const {
    switch (family_) {
      case Family::A: return m_ + 1;
      case Family::D: return 4 * (m_ - 2);
      case Family::E: return m_ == 6 ? 24 : m_ == 7 ? 48 : 120;
    }
    return 0;
  }

  /// Degrees (a, b) of the standard Molien denominator (1-q^a)(1-q^b).
  std::pair<int, int> degrees() const {
    const int h = coxeter_number();
    switch (family_) {
      case Family::A: return {2, h};
      case Family::D: return {4, h - 2};
      case Family::E: return m_ == 6 ? std::pair{6, 8} : m_ == 7 ? std::pair{8, 12} : std::pair{12, 20};
    }
    return {0, 0};
  }

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;

 private:
  Family family_;
  int m_;
};

/// Parse "D4", "A1..A12" or comma-separated mixtures of both. Ranges are
/// inclusive and must stay inside one family. Every member is validated
/// before anything is returned.
inline std::vector<DynkinType> parse_type_list(std::string_view text) {
  std::vector<DynkinType> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw InvalidParameter("empty entry in type list '" + std::string(text) + "'");
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      const DynkinType lo = DynkinType::parse(item.substr(0, dots));
      const DynkinType hi = DynkinType::parse(item.substr(dots + 2));
      if (lo.family() != hi.family() || lo.m() > hi.m())
        throw InvalidParameter("invalid type range '" + std::string(item) + "'");
      for (int m = lo.m(); m <= hi.m(); ++m) {
        if (lo.family() == Family::E && (m < 6 || m > 8)) continue;
        out.emplace_back(lo.family(), m);
      }
    } else {
      out.push_back(DynkinType::parse(item));
    }
    pos = comma + 1;
  }
  return out;
}

/// A1..A12, D4..D12, E6, E7, E8.
inline std::vector<DynkinType> default_suite() { return parse_type_list("A1..A12,D4..D12,E6..E8"); }

enum class GraphForm { finite, affine, semiaffine };

inline std::string to_string(GraphForm f) {
  switch (f) {
    case GraphForm::finite: return "finite";
    case GraphForm::affine: return "affine";
    case GraphForm::semiaffine: return "semiaffine";
  }
  return "";
}

inline GraphForm parse_graph_form(std::string_view s) {
  if (s == "finite") return GraphForm::finite;
  if (s == "affine") return GraphForm::affine;
  if (s == "semiaffine" || s == "semi-affine") return GraphForm::semiaffine;
  throw InvalidParameter("unknown graph form '" + std::string(s) + "'");
}

/// Directed multigraph. mult[i][j] counts the directed edges i -> j; an
/// undirected edge is the pair i -> j, j -> i.
struct DirectedGraph {
  DynkinType type;
  GraphForm form;
  std::vector<std::vector<int>> mult;
  std::optional<std::size_t> affine_index;
  std::vector<std::string> labels;

  std::size_t size() const { return mult.size(); }

  int out_degree(std::size_t i) const {
    int d = 0;
    for (int m : mult[i]) d += m;
    return d;
  }

  int edge_count() const {
    int e = 0;
    for (std::size_t i = 0; i < size(); ++i) e += out_degree(i);
    return e;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (mult[i][j] != mult[j][i]) return false;
    return true;
  }
};

namespace detail {

/// Undirected edges of the affine graph in canonical order:
/// node 0 is the affine node, 1..k continue the longest chain from it, and
/// the remaining nodes follow (D: second far tip, then the tip next to the
/// affine node; E6: the symmetric arm; E7/E8: the branch node).
inline std::vector<std::pair<std::size_t, std::size_t>> affine_edges(const DynkinType& type) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  const auto m = static_cast<std::size_t>(type.m());
  auto chain = [&](std::size_t last) {
    for (std::size_t i = 0; i < last; ++i) e.emplace_back(i, i + 1);
  };
  switch (type.family()) {
    case Family::A:
      if (m == 1) {
        e = {{0, 1}, {0, 1}};
      } else {
        chain(m);
        e.emplace_back(m, 0);
      }
      break;
    case Family::D:
      // 0 - c1 - ... - c_{m-3} - far tip (m-2); far tip (m-1) on c_{m-3}; near tip (m) on c1
      chain(m - 2);
      e.emplace_back(m - 3, m - 1);
      e.emplace_back(1, m);
      break;
    case Family::E:
      if (m == 6) {
        chain(4);
        e.emplace_back(2, 5);
        e.emplace_back(5, 6);
      } else if (m == 7) {
        chain(6);
        e.emplace_back(3, 7);
      } else {
        chain(7);
        e.emplace_back(5, 8);
      }
      break;
  }
  return e;
}

}  // namespace detail

inline DirectedGraph build_graph(const DynkinType& type, GraphForm form) {
  const std::size_t n = type.node_count(true);
  std::vector<std::vector<int>> affine(n, std::vector<int>(n, 0));
  for (auto [a, b] : detail::affine_edges(type)) {
    ++affine[a][b];
    ++affine[b][a];
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("n" + std::to_string(i));

  DirectedGraph g{type, form, {}, std::nullopt, {}};
  switch (form) {
    case GraphForm::affine:
      g.mult = std::move(affine);
      g.affine_index = 0;
      g.labels = std::move(labels);
      break;
    case GraphForm::semiaffine:
      // the affine node becomes a sink: drop its outgoing edges only
      for (auto& x : affine[0]) x = 0;
      g.mult = std::move(affine);
      g.affine_index = 0;
      g.labels = std::move(labels);
      break;
    case GraphForm::finite:
      g.mult.assign(n - 1, std::vector<int>(n - 1, 0));
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) g.mult[i - 1][j - 1] = affine[i][j];
      g.labels.assign(labels.begin() + 1, labels.end());
      break;
  }
  return g;
}

/// Breadth-first distance of every node from `source`, ignoring edge direction.
inline std::vector<int> undirected_distances(const DirectedGraph& g, std::size_t source) {
  std::vector<int> dist(g.size(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (dist[v] >= 0 || (g.mult[u][v] == 0 && g.mult[v][u] == 0)) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

/// det(t I - mult), by fraction-free elimination over Z[t].
inline QPoly char_poly(const DirectedGraph& g) {
  const std::size_t n = g.size();
  PolyMatrix m(n, n, QPoly(Var::t));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QPoly entry = QPoly::constant(Var::t, BigRational(-g.mult[i][j]));
      if (i == j) entry += var_power(Var::t, 1);
      m(i, j) = std::move(entry);
    }
  return determinant(std::move(m), Var::t);
}

struct CharpolyReport {
  DynkinType type;
  QPoly semiaffine;  // char_poly of the semiaffine graph
  QPoly finite;      // char_poly of the finite graph
  int d = 0;         // multiplicity of the root t = 0
  QPoly cofactor;    // semiaffine / t^d
  QPoly cox;         // minimal polynomial of 2cos(pi/h)
  bool structural_identity = false;  // semiaffine == t * finite
  bool claim_holds = false;          // cofactor == cox and d == rank + 1 - deg cox
};

inline CharpolyReport charpoly_report(const DynkinType& type) {
  CharpolyReport r{type, char_poly(build_graph(type, GraphForm::semiaffine)),
                   char_poly(build_graph(type, GraphForm::finite)), 0, QPoly(Var::t), cox(type.coxeter_number())};
  r.d = r.semiaffine.valuation();
  r.cofactor = r.semiaffine.unshifted(static_cast<std::size_t>(r.d));
  r.structural_identity = r.semiaffine == r.finite.shifted(1);
  const int cox_degree = static_cast<int>(euler_phi(2L * type.coxeter_number()) / 2);
  r.claim_holds = r.cofactor == r.cox && r.d == type.rank() + 1 - cox_degree;
  return r;
}

/// Graphviz digraph; an edge of multiplicity k is written k times.
inline std::string to_dot(const DirectedGraph& g) {
  std::ostringstream out;
  out << "digraph " << g.type.name() << "_" << to_string(g.form) << " {\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << "  " << g.labels[i];
    if (g.affine_index && *g.affine_index == i) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      for (int k = 0; k < g.mult[i][j]; ++k) out << "  " << g.labels[i] << " -> " << g.labels[j] << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ade
