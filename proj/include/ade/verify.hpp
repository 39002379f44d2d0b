#pragma once

#include <cstdint>
#include <future>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ade/graphs.hpp"
#include "ade/io.hpp"
#include "ade/su2/characters.hpp"
#include "ade/su2/group.hpp"
#include "ade/su2/molien.hpp"
#include "ade/weights.hpp"

namespace ade {

enum class Status { pass, fail, informational };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::informational: return "info";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  DynkinType type;
  Status status = Status::fail;
  std::string detail;
  std::optional<io::Json> payload;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
  }
  bool ok() const { return count(Status::fail) == 0; }
};

/// One coefficient of one graph-side N_i, changed by one before CROSS_MATCH.
struct Fault {
  std::size_t type_index = 0;
  std::size_t node = 0;
  std::size_t exponent = 0;
};

inline Fault fault_from_seed(const std::vector<DynkinType>& types, std::uint64_t seed) {
  if (types.empty()) throw InvalidParameter("fault injection needs at least one type");
  std::mt19937_64 rng(seed);
  Fault f;
  f.type_index = std::uniform_int_distribution<std::size_t>(0, types.size() - 1)(rng);
  const DynkinType& t = types[f.type_index];
  f.node = std::uniform_int_distribution<std::size_t>(0, t.node_count() - 1)(rng);
  f.exponent = std::uniform_int_distribution<std::size_t>(0, static_cast<std::size_t>(t.coxeter_number()))(rng);
  return f;
}

/// c -> c + 1 when c = 0, otherwise c -> c - 1.
inline void apply_fault(QNumerators& nq, std::size_t node, std::size_t exponent) {
  QPoly& p = nq.N.at(node);
  std::vector<BigRational> c = p.coeffs();
  if (c.size() <= exponent) c.resize(exponent + 1, BigRational(0));
  c[exponent] += sgn(c[exponent]) == 0 ? 1 : -1;
  p = QPoly(Var::q, std::move(c));
}

namespace detail {

inline std::string list_polys(const std::vector<QPoly>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + to_string(v[i]);
  return s;
}

inline std::vector<CheckResult> verify_type(const DynkinType& type, std::optional<std::pair<std::size_t, std::size_t>> fault) {
  std::vector<CheckResult> out;
  auto add = [&](std::string name, bool ok, std::string detail, std::optional<io::Json> payload = std::nullopt) {
    out.push_back({std::move(name), type, ok ? Status::pass : Status::fail, std::move(detail), std::move(payload)});
  };
  const int h = type.coxeter_number();

  // graph side
  std::optional<DirectedGraph> semi, affine, finite;
  std::optional<TWeights> tw;
  std::optional<QNumerators> graph_nq;
  std::string graph_error;
  try {
    semi = build_graph(type, GraphForm::semiaffine);
    affine = build_graph(type, GraphForm::affine);
    finite = build_graph(type, GraphForm::finite);
    tw = solve_semiaffine(*semi);
    graph_nq = to_q_numerators(*tw);
  } catch (const std::exception& e) {
    graph_error = e.what();
  }

  // group side
  std::optional<FiniteSubgroup> G;
  std::optional<CharTable> table;
  std::optional<McKayResult> mk;
  std::optional<MolienSet> ms;
  std::string group_error;
  try {
    G = enumerate(type);
    table = char_table(*G);
    mk = mckay_matrix(*G, *table);
    ms = molien_series(*G, *table);
  } catch (const std::exception& e) {
    group_error = e.what();
  }

  // Runs `body` unless a prerequisite is missing; exceptions become failures.
  auto guarded = [&](const std::string& name, bool need_graph, bool need_group, auto body) {
    if (need_graph && !graph_nq) return add(name, false, "graph side failed: " + graph_error);
    if (need_group && !ms) return add(name, false, "group side failed: " + group_error);
    try {
      body();
    } catch (const std::exception& e) {
      add(name, false, std::string("exception: ") + e.what());
    }
  };

  guarded("WEIGHT_EQUATION", true, false, [&] {
    add("WEIGHT_EQUATION", satisfies_weight_equation(*semi, *tw), "t n_i = sum of successor weights");
  });

  guarded("CLOSED_FORM", true, false, [&] {
    const QNumerators cf = closed_form(type);
    std::string detail;
    for (std::size_t i = 0; i < cf.N.size(); ++i)
      if (!(cf.N[i] == graph_nq->N.at(i)))
        detail += "node " + std::to_string(i) + ": solver " + to_string(graph_nq->N[i]) + " vs table " + to_string(cf.N[i]) + "; ";
    add("CLOSED_FORM", detail.empty(), detail.empty() ? detail::list_polys(graph_nq->N) : detail);
  });

  guarded("PALINDROME", true, false, [&] {
    add("PALINDROME", palindrome_check(*graph_nq), "nonnegative integral palindromes of degree h=" + std::to_string(h));
  });

  guarded("NOTES123", true, false, [&] {
    const NotesReport r = check_notes(*graph_nq);
    add("NOTES123", r.all(), r.all() ? "extreme exponents, parity, term counts" : r.detail);
  });

  guarded("SPECIALIZATION", true, false, [&] {
    const QPoly lhs = specialization_lhs(*graph_nq);
    add("SPECIALIZATION", specialization_identity(*graph_nq),
        to_string(lhs) + " vs " + to_string(standard_denominator(graph_nq->a, graph_nq->b)));
  });

  guarded("FINITE_REDUCTION", true, false, [&] {
    add("FINITE_REDUCTION", finite_reduction_check(*graph_nq), "node equations mod 1+q^" + std::to_string(h));
  });

  guarded("LCD_COX", true, false, [&] {
    const QPoly lcd = common_denominator(*tw), c = cox(h);
    std::string detail = "lcd " + to_string(lcd) + ", cox " + to_string(c);
    if (!(lcd == c) && (lcd % c).is_zero()) detail += ", extra factor " + to_string(exact_div(lcd, c));
    add("LCD_COX", lcd == c, detail);
  });

  guarded("SMITH_EIGEN", true, false, [&] {
    const auto mk_vec = marks(*graph_nq);
    bool ok = true;
    for (std::size_t i = 0; i < affine->size(); ++i) {
      BigRational s = 0;
      for (std::size_t j = 0; j < affine->size(); ++j) s += affine->mult[i][j] * mk_vec[j];
      ok = ok && s == 2 * mk_vec[i];
    }
    std::string m;
    for (std::size_t i = 0; i < mk_vec.size(); ++i) m += (i ? "," : "") + to_string(mk_vec[i]);
    add("SMITH_EIGEN", ok, "marks (" + m + ")");
  });

  guarded("STRUCTURAL_CHARPOLY", false, false, [&] {
    const CharpolyReport r = charpoly_report(type);
    add("STRUCTURAL_CHARPOLY", r.structural_identity, "semiaffine " + to_string(r.semiaffine) + ", t*finite " +
                                                          to_string(r.finite.shifted(1)));
    out.push_back({"CHARPOLY_CLAIM", type, Status::informational,
                   std::string(r.claim_holds ? "holds" : "does not hold") + ": d=" + std::to_string(r.d) +
                       ", cofactor " + to_string(r.cofactor),
                   io::encode(r)});
  });

  guarded("SEMIAFFINE_ASYMMETRY", true, false, [&] {
    add("SEMIAFFINE_ASYMMETRY", !semi->is_symmetric() && affine->is_symmetric() && finite->is_symmetric(),
        "semiaffine matrix is not symmetric; affine and finite are");
  });

  guarded("GROUP_ORDER", false, true, [&] {
    const bool ok = G->order() == static_cast<std::size_t>(type.group_order()) && G->class_count() == type.node_count();
    add("GROUP_ORDER", ok, "order " + std::to_string(G->order()) + ", classes " + std::to_string(G->class_count()));
  });

  guarded("CHAR_TABLE", false, true, [&] {
    const TableCheck c = validate_table(*table, *G);
    add("CHAR_TABLE", c.ok, c.ok ? "orthogonality and degree relations" : c.failure);
  });

  guarded("AB_RELATIONS", false, true, [&] {
    const long ab = static_cast<long>(ms->a) * ms->b, order = static_cast<long>(G->order());
    add("AB_RELATIONS", ab == 2 * order && ms->a + ms->b == h + 2,
        "a=" + std::to_string(ms->a) + ", b=" + std::to_string(ms->b) + ", |G|=" + std::to_string(order));
  });

  guarded("MCKAY_ADJ", false, true, [&] {
    bool ok = true;
    for (std::size_t i = 0; i < affine->size(); ++i)
      for (std::size_t j = 0; j < affine->size(); ++j)
        ok = ok && mk->matrix[mk->row_of_node[i]][mk->row_of_node[j]] == affine->mult[i][j];
    std::string m;
    for (std::size_t i = 0; i < mk->row_of_node.size(); ++i) m += (i ? "," : "") + std::to_string(mk->row_of_node[i]);
    add("MCKAY_ADJ", ok, "character of node (" + m + ")");
  });

  guarded("MOLIEN_RECURRENCE", false, true, [&] {
    add("MOLIEN_RECURRENCE", recurrence_check(*ms, *mk, *affine), "(q+1/q) m_i = sum of neighbours, +1/q at node 0");
  });

  guarded("SYM_ORACLE", false, true, [&] {
    const int mmax = 2 * h + 1;
    const auto sym = sym_power_multiplicities(*G, *table, mmax);
    std::string detail;
    for (std::size_t i = 0; i < table->rows.size() && detail.empty(); ++i) {
      const auto series = power_series(ms->m[i], static_cast<std::size_t>(mmax) + 1);
      for (int m = 0; m <= mmax; ++m) {
        const BigRational& s = series[static_cast<std::size_t>(m)];
        if (s != sym[static_cast<std::size_t>(m)][i] || !is_integer(s) || sgn(s) < 0) {
          detail = "character " + std::to_string(i) + ", degree " + std::to_string(m) + ": series " + to_string(s) +
                   " vs Sym " + to_string(sym[static_cast<std::size_t>(m)][i]);
          break;
        }
      }
    }
    add("SYM_ORACLE", detail.empty(), detail.empty() ? "agree through degree " + std::to_string(mmax) : detail);
  });

  guarded("CROSS_MATCH", true, true, [&] {
    QNumerators graph_copy = *graph_nq;
    if (fault) apply_fault(graph_copy, fault->first, fault->second);
    const QNumerators group_nq = molien_numerators_by_node(*ms, *mk);
    std::string detail;
    for (std::size_t i = 0; i < graph_copy.N.size(); ++i)
      if (!(graph_copy.N[i] == group_nq.N.at(i)))
        detail += "node " + std::to_string(i) + ": graph " + to_string(graph_copy.N[i]) + " vs group " +
                  to_string(group_nq.N[i]) + "; ";
    add("CROSS_MATCH", detail.empty() && graph_copy.N.size() == group_nq.N.size(),
        detail.empty() ? detail::list_polys(group_nq.N) : detail);
  });

  return out;
}

inline std::string suite_name(const std::vector<DynkinType>& types) {
  std::string s;
  for (std::size_t i = 0; i < types.size(); ++i) s += (i ? "," : "") + types[i].name();
  return s;
}

}  // namespace detail

/// Every check for every type. Types run concurrently; results keep the
/// order of `types`.
inline VerificationReport run_suite(const std::vector<DynkinType>& types, std::optional<Fault> fault = std::nullopt) {
  if (fault && fault->type_index >= types.size()) throw InvalidParameter("fault type index out of range");
  std::vector<std::future<std::vector<CheckResult>>> jobs;
  for (std::size_t k = 0; k < types.size(); ++k) {
    std::optional<std::pair<std::size_t, std::size_t>> f;
    if (fault && fault->type_index == k) f = std::make_pair(fault->node, fault->exponent);
    jobs.push_back(std::async(std::launch::async, detail::verify_type, types[k], f));
  }
  VerificationReport r{detail::suite_name(types), {}};
  for (auto& j : jobs)
    for (auto& c : j.get()) r.checks.push_back(std::move(c));
  return r;
}

namespace io {

inline Json encode(const CheckResult& c) {
  Json j{{"name", c.name}, {"type", c.type.name()}, {"status", to_string(c.status)}, {"detail", c.detail}};
  if (c.payload) j["payload"] = *c.payload;
  return j;
}

inline Json encode(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(encode(c));
  return Json{{"suite", r.suite},
              {"checks", checks},
              {"summary", {{"pass", r.count(Status::pass)}, {"fail", r.count(Status::fail)}, {"info", r.count(Status::informational)}}}};
}

inline Status decode_status(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "info") return Status::informational;
  throw InvalidParameter("unknown check status '" + s + "'");
}

inline VerificationReport decode_report(const Json& j) {
  VerificationReport r{j.at("suite").get<std::string>(), {}};
  for (const auto& c : j.at("checks")) {
    CheckResult x{c.at("name").get<std::string>(), DynkinType::parse(c.at("type").get<std::string>()),
                  decode_status(c.at("status").get<std::string>()), c.at("detail").get<std::string>(), std::nullopt};
    if (c.contains("payload")) x.payload = c.at("payload");
    r.checks.push_back(std::move(x));
  }
  return r;
}

}  // namespace io

inline std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks)
    out << (c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "INFO") << "  " << c.type.name()
        << "  " << c.name << "  " << c.detail << "\n";
  out << "summary: " << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
      << r.count(Status::informational) << " info\n";
  return out.str();
}

}  // namespace ade
