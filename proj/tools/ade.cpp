#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "CLI11.hpp"
#include "ade/ade.hpp"

namespace {

using ade::io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string types;
  std::string form = "semiaffine";
  std::string format = "text";
  std::string basis = "t";
  std::size_t series_terms = 0;
  std::string out;
  std::optional<std::uint64_t> fault_seed;
};

// Multiple types give a JSON array, a single type a bare object.
Json collect(const std::vector<Json>& items) {
  if (items.size() == 1) return items.front();
  return Json(items);
}

// "a; b; c (×3)" with consecutive equal entries grouped.
template <class T>
std::string grouped(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (i) s += "; ";
    s += to_string(v[i]);
    if (j - i > 1) s += " (×" + std::to_string(j - i) + ")";
    i = j;
  }
  return s;
}

std::string latex_list(const std::vector<ade::QPoly>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + ade::to_latex_exponents(v[i]);
  return s;
}

std::string prefixed(const std::vector<ade::DynkinType>& types, const std::vector<std::string>& lines) {
  std::string s;
  for (std::size_t i = 0; i < lines.size(); ++i) s += (types.size() > 1 ? types[i].name() + ": " : "") + lines[i] + "\n";
  return s;
}

ade::QNumerators group_numerators(const ade::DynkinType& t) {
  const auto G = ade::enumerate(t);
  const auto table = ade::char_table(G);
  return ade::molien_numerators_by_node(ade::molien_series(G, table), ade::mckay_matrix(G, table));
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (o.format == a) return;
  throw UsageError("format '" + o.format + "' is not available for this command");
}

std::string run_graph(const Options& o, const std::vector<ade::DynkinType>& types) {
  require_format(o, {"json", "text", "dot"});
  const ade::GraphForm form = ade::parse_graph_form(o.form);
  std::vector<Json> js;
  std::string s;
  for (const auto& t : types) {
    const ade::DirectedGraph g = ade::build_graph(t, form);
    if (o.format == "json") {
      js.push_back(ade::io::encode(g));
    } else if (o.format == "dot") {
      s += ade::to_dot(g);
    } else {
      s += t.name() + " " + ade::to_string(form) + ", " + std::to_string(g.size()) + " nodes, " +
           std::to_string(g.edge_count()) + " edges\n";
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
          if (g.mult[i][j]) s += "  " + g.labels[i] + " -> " + g.labels[j] + (g.mult[i][j] > 1 ? " x" + std::to_string(g.mult[i][j]) : "") + "\n";
    }
  }
  return o.format == "json" ? collect(js).dump(2) + "\n" : s;
}

std::string run_weights(const Options& o, const std::vector<ade::DynkinType>& types) {
  require_format(o, {"json", "text", "latex"});
  std::vector<Json> js;
  std::vector<std::string> lines;
  for (const auto& t : types) {
    if (o.basis == "t") {
      if (o.format == "latex") throw UsageError("latex output needs basis q or molien");
      const auto w = ade::solve_semiaffine(ade::build_graph(t, ade::GraphForm::semiaffine));
      js.push_back(ade::io::encode(w));
      lines.push_back(grouped(w.values));
    } else if (o.basis == "q" || o.basis == "molien") {
      const ade::QNumerators nq =
          o.basis == "q" ? ade::to_q_numerators(ade::solve_semiaffine(ade::build_graph(t, ade::GraphForm::semiaffine)))
                         : group_numerators(t);
      js.push_back(ade::io::encode(nq));
      lines.push_back(o.format == "latex" ? latex_list(nq.N) : grouped(nq.N));
    } else {
      throw UsageError("basis must be t, q or molien");
    }
  }
  return o.format == "json" ? collect(js).dump(2) + "\n" : prefixed(types, lines);
}

std::string run_molien(const Options& o, const std::vector<ade::DynkinType>& types) {
  require_format(o, {"json", "text", "latex"});
  std::vector<Json> js;
  std::vector<std::string> lines;
  for (const auto& t : types) {
    const auto G = ade::enumerate(t);
    const auto table = ade::char_table(G);
    const auto mk = ade::mckay_matrix(G, table);
    const auto ms = ade::molien_series(G, table);
    js.push_back(ade::io::encode(ms, mk, o.series_terms));
    const auto nq = ade::molien_numerators_by_node(ms, mk);
    if (o.format == "latex") {
      lines.push_back(latex_list(nq.N));
      continue;
    }
    std::string s = grouped(nq.N);
    for (std::size_t node = 0; node < nq.N.size() && o.series_terms; ++node) {
      s += "\n  m_" + std::to_string(node) + " =";
      for (const auto& c : ade::power_series(ms.m[mk.row_of_node[node]], o.series_terms)) s += " " + ade::to_string(c);
    }
    lines.push_back(s);
  }
  return o.format == "json" ? collect(js).dump(2) + "\n" : prefixed(types, lines);
}

std::string run_group(const Options& o, const std::vector<ade::DynkinType>& types) {
  require_format(o, {"json", "text"});
  std::vector<Json> js;
  std::string s;
  for (const auto& t : types) {
    const auto G = ade::enumerate(t);
    if (o.format == "json") {
      Json j = ade::io::encode_group(G);
      j["character_table"] = ade::io::encode(ade::char_table(G));
      js.push_back(j);
      continue;
    }
    s += t.name() + ": order " + std::to_string(G.order()) + ", " + std::to_string(G.class_count()) +
         " classes, conductor " + std::to_string(G.field->conductor()) + "\n";
    for (const auto& c : G.classes)
      s += "  size " + std::to_string(c.size()) + ", order " + std::to_string(c.order) + ", trace " +
           ade::to_string(c.trace) + "\n";
  }
  return o.format == "json" ? collect(js).dump(2) + "\n" : s;
}

std::string run_charpoly(const Options& o, const std::vector<ade::DynkinType>& types) {
  require_format(o, {"json", "text"});
  std::vector<Json> js;
  std::string s;
  for (const auto& t : types) {
    const auto r = ade::charpoly_report(t);
    js.push_back(ade::io::encode(r));
    s += t.name() + ": semiaffine " + ade::to_string(r.semiaffine) + ", finite " + ade::to_string(r.finite) +
         ", d=" + std::to_string(r.d) + ", cofactor " + ade::to_string(r.cofactor) + ", cox " + ade::to_string(r.cox) +
         (r.claim_holds ? ", claim holds" : ", claim fails") + "\n";
  }
  return o.format == "json" ? collect(js).dump(2) + "\n" : s;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary);
    f << text;
    f.close();
    if (!f) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("cannot write " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ADE graphs, semiaffine weights and binary polyhedral groups"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool many) {
    if (many)
      sub->add_option("--types,--type", o.types, "types or ranges, e.g. E6,E7 or A1..A12")->required();
    else
      sub->add_option("--type,--types", o.types, "type, list or range, e.g. D4 or D4..D12")->required();
    sub->add_option("--format", o.format, "json, text, latex or dot");
    sub->add_option("--out", o.out, "write to this path instead of stdout");
  };

  auto* graph = app.add_subcommand("graph", "finite, affine or semiaffine diagram");
  add_common(graph, false);
  graph->add_option("--form", o.form, "finite, affine or semiaffine");
  auto* weights = app.add_subcommand("weights", "node weights of the semiaffine graph");
  add_common(weights, false);
  weights->add_option("--basis", o.basis, "t, q or molien");
  auto* molien = app.add_subcommand("molien", "generalized Molien series");
  add_common(molien, false);
  molien->add_option("--series-terms", o.series_terms, "print this many power-series coefficients");
  auto* group = app.add_subcommand("group", "elements and conjugacy classes");
  add_common(group, false);
  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomials");
  add_common(charpoly, false);
  auto* verify = app.add_subcommand("verify", "run every cross-check");
  add_common(verify, true);
  verify->add_option("--inject-fault", o.fault_seed, "change one graph-side coefficient chosen by this seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::vector<ade::DynkinType> types;
  try {
    types = ade::parse_type_list(o.types);
    if (types.empty()) throw UsageError("no types given");
    if (o.format == "dot" && !graph->parsed()) throw UsageError("dot output is only available for graph");
    if (graph->parsed()) ade::parse_graph_form(o.form);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::string text;
    int rc = 0;
    if (graph->parsed()) text = run_graph(o, types);
    if (weights->parsed()) text = run_weights(o, types);
    if (molien->parsed()) text = run_molien(o, types);
    if (group->parsed()) text = run_group(o, types);
    if (charpoly->parsed()) text = run_charpoly(o, types);
    if (verify->parsed()) {
      require_format(o, {"json", "text"});
      std::optional<ade::Fault> fault;
      if (o.fault_seed) fault = ade::fault_from_seed(types, *o.fault_seed);
      const auto report = ade::run_suite(types, fault);
      text = o.format == "json" ? ade::io::encode(report).dump(2) + "\n" : ade::to_text(report);
      rc = report.ok() ? 0 : 1;
    }
    emit(text, o.out);
    return rc;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
