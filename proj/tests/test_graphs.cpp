#include <gtest/gtest.h>

#include "ade/algebra/fold.hpp"
#include "ade/graphs.hpp"

using namespace ade;

namespace {

// Faddeev-LeVerrier: det(tI - A) from traces of powers, over Q.
QPoly leverrier(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  using M = std::vector<std::vector<BigRational>>;
  auto mul = [&](const M& x, const M& y) {
    M z(n, std::vector<BigRational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  M A(n, std::vector<BigRational>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = a[i][j];
  std::vector<BigRational> c(n + 1, 0);
  c[n] = 1;
  M m(n, std::vector<BigRational>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    const M am = mul(A, m);
    BigRational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / BigRational(static_cast<long>(k));
    m = am;
  }
  return QPoly(Var::t, c);
}

}  // namespace

TEST(DynkinType, InvariantsOfEveryFamily) {
  for (const auto& t : default_suite()) {
    const auto [a, b] = t.degrees();
    EXPECT_EQ(a * b, 2 * t.group_order()) << t.name();
    EXPECT_EQ(a + b, t.coxeter_number() + 2) << t.name();
  }
  EXPECT_EQ(DynkinType::parse("E8").coxeter_number(), 30);
  EXPECT_EQ(DynkinType::parse("D7").group_order(), 20);
}

TEST(DynkinType, RejectsInvalidNames) {
  for (const char* s : {"A0", "D3", "E5", "E9", "X4", "", "D", "A1x"}) EXPECT_THROW(DynkinType::parse(s), InvalidParameter) << s;
}

TEST(TypeList, RangesAndLists) {
  EXPECT_EQ(parse_type_list("D4..D6").size(), 3u);
  EXPECT_EQ(parse_type_list("E6..E8,A1").size(), 4u);
  EXPECT_EQ(default_suite().size(), 24u);
  EXPECT_THROW(parse_type_list("A3..D5"), InvalidParameter);
  EXPECT_THROW(parse_type_list("A3,,A4"), InvalidParameter);
  EXPECT_THROW(parse_type_list("A2,D3"), InvalidParameter);
}

TEST(Graph, D4Semiaffine) {
  const DirectedGraph g = build_graph(DynkinType::parse("D4"), GraphForm::semiaffine);
  ASSERT_EQ(g.size(), 5u);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(g.mult[0][j], 0);
  for (std::size_t j : {0u, 2u, 3u, 4u}) EXPECT_EQ(g.mult[1][j], 1);
  for (std::size_t i : {2u, 3u, 4u}) {
    EXPECT_EQ(g.mult[i][1], 1);
    EXPECT_EQ(g.out_degree(i), 1);
  }
  EXPECT_EQ(g.edge_count(), 7);
}

TEST(Graph, SmallCases) {
  const DirectedGraph a2 = build_graph(DynkinType::parse("A2"), GraphForm::affine);
  EXPECT_EQ(a2.edge_count(), 6);
  EXPECT_TRUE(a2.is_symmetric());
  const DirectedGraph a1 = build_graph(DynkinType::parse("A1"), GraphForm::semiaffine);
  EXPECT_EQ(a1.mult[1][0], 2);
  EXPECT_EQ(a1.edge_count(), 2);
  EXPECT_EQ(build_graph(DynkinType::parse("A1"), GraphForm::finite).edge_count(), 0);
  EXPECT_EQ(build_graph(DynkinType::parse("A2"), GraphForm::semiaffine).edge_count(), 4);
}

TEST(Graph, FormsAreConsistent) {
  for (const auto& t : default_suite()) {
    const auto aff = build_graph(t, GraphForm::affine), semi = build_graph(t, GraphForm::semiaffine),
               fin = build_graph(t, GraphForm::finite);
    EXPECT_TRUE(aff.is_symmetric());
    EXPECT_TRUE(fin.is_symmetric());
    EXPECT_FALSE(semi.is_symmetric()) << t.name();
    for (std::size_t i = 0; i < aff.size(); ++i) {
      EXPECT_EQ(semi.mult[0][i], 0);
      EXPECT_EQ(semi.mult[i][0], aff.mult[i][0]);
      for (std::size_t j = 1; j < aff.size(); ++j)
        if (i) EXPECT_EQ(semi.mult[i][j], aff.mult[i][j]);
    }
    // a tree except for the A cycle
    const int undirected = aff.edge_count() / 2;
    EXPECT_EQ(undirected, static_cast<int>(aff.size()) - (t.family() == Family::A ? 0 : 1)) << t.name();
    // connected
    for (int d : undirected_distances(aff, 0)) EXPECT_GE(d, 0);
  }
}

TEST(Graph, CanonicalChainFromAffineNode) {
  for (const auto& t : default_suite()) {
    if (t.family() == Family::A) continue;
    const auto dist = undirected_distances(build_graph(t, GraphForm::affine), 0);
    // nodes 1..k step away from node 0 one at a time
    for (std::size_t i = 1; i < dist.size(); ++i)
      if (dist[i] != static_cast<int>(i)) {
        for (std::size_t j = i; j < dist.size(); ++j) EXPECT_LE(dist[j], static_cast<int>(i)) << t.name();
        break;
      }
  }
}

TEST(Charpoly, Examples) {
  EXPECT_EQ(char_poly(build_graph(DynkinType::parse("D4"), GraphForm::semiaffine)), make_poly(Var::t, {0, 0, 0, -3, 0, 1}));
  EXPECT_EQ(char_poly(build_graph(DynkinType::parse("A2"), GraphForm::finite)), make_poly(Var::t, {-1, 0, 1}));
  EXPECT_EQ(char_poly(build_graph(DynkinType::parse("A1"), GraphForm::affine)), make_poly(Var::t, {-4, 0, 1}));
}

TEST(Charpoly, AgreesWithTraceMethod) {
  for (const auto& t : default_suite())
    for (auto form : {GraphForm::finite, GraphForm::affine, GraphForm::semiaffine}) {
      const auto g = build_graph(t, form);
      EXPECT_EQ(char_poly(g), leverrier(g.mult)) << t.name() << " " << to_string(form);
    }
}

TEST(Charpoly, StructuralIdentityAndDegree) {
  for (const auto& t : default_suite()) {
    const auto r = charpoly_report(t);
    EXPECT_TRUE(r.structural_identity) << t.name();
    EXPECT_EQ(r.semiaffine.degree(), t.rank() + 1);
    EXPECT_EQ(r.cofactor.shifted(static_cast<std::size_t>(r.d)), r.semiaffine);
  }
}

TEST(Charpoly, ReportExamples) {
  const auto d4 = charpoly_report(DynkinType::parse("D4"));
  EXPECT_EQ(d4.d, 3);
  EXPECT_EQ(d4.cofactor, make_poly(Var::t, {-3, 0, 1}));
  EXPECT_TRUE(d4.claim_holds);
  const auto a3 = charpoly_report(DynkinType::parse("A3"));
  EXPECT_EQ(a3.d, 2);
  EXPECT_EQ(a3.cofactor, make_poly(Var::t, {-2, 0, 1}));
  EXPECT_TRUE(a3.claim_holds);
}

// The finite charpoly factors as prod over exponents of (t - 2cos(pi e / h)),
// so cox(h) always divides it.
TEST(Charpoly, CoxDividesFinite) {
  for (const auto& t : default_suite()) {
    const auto r = charpoly_report(t);
    EXPECT_TRUE((r.finite % r.cox).is_zero()) << t.name();
  }
}

TEST(Dot, EdgeLinesAndAffineMarker) {
  const std::string dot = to_dot(build_graph(DynkinType::parse("A2"), GraphForm::semiaffine));
  std::size_t arrows = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) ++arrows;
  EXPECT_EQ(arrows, 4u);
  EXPECT_NE(dot.find("doublecircle"), std::string::npos);
}
