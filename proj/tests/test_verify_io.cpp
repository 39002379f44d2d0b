#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ade/ade.hpp"

using namespace ade;
using io::Json;

namespace {

const std::set<std::string> kRequired{"CROSS_MATCH", "CLOSED_FORM", "AB_RELATIONS",  "SPECIALIZATION",
                                      "FINITE_REDUCTION", "PALINDROME", "NOTES123", "LCD_COX",
                                      "MCKAY_ADJ", "SMITH_EIGEN", "SYM_ORACLE", "CHARPOLY_CLAIM",
                                      "STRUCTURAL_CHARPOLY"};

std::size_t count(const VerificationReport& r, const std::string& name, Status s) {
  std::size_t n = 0;
  for (const auto& c : r.checks) n += c.name == name && c.status == s;
  return n;
}

}  // namespace

TEST(Suite, D4AllPass) {
  const auto r = run_suite({DynkinType::parse("D4")});
  std::set<std::string> names;
  for (const auto& c : r.checks) {
    names.insert(c.name);
    if (c.name == "CHARPOLY_CLAIM") {
      EXPECT_EQ(c.status, Status::informational);
      ASSERT_TRUE(c.payload);
      EXPECT_EQ((*c.payload)["d"], 3);
    } else {
      EXPECT_EQ(c.status, Status::pass) << c.name << ": " << c.detail;
    }
  }
  for (const auto& n : kRequired) EXPECT_TRUE(names.count(n)) << n;
  EXPECT_TRUE(r.ok());
}

TEST(Suite, EmptyReport) {
  const auto r = run_suite({});
  EXPECT_TRUE(r.checks.empty());
  const Json j = io::encode(r);
  EXPECT_EQ(j["summary"]["pass"], 0);
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_EQ(j["summary"]["info"], 0);
}

TEST(Suite, DeterministicJson) {
  const auto types = parse_type_list("A1..A4,D4..D6,E6");
  EXPECT_EQ(io::encode(run_suite(types)).dump(), io::encode(run_suite(types)).dump());
}

TEST(Suite, FaultGivesExactlyOneCrossMatchFailure) {
  const auto types = parse_type_list("A1,A3,D5,E6");
  for (std::uint64_t seed : {1u, 2u, 3u, 17u, 99u}) {
    const Fault f = fault_from_seed(types, seed);
    const auto r = run_suite(types, f);
    EXPECT_EQ(r.count(Status::fail), 1u) << seed;
    EXPECT_EQ(count(r, "CROSS_MATCH", Status::fail), 1u) << seed;
    EXPECT_FALSE(r.ok());
  }
  EXPECT_THROW(fault_from_seed({}, 1), InvalidParameter);
}

TEST(Suite, FaultSeedIsReproducible) {
  const auto types = default_suite();
  const Fault a = fault_from_seed(types, 42), b = fault_from_seed(types, 42);
  EXPECT_EQ(a.type_index, b.type_index);
  EXPECT_EQ(a.node, b.node);
  EXPECT_EQ(a.exponent, b.exponent);
}

TEST(Fault, ChangesExactlyOneCoefficient) {
  auto nq = closed_form(DynkinType::parse("D4"));
  const auto before = nq.N[1];
  apply_fault(nq, 1, 3);
  EXPECT_EQ(nq.N[1].coeff(3), before.coeff(3) - 1);
  apply_fault(nq, 1, 0);
  EXPECT_EQ(nq.N[1].coeff(0), 1);
}

TEST(Json, RationalAndPolynomial) {
  EXPECT_EQ(io::encode(make_rational(-3, 6)).dump(), "\"-1/2\"");
  const QPoly p = make_poly(Var::q, {0, 1, 0, 2, 0, 1});
  const Json j = io::encode(p);
  EXPECT_EQ(j.dump(), R"({"var":"q","coeffs":["0","1","0","2","0","1"]})");
  EXPECT_EQ(io::decode_polynomial(j), p);
  EXPECT_THROW(io::decode_polynomial(Json::parse(R"({"var":"q","coeffs":["1","0"]})")), InvalidParameter);
  EXPECT_THROW(io::decode_polynomial(Json::parse(R"({"var":"x","coeffs":["1"]})")), InvalidParameter);
}

TEST(Json, CyclotomicRoundTrip) {
  const FieldPtr f = CyclotomicField::make(12);
  const CycNumber x = CycNumber::zeta(f, 1) * make_rational(1, 2) - CycNumber::zeta(f, 3);
  const Json j = io::encode(x);
  EXPECT_EQ(j["N"], 12);
  EXPECT_EQ(j["coeffs"].size(), 4u);
  EXPECT_EQ(io::decode_cyclotomic(j), x);
  EXPECT_EQ(io::encode(io::decode_cyclotomic(Json::parse(j.dump()))).dump(), j.dump());
}

TEST(Json, MinimalPolynomialOfTraces) {
  const auto G = enumerate(DynkinType::parse("E8"));
  for (const auto& c : G.classes) {
    const QPoly mp = io::minimal_polynomial(c.trace);
    CycPoly lifted(Var::t);
    for (std::size_t i = 0; i < mp.coeffs().size(); ++i)
      lifted += CycPoly::monomial(Var::t, CycNumber::rational(G.field, mp.coeffs()[i]), i);
    EXPECT_TRUE(lifted.evaluate(c.trace).is_zero());
    EXPECT_LE(mp.degree(), 2);
  }
}

template <class T, class Dec>
void expect_round_trip(const T& value, Dec decode) {
  const std::string text = io::encode(value).dump(2);
  EXPECT_EQ(io::encode(decode(Json::parse(text))).dump(2), text);
}

TEST(Json, StructuresRoundTrip) {
  for (const char* name : {"A1", "D4", "E7"}) {
    const DynkinType t = DynkinType::parse(name);
    for (auto form : {GraphForm::finite, GraphForm::affine, GraphForm::semiaffine})
      expect_round_trip(build_graph(t, form), io::decode_graph);
    const auto w = solve_semiaffine(build_graph(t, GraphForm::semiaffine));
    expect_round_trip(w, io::decode_tweights);
    expect_round_trip(to_q_numerators(w), io::decode_qnumerators);
  }
  const auto r = run_suite(parse_type_list("A2,D4"));
  expect_round_trip(r, io::decode_report);
}

TEST(Json, ReportSchema) {
  const Json j = io::encode(run_suite({DynkinType::parse("A3")}));
  ASSERT_TRUE(j.contains("suite"));
  ASSERT_TRUE(j.contains("checks"));
  for (const auto& c : j["checks"])
    for (const char* key : {"name", "type", "status", "detail"}) EXPECT_TRUE(c.contains(key));
  for (const char* key : {"pass", "fail", "info"}) EXPECT_TRUE(j["summary"].contains(key));
  EXPECT_EQ(j["summary"]["fail"], 0);
}
