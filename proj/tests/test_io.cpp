#include <gtest/gtest.h>

#include "corpus.hpp"
#include "lpa/error.hpp"
#include "lpa/io.hpp"

using namespace corpus;
using lpa::Field;
using lpa::io::json;

TEST(IoTest, GraphRoundTrip) {
  for (const auto& [n, g] : all_graphs()) {
    const json j = lpa::io::graph_to_json(*g);
    const lpa::Graph back = lpa::io::graph_from_json(lpa::io::parse_json(j.dump()));
    EXPECT_EQ(lpa::io::graph_to_json(back).dump(), j.dump()) << n;
  }
}

TEST(IoTest, GraphDefaultsAndErrors) {
  const auto g = lpa::io::graph_from_json(lpa::io::parse_json(
      R"({"vertices":["u","v"],"edges":[{"src":"u","dst":"v"},{"src":"u","dst":"u","mult":"omega"}]})"));
  EXPECT_EQ(g.bundles()[0].id, "e0");
  EXPECT_TRUE(g.bundles()[1].mult.is_omega());
  EXPECT_THROW(lpa::io::graph_from_json(lpa::io::parse_json(R"({"vertices":[]})")), lpa::InputError);
  EXPECT_THROW(lpa::io::graph_from_json(lpa::io::parse_json(R"({"vertices":["a"],"edges":[{"src":"a","dst":"a","mult":0}]})")),
               lpa::InputError);
  EXPECT_THROW(lpa::io::graph_from_json(lpa::io::parse_json(R"({"vertices":["a"],"edges":[{"src":"a","dst":"b"}]})")),
               lpa::InputError);
  EXPECT_THROW(lpa::io::graph_from_json(lpa::io::parse_json(R"({"edges":[]})")), lpa::InputError);
}

TEST(IoTest, ParseErrorsCarryPosition) {
  try {
    lpa::io::parse_json("{\n  \"vertices\": [\"a\",]\n}", "g.json");
    FAIL() << "expected a parse error";
  } catch (const lpa::InputError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("g.json"), std::string::npos);
    EXPECT_NE(what.find("line 2"), std::string::npos) << what;
  }
}

TEST(IoTest, IdealRoundTripIsByteStable) {
  const auto c = column(2);
  const auto I = lpa::io::ideal_from_json(
      lpa::io::parse_json(R"({"H":["v1","v2"],"S":[],"cycles":[{"cycle":["c1#0"],"poly":"1+x"},
                              {"cycle":["w2"],"poly":["1","2","1"]}],"field":"Q"})"),
      c, Field::rationals());
  EXPECT_EQ(I.cycles().at(loop(*c, "c2")), q("(x+1)^2"));
  const std::string once = lpa::io::ideal_to_json(I).dump(2);
  const auto again = lpa::io::ideal_from_json(lpa::io::parse_json(once), c, Field::rationals());
  EXPECT_EQ(again, I);
  EXPECT_EQ(lpa::io::ideal_to_json(again).dump(2), once);

  std::mt19937_64 rng(11);
  for (const auto& [n, g] : all_graphs()) {
    for (const Field& f : {Field::rationals(), Field::prime(7)}) {
      for (int t = 0; t < 10; ++t) {
        const auto J = lpa::random_ideal(g, f, rng);
        const std::string s = lpa::io::ideal_to_json(J).dump();
        const auto K = lpa::io::ideal_from_json(lpa::io::parse_json(s), g, Field::rationals());
        EXPECT_EQ(K, J) << n << " " << s;
        EXPECT_EQ(lpa::io::ideal_to_json(K).dump(), s);
      }
    }
  }
}

TEST(IoTest, IdealFieldSelection) {
  const auto g = one_loop();
  const json j = lpa::io::parse_json(R"({"cycles":[{"cycle":["e#0"],"poly":"x^2+1"}]})");
  EXPECT_EQ(lpa::io::ideal_from_json(j, g, Field::prime(5)).field(), Field::prime(5));
  json k = j;
  k["field"] = "Fp:3";
  EXPECT_EQ(lpa::io::ideal_from_json(k, g, Field::rationals()).field(), Field::prime(3));
  const json m = lpa::io::parse_json(R"({"cycles":[{"cycle":["e#0"],"poly":"x^2+1 mod 5"}]})");
  EXPECT_THROW(lpa::io::ideal_from_json(m, g, Field::rationals()), lpa::InputError);
  EXPECT_EQ(lpa::io::ideal_from_json(m, g, Field::prime(5)).field(), Field::prime(5));
}

TEST(IoTest, CycleSyntax) {
  const auto g = two_cycle();
  const auto a = lpa::io::cycle_from_json(json::array({"a", "b"}), *g);
  EXPECT_EQ(a, lpa::io::cycle_from_json(json::array({"b", "a", "b"}), *g));
  EXPECT_EQ(a, lpa::io::cycle_from_json(json::array({"ba#0", "ab#0"}), *g));
  EXPECT_THROW(lpa::io::cycle_from_json(json::array({"v"}), *rose()), lpa::InputError);
  EXPECT_THROW(lpa::io::cycle_from_json(json::array({"r#2"}), *rose()), lpa::InputError);
  EXPECT_THROW(lpa::io::cycle_from_json(json::array({"ab#0"}), *g), lpa::InputError);
  EXPECT_THROW(lpa::io::cycle_from_json(json::array({"a", "ab#0"}), *g), lpa::InputError);
}

TEST(IoTest, WholeAlgebraIsWrittenAsAllVertices) {
  const auto g = two_points();
  const auto W = lpa::Ideal::whole(g, Field::rationals());
  const json j = lpa::io::ideal_to_json(W);
  EXPECT_EQ(j["H"], json::array({"a", "b"}));
  EXPECT_TRUE(lpa::io::ideal_from_json(j, g, Field::rationals()).is_whole());
}

TEST(IoTest, Dot) {
  const std::string d = lpa::io::to_dot(*omega_fork());
  EXPECT_NE(d.find("\"u\" -> \"v\" [tooltip=\"inf\", label=\"ω\"]"), std::string::npos) << d;
  const auto q = lpa::quotient_graph(*omega_fork(), {names(*omega_fork(), {"v"}), {}});
  EXPECT_NE(lpa::io::to_dot(q.graph).find("\"u'\";"), std::string::npos);
}

TEST(IoTest, AnalysisReportShape) {
  const json r = lpa::io::analysis_report(*double_loops(), {});
  EXPECT_TRUE(r["condition_K"]["holds"].get<bool>());
  EXPECT_TRUE(r["every_ideal_semiprime"]["holds"].get<bool>());
  EXPECT_FALSE(r["every_ideal_prime"]["holds"].get<bool>());
  EXPECT_EQ(r["hereditary_saturated_count"], 5);
  EXPECT_EQ(r["admissible_pairs"]["count"], 5);
}

TEST(IoTest, CertificateJson) {
  const auto g = two_points();
  const auto c = lpa::prime_factorization(lpa::Ideal::zero(g, Field::rationals()));
  ASSERT_TRUE(c);
  const json j = lpa::io::certificate_to_json(*c);
  EXPECT_EQ(j["kind"], "prime");
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(j["factors"].size(), 2U);
  EXPECT_EQ(j.begin().key(), "target");
}
