#include <gtest/gtest.h>

#include "corpus.hpp"
#include "lpa/classify.hpp"
#include "lpa/error.hpp"
#include "lpa/ideal.hpp"
#include "lpa/oracle.hpp"

using namespace corpus;
using lpa::AdmissiblePair;
using lpa::Field;
using lpa::Ideal;

namespace {

const Field kQ = Field::rationals();

Ideal on_loop(const GraphPtr& g, const std::string& p) {
  return lpa::make_ideal(g, kQ, {}, {}, {{loop(*g, "e"), q(p)}});
}

Ideal graded(const GraphPtr& g, std::vector<std::string> h, std::vector<std::string> s = {}) {
  return Ideal::graded(g, kQ, {names(*g, std::move(h)), names(*g, std::move(s))});
}

}  // namespace

TEST(IdealTest, MakeIdealNormalizes) {
  const auto g = one_loop();
  const Ideal I = on_loop(g, "(x-1)^2");
  EXPECT_TRUE(I.H().empty());
  EXPECT_TRUE(I.S().empty());
  ASSERT_EQ(I.cycles().size(), 1U);
  EXPECT_EQ(I.cycles().begin()->second, q("x^2 - 2x + 1"));
  EXPECT_EQ(on_loop(g, "3x^2 (x-1)^2"), I);
  EXPECT_TRUE(on_loop(g, "7").is_whole());
  EXPECT_TRUE(on_loop(g, "5x^3").is_whole());
  EXPECT_EQ(I.graded_part(), Ideal::zero(g, kQ));
  EXPECT_EQ(lpa::make_ideal(g, kQ, {}, {}, {{loop(*g, "e"), q("(x-1)^2")}, {loop(*g, "e"), q("(x-1)(x-2)")}}),
            on_loop(g, "x-1"));
}

TEST(IdealTest, MakeIdealRejects) {
  const auto g = one_loop();
  EXPECT_THROW(lpa::make_ideal(g, kQ, {}, {}, {{loop(*g, "e"), lpa::Poly(kQ)}}), lpa::InputError);
  const auto c = column(2);
  // c1 has the exit w1 -> v1 unless v1 lies in H.
  EXPECT_THROW(lpa::make_ideal(c, kQ, {}, {}, {{loop(*c, "c1"), q("x+1")}}), lpa::InputError);
  EXPECT_THROW(lpa::make_ideal(c, kQ, names(*c, {"v1"}), {}, {}), lpa::InputError);  // not saturated
  const auto w = lpa::make_ideal(c, kQ, names(*c, {"v1", "v2", "w1"}), {}, {});
  EXPECT_THROW(lpa::make_ideal(c, kQ, w.H(), {}, {{loop(*c, "c1"), q("x+1")}}), lpa::InputError);
  EXPECT_THROW(lpa::make_ideal(g, Field::prime(5), {}, {}, {{loop(*g, "e"), q("x+1")}}), lpa::InputError);
}

TEST(IdealTest, ColumnIdealKeepsBothCycles) {
  const auto c = column(2);
  const Ideal I = lpa::make_ideal(c, kQ, names(*c, {"v1", "v2"}), {},
                                  {{loop(*c, "c1"), q("1 + x")}, {loop(*c, "c2"), q("(1 + x)^2")}});
  std::vector<lpa::Cycle> want{loop(*c, "c1"), loop(*c, "c2")};
  EXPECT_EQ(I.cycle_set(), want);
  EXPECT_EQ(I.cycles().at(loop(*c, "c2")), q("x^2 + 2x + 1"));
  const Ideal R = lpa::radical(I);
  EXPECT_EQ(R.cycles().at(loop(*c, "c2")), q("x + 1"));
  EXPECT_EQ(R.cycles().at(loop(*c, "c1")), q("x + 1"));
}

TEST(IdealTest, ContainsOnLoop) {
  const auto g = one_loop();
  const Ideal sq = on_loop(g, "(x-1)^2"), lin = on_loop(g, "x-1");
  EXPECT_TRUE(lpa::contains(lin, sq));
  EXPECT_FALSE(lpa::contains(sq, lin));
  EXPECT_TRUE(lpa::contains(sq, Ideal::zero(g, kQ)));
  EXPECT_TRUE(lpa::contains(Ideal::whole(g, kQ), lin));
  EXPECT_FALSE(lpa::contains(lin, Ideal::whole(g, kQ)));
}

TEST(IdealTest, ContainsSummand) {
  const auto c = column(2);
  const Ideal G = graded(c, {"v1", "v2"});
  const Ideal J = lpa::make_ideal(c, kQ, G.H(), {}, {{loop(*c, "c1"), q("1 + x")}});
  EXPECT_TRUE(lpa::contains(lpa::sum(G, J), G));
  EXPECT_EQ(lpa::sum(G, J), J);
}

TEST(IdealTest, SumOnLoop) {
  const auto g = one_loop();
  EXPECT_TRUE(lpa::sum(on_loop(g, "x-1"), on_loop(g, "x-2")).is_whole());
  EXPECT_EQ(lpa::sum(on_loop(g, "x-1"), Ideal::zero(g, kQ)), on_loop(g, "x-1"));
  EXPECT_EQ(lpa::sum(on_loop(g, "(x-1)^2 (x-2)"), on_loop(g, "(x-1)(x-2)^2")), on_loop(g, "(x-1)(x-2)"));
}

TEST(IdealTest, ProductAndIntersection) {
  const auto g = one_loop();
  EXPECT_EQ(lpa::product(on_loop(g, "x-1"), on_loop(g, "x-1")), on_loop(g, "(x-1)^2"));
  EXPECT_EQ(lpa::intersect(on_loop(g, "(x-1)(x-2)"), on_loop(g, "(x-1)^2")), on_loop(g, "(x-1)^2 (x-2)"));
  const Ideal I = on_loop(g, "x^2 + 1");
  EXPECT_EQ(lpa::intersect(I, I), I);

  const auto f = four_points();
  EXPECT_TRUE(lpa::product(graded(f, {"u"}), graded(f, {"v"})).is_zero());
  EXPECT_TRUE(lpa::product(graded(f, {"w"}), graded(f, {"x"})).is_zero());

  const auto t = two_points();
  EXPECT_TRUE(lpa::intersect(graded(t, {"a"}), graded(t, {"b"})).is_zero());
  EXPECT_EQ(lpa::intersect(graded(t, {"a"}), graded(t, {"b"})), lpa::product(graded(t, {"a"}), graded(t, {"b"})));
}

TEST(IdealTest, GradedTimesSmallerIsSmaller) {
  for (const auto& [n, g] : all_graphs()) {
    std::mt19937_64 rng(n.size());
    for (int t = 0; t < 20; ++t) {
      const Ideal I = lpa::random_ideal(g, kQ, rng);
      const Ideal G = I.graded_part();
      const Ideal J = lpa::product(I, lpa::random_ideal(g, kQ, rng));
      if (!lpa::contains(G, J)) continue;
      EXPECT_EQ(lpa::product(G, J), J) << n;
    }
  }
}

TEST(IdealTest, DistinctCyclesMultiplyToTheirGradedMeet) {
  const auto c = column(2);
  const Ideal H = graded(c, {"v1", "v2"});
  const Ideal A = lpa::make_ideal(c, kQ, H.H(), {}, {{loop(*c, "c1"), q("x+1")}});
  const Ideal B = lpa::make_ideal(c, kQ, H.H(), {}, {{loop(*c, "c2"), q("x+1")}});
  EXPECT_EQ(lpa::product(A, B), H);
  // Once c1 lies in the other factor's H it survives untouched.
  const Ideal W = graded(c, {"v1", "v2", "w1"});
  EXPECT_EQ(lpa::product(A, W), A);
}

TEST(IdealTest, BreakingVertexMembership) {
  // Graded ideals of the omega fork, cross-checked against the poset glb/lub.
  const auto f = omega_fork();
  const auto pairs = lpa::admissible_pairs(*f);
  for (const auto& a : pairs) {
    for (const auto& b : pairs) {
      EXPECT_EQ(lpa::pair_meet(*f, a, b), lpa::poset_meet(pairs, a, b));
      EXPECT_EQ(lpa::pair_join(*f, a, b), lpa::poset_join(pairs, a, b));
    }
  }
  // I({v},{u}) + I({w}) contains u itself: u emits nothing outside {v,w}.
  const Ideal A = graded(f, {"v"}, {"u"}), B = graded(f, {"w"});
  EXPECT_TRUE(lpa::sum(A, B).is_whole());
  // u^{v} is not in I({v,w}): modulo {v,w} the vertex u becomes a sink.
  const Ideal C = graded(f, {"v", "w"});
  EXPECT_EQ(lpa::intersect(A, C), graded(f, {"v"}));
}

TEST(IdealTest, RadicalExamples) {
  const auto g = one_loop();
  EXPECT_EQ(lpa::radical(on_loop(g, "(x-1)^2")), on_loop(g, "x-1"));
  const auto t = two_points();
  EXPECT_EQ(lpa::radical(graded(t, {"a"})), graded(t, {"a"}));
  EXPECT_THROW(lpa::radical(Ideal::whole(g, kQ)), lpa::InputError);
}

TEST(IdealTest, PowersAndProducts) {
  const auto g = one_loop();
  EXPECT_EQ(lpa::power(on_loop(g, "x-1"), 3), on_loop(g, "(x-1)^3"));
  EXPECT_TRUE(lpa::power(on_loop(g, "x-1"), 0).is_whole());
  EXPECT_THROW(lpa::product_of({}), lpa::InputError);
}

TEST(IdealTest, MismatchedSpacesAreRejected) {
  const auto g = one_loop(), h = one_loop();
  EXPECT_THROW(lpa::sum(Ideal::zero(g, kQ), Ideal::zero(h, kQ)), lpa::InputError);
  EXPECT_THROW(lpa::product(Ideal::zero(g, kQ), Ideal::zero(g, Field::prime(5))), lpa::InputError);
}

TEST(IdealTest, NormalFormIgnoresPresentation) {
  const auto g = two_cycle();
  const auto ab = *g->find_bundle("ab"), ba = *g->find_bundle("ba");
  const auto c1 = lpa::Cycle::from_edges(*g, {{ab, 0}, {ba, 0}});
  const auto c2 = lpa::Cycle::from_edges(*g, {{ba, 0}, {ab, 0}});
  EXPECT_EQ(lpa::make_ideal(g, kQ, {}, {}, {{c1, q("2x - 2")}}), lpa::make_ideal(g, kQ, {}, {}, {{c2, q("x^3 - x^2")}}));
}

TEST(IdealTest, DescribeIsReadable) {
  const auto g = one_loop();
  EXPECT_EQ(lpa::describe(on_loop(g, "x-1")), "I(H={}, S={}) + <x - 1 @ e#0>");
  EXPECT_EQ(lpa::describe(Ideal::zero(g, kQ)), "0");
  EXPECT_EQ(lpa::describe(Ideal::whole(g, kQ)), "whole algebra");
}
