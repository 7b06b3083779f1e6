#include <set>
#include <utility>

#include <gtest/gtest.h>

#include "severi/catalog.hpp"
#include "severi/errors.hpp"
#include "severi/hilbert.hpp"
#include "test_support.hpp"

using namespace severi;
using severi::test::P;

TEST(Admissible, Examples) {
  EXPECT_EQ(admissible(9), 18);
  EXPECT_EQ(admissible(6), std::nullopt);
  EXPECT_EQ(admissible(10), std::nullopt);
  EXPECT_EQ(admissible(3), std::nullopt);
  EXPECT_EQ(admissible(12), 30);
  EXPECT_THROW(admissible(0), DomainError);
  EXPECT_THROW(admissible(-3), DomainError);
}

TEST(AdmissibleProperty, BruteForceLawUpTo300) {
  for (std::int64_t d = 1; d <= 300; ++d) {
    // Search for n directly instead of dividing.
    std::optional<std::int64_t> solution;
    for (std::int64_t n = 0; 6 * n <= d * d + 3 * d; ++n)
      if (6 * n == d * d + 3 * d) solution = n;
    const bool expected = solution && d >= 5 && !(d == 6 && *solution == 9);
    EXPECT_EQ(admissible(d).has_value(), expected) << d;
    EXPECT_EQ(admissible(d).has_value(), d >= 9 && d % 3 == 0) << d;
    if (expected) EXPECT_EQ(*admissible(d), *solution);
  }
}

TEST(MakeInstance, Examples) {
  const Instance nine = make_instance(9);
  EXPECT_EQ(nine.n, 18);
  EXPECT_EQ(nine.r, 5);
  EXPECT_EQ(nine.s, 3);
  EXPECT_EQ(nine.genus, 10);
  EXPECT_TRUE(nine.cone.member);

  const Instance fifteen = make_instance(15);
  EXPECT_EQ(fifteen.n, 45);
  EXPECT_EQ(fifteen.r, 9);
  EXPECT_EQ(fifteen.s, 0);
  EXPECT_EQ(fifteen.cone, (PhiVerdict{true, PhiReason::FibonacciList}));

  const Instance twelve = make_instance(12);
  EXPECT_EQ(twelve.n, 30);
  EXPECT_EQ(twelve.r, 7);
  EXPECT_EQ(twelve.s, 2);
  EXPECT_EQ(twelve.cone, (PhiVerdict{false, PhiReason::NotMember}));

  EXPECT_THROW(make_instance(10), NotAdmissible);
  EXPECT_THROW(make_instance(6), NotAdmissible);
}

TEST(MakeInstanceProperty, DecompositionInvariantsAndUniqueness) {
  for (std::int64_t d = 9; d <= 99; d += 3) {
    const Instance inst = make_instance(d);
    EXPECT_EQ(6 * inst.n, d * d + 3 * d);
    EXPECT_LE(0, inst.s);
    EXPECT_LE(inst.s, inst.r);
    EXPECT_EQ(inst.r * (inst.r + 1) / 2 + inst.s, inst.n);
    // r is the only value admitting such an s.
    int solutions = 0;
    for (std::int64_t r = 0; r <= inst.n; ++r) {
      const std::int64_t s = inst.n - r * (r + 1) / 2;
      if (0 <= s && s <= r) ++solutions;
    }
    EXPECT_EQ(solutions, 1) << d;
  }
}

TEST(PhiMember, Examples) {
  EXPECT_EQ(phi_member(3, 5), (PhiVerdict{true, PhiReason::FibonacciList}));
  EXPECT_EQ(phi_member(2, 7), (PhiVerdict{false, PhiReason::NotMember}));
  EXPECT_EQ(phi_member(2, 3), (PhiVerdict{true, PhiReason::Inequality}));
  EXPECT_EQ(phi_member(8, 13), (PhiVerdict{true, PhiReason::FibonacciList}));
  EXPECT_EQ(phi_member(0, 1), (PhiVerdict{true, PhiReason::FibonacciList}));
  EXPECT_EQ(phi_member(1, 2), (PhiVerdict{true, PhiReason::FibonacciList}));
  EXPECT_EQ(phi_member(21, 34), (PhiVerdict{true, PhiReason::FibonacciList}));
  EXPECT_EQ(phi_member(6, 10), (PhiVerdict{true, PhiReason::FibonacciList}));
  EXPECT_THROW(phi_member(3, 2), DomainError);
  EXPECT_THROW(phi_member(0, 0), DomainError);
}

TEST(PhiMemberProperty, FibonacciListUpToThirteen) {
  const std::set<std::pair<int, int>> listed = {{0, 1}, {1, 2}, {3, 5}, {8, 13}};
  for (int r = 1; r <= 13; ++r) {
    for (int s = 0; s <= r; ++s) {
      if (std::gcd(s, r) != 1) continue;
      const PhiVerdict v = phi_member(s, r);
      EXPECT_EQ(v.reason == PhiReason::FibonacciList, listed.count({s, r}) == 1)
          << s << "/" << r;
    }
  }
}

TEST(MovingCurves, Pairings) {
  EXPECT_EQ(moving_curve_c1().pair_h, Polynomial(1));
  EXPECT_EQ(moving_curve_c1().pair_b, Polynomial(0));
  EXPECT_EQ(moving_curve_c2().pair_h, P("r"));
  EXPECT_EQ(moving_curve_c2().pair_b, P("(r-1)(r-2)-2+2n"));
  EXPECT_EQ(moving_curve("C2").name, "C2");
  EXPECT_THROW(moving_curve("C3"), UnknownName);
}

TEST(Pair, Examples) {
  const Catalog& c = Catalog::builtin();
  const Instance nine = make_instance(9);
  EXPECT_EQ(pair(moving_curve_c2(), c.get_class("HF"), nine), 2252);
  EXPECT_EQ(pair(moving_curve_c2(), c.get_class("CP"), nine), 5);
  for (std::int64_t d : {9, 12, 30, 99})
    EXPECT_EQ(pair(moving_curve_c1(), c.get_class("NL"), make_instance(d)), 1);
}

TEST(Pair, UnboundSymbol) {
  EXPECT_THROW(pair(moving_curve_c1(), HilbClass{P("s"), 0}, make_instance(9)), UnboundSymbol);
}

TEST(PairProperty, C1PicksOutTheHCoefficient) {
  for (std::int64_t d = 9; d <= 99; d += 3) {
    const Instance inst = make_instance(d);
    for (const NamedClass& e : Catalog::builtin().entries())
      EXPECT_EQ(pair(moving_curve_c1(), e.cls, inst), evaluate(e.cls.h, inst.bindings()));
  }
}

TEST(Witness, Examples) {
  const Catalog& c = Catalog::builtin();
  const Instance nine = make_instance(9);
  const auto kw = pseudoeffective_witness(c.get_class("K_W"), nine);
  ASSERT_TRUE(kw);
  EXPECT_EQ(kw->curve, "C1");
  EXPECT_EQ(kw->value, -3);
  EXPECT_TRUE(kw->cone_certified);
  EXPECT_NE(kw->describe().find("-3"), std::string::npos);
  EXPECT_FALSE(pseudoeffective_witness(c.get_class("NL"), nine));
  EXPECT_FALSE(pseudoeffective_witness(c.get_class("TR"), nine));
}

TEST(Witness, FallsBackToC2) {
  // Nonnegative on C1, negative on C2 at d = 9: -B[n].
  const auto w = pseudoeffective_witness(HilbClass{0, -1}, make_instance(9));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->curve, "C2");
  EXPECT_EQ(w->value, -46);
}

TEST(WitnessProperty, CanonicalClassEveryAdmissibleDegree) {
  for (std::int64_t d = 9; d <= 99; d += 3) {
    const Instance inst = make_instance(d);
    const auto w = pseudoeffective_witness(Catalog::builtin().get_class("K_W"), inst);
    ASSERT_TRUE(w) << d;
    EXPECT_EQ(w->curve, "C1");
    EXPECT_EQ(w->value, -3);
    EXPECT_EQ(w->cone_certified, inst.cone.member);
  }
}
