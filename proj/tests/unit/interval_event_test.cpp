#include <gtest/gtest.h>

#include "rccs/errors.hpp"
#include "rccs/interval_event.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace rccs {
namespace {

using testing::GridOracle;

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

IntervalEvent ev(std::vector<Interval> ivs) { return IntervalEvent::from_intervals(std::move(ivs)); }

// [0,1/10) u [1/2,9/10)
IntervalEvent split_event() { return ev({{q(0), q(1, 10)}, {q(1, 2), q(9, 10)}}); }

TEST(IntervalEvent, MeetExamples) {
  EXPECT_EQ(meet(ev({{q(0), q(1, 2)}}), ev({{q(1, 4), q(3, 4)}})), ev({{q(1, 4), q(1, 2)}}));
  const auto a = ev({{q(1, 4), q(1, 2)}});
  EXPECT_TRUE(meet(a, complement(a)).is_zero());
  const auto expected = ev({{q(0), q(1, 10)}});
  EXPECT_EQ(GridOracle::meet(split_event(), ev({{q(0), q(1, 2)}})), expected);
  EXPECT_EQ(meet(split_event(), ev({{q(0), q(1, 2)}})), expected);
}

TEST(IntervalEvent, JoinExamples) {
  EXPECT_TRUE(join(ev({{q(0), q(1, 2)}}), ev({{q(1, 2), q(1)}})).is_one());
  const auto a = split_event();
  EXPECT_EQ(join(a, IntervalEvent::zero()), a);
  const auto b = ev({{q(1, 10), q(1, 2)}, {q(9, 10), q(1)}});
  const auto expected = ev({{q(0), q(1, 2)}, {q(9, 10), q(1)}});
  EXPECT_EQ(GridOracle::join(ev({{q(0), q(1, 2)}}), b), expected);
  EXPECT_EQ(join(ev({{q(0), q(1, 2)}}), b), expected);
}

TEST(IntervalEvent, ComplementExamples) {
  EXPECT_TRUE(complement(IntervalEvent::one()).is_zero());
  EXPECT_EQ(complement(ev({{q(1, 4), q(1, 2)}})), ev({{q(0), q(1, 4)}, {q(1, 2), q(1)}}));
  const auto expected = ev({{q(1, 10), q(1, 2)}, {q(9, 10), q(1)}});
  EXPECT_EQ(GridOracle::complement(split_event()), expected);
  EXPECT_EQ(complement(split_event()), expected);
}

TEST(IntervalEvent, MeasureExamples) {
  EXPECT_EQ(measure(IntervalEvent::one()), q(1));
  EXPECT_EQ(measure(IntervalEvent::zero()), q(0));
  const auto b = ev({{q(1, 10), q(1, 2)}, {q(9, 10), q(1)}});
  EXPECT_EQ(GridOracle::measure(b), q(1, 2));
  EXPECT_EQ(measure(b), q(2, 5) + q(1, 10));
}

TEST(IntervalEvent, LeqExamples) {
  EXPECT_TRUE(leq(ev({{q(1, 4), q(1, 2)}}), ev({{q(0), q(1, 2)}})));
  EXPECT_FALSE(leq(ev({{q(0), q(1, 2)}}), ev({{q(1, 4), q(1, 2)}})));
  testing::Gen gen(3);
  for (int k = 0; k < 50; ++k) EXPECT_TRUE(leq(IntervalEvent::zero(), gen.interval_event()));
}

TEST(IntervalEvent, CarveExamples) {
  EXPECT_EQ(carve(ev({{q(0), q(1, 2)}}), q(1, 4)), ev({{q(0), q(1, 4)}}));
  const auto expected = ev({{q(0), q(1, 10)}, {q(1, 2), q(3, 5)}});
  EXPECT_EQ(GridOracle::carve(split_event(), q(1, 5)), expected);
  EXPECT_EQ(carve(split_event(), q(1, 5)), expected);
}

TEST(IntervalEvent, CarveRejectsTargetsOutsideOpenRange) {
  const auto a = ev({{q(0), q(1, 2)}});
  for (const auto& x : {q(1, 2), q(0), q(-1, 3), q(3, 4)}) {
    try {
      carve(a, x);
      FAIL() << "carve accepted " << x;
    } catch (const PreconditionError& e) {
      EXPECT_EQ(e.gate(), Gate::CarveOutOfRange);
      const std::string what = e.what();
      EXPECT_NE(what.find(x.to_string()), std::string::npos);
      EXPECT_NE(what.find("1/2"), std::string::npos);
    }
  }
  EXPECT_THROW(carve(IntervalEvent::zero(), q(1, 4)), PreconditionError);
}

TEST(IntervalEvent, CarveStopsExactlyAtIntervalBoundary) {
  // x equal to the first piece: the second piece must not be touched.
  EXPECT_EQ(carve(split_event(), q(1, 10)), ev({{q(0), q(1, 10)}}));
}

TEST(IntervalEvent, StrictParsingRejectsNonCanonicalInput) {
  EXPECT_THROW(ev({{q(1, 2), q(3, 4)}, {q(0), q(1, 4)}}), InputError);        // unsorted
  EXPECT_THROW(ev({{q(0), q(1, 2)}, {q(1, 4), q(3, 4)}}), InputError);        // overlapping
  EXPECT_THROW(ev({{q(0), q(1, 2)}, {q(1, 2), q(3, 4)}}), InputError);        // adjacent
  EXPECT_THROW(ev({{q(1, 2), q(1, 2)}}), InputError);                          // empty
  EXPECT_THROW(ev({{q(3, 4), q(1, 2)}}), InputError);                          // reversed
  EXPECT_THROW(ev({{q(-1, 2), q(1, 2)}}), InputError);                         // below 0
  EXPECT_THROW(ev({{q(1, 2), q(3, 2)}}), InputError);                          // above 1
}

TEST(IntervalEvent, NormalizeMergesSortsAndDropsEmpties) {
  const auto e = IntervalEvent::from_intervals(
      {{q(1, 2), q(3, 4)}, {q(0), q(1, 4)}, {q(1, 8), q(1, 2)}, {q(9, 10), q(9, 10)}}, Canonicalize::Normalize);
  EXPECT_EQ(e, ev({{q(0), q(3, 4)}}));
  EXPECT_THROW(IntervalEvent::from_intervals({{q(3, 4), q(1, 2)}}, Canonicalize::Normalize), InputError);
}

// Property suites below run on seeded random events with small denominators,
// so coincident endpoints (the hard cases for merging) are frequent.

TEST(IntervalEventProperty, OperationsAgreeWithPointSetOracle) {
  testing::Gen gen(101);
  for (int k = 0; k < 400; ++k) {
    const auto a = gen.interval_event(4);
    const auto b = gen.interval_event(4);
    ASSERT_EQ(meet(a, b), GridOracle::meet(a, b)) << a << " ^ " << b;
    ASSERT_EQ(join(a, b), GridOracle::join(a, b)) << a << " v " << b;
    ASSERT_EQ(complement(a), GridOracle::complement(a)) << a;
    ASSERT_EQ(measure(a), GridOracle::measure(a)) << a;
  }
}

TEST(IntervalEventProperty, CanonicalFormIsUniquePerPointSet) {
  testing::Gen gen(102);
  for (int k = 0; k < 300; ++k) {
    const auto a = gen.interval_event(4);
    const auto b = gen.interval_event(4);
    // Same point set iff the symmetric difference is empty.
    const bool same_set = join(meet(a, complement(b)), meet(b, complement(a))).is_zero();
    ASSERT_EQ(same_set, a == b);
    // Rebuilding a from a shuffled, split representation gives the same list.
    std::vector<Interval> pieces;
    for (const auto& iv : a.intervals()) {
      const Rational mid = (iv.lo + iv.hi) / Rational(2);
      pieces.push_back({mid, iv.hi});
      pieces.push_back({iv.lo, mid});
    }
    std::shuffle(pieces.begin(), pieces.end(), gen.rng());
    ASSERT_EQ(IntervalEvent::from_intervals(pieces, Canonicalize::Normalize), a);
  }
}

TEST(IntervalEventProperty, BooleanAlgebraLaws) {
  testing::Gen gen(103);
  for (int k = 0; k < 300; ++k) {
    const auto a = gen.interval_event();
    const auto b = gen.interval_event();
    const auto c = gen.interval_event();
    ASSERT_EQ(meet(a, join(b, c)), join(meet(a, b), meet(a, c)));
    ASSERT_EQ(join(a, meet(b, c)), meet(join(a, b), join(a, c)));
    ASSERT_EQ(complement(meet(a, b)), join(complement(a), complement(b)));
    ASSERT_EQ(complement(join(a, b)), meet(complement(a), complement(b)));
    ASSERT_EQ(complement(complement(a)), a);
    ASSERT_EQ(join(a, meet(a, b)), a);
    ASSERT_EQ(meet(a, join(a, b)), a);
    ASSERT_EQ(meet(a, b), meet(b, a));
    ASSERT_EQ(join(a, b), join(b, a));
  }
}

TEST(IntervalEventProperty, MeasureIsExactlyModular) {
  testing::Gen gen(104);
  for (int k = 0; k < 500; ++k) {
    const auto a = gen.interval_event(4);
    const auto b = gen.interval_event(4);
    ASSERT_EQ(measure(join(a, b)) + measure(meet(a, b)), measure(a) + measure(b));
    ASSERT_EQ(measure(a) + measure(complement(a)), Rational(1));
    ASSERT_EQ(measure(a).is_zero(), a.is_zero());
    ASSERT_LE(measure(meet(a, b)), min(measure(a), measure(b)));
  }
}

TEST(IntervalEventProperty, CarveHitsTargetAndStaysStrictlyInside) {
  testing::Gen gen(105);
  int checked = 0;
  while (checked < 400) {
    const auto a = gen.interval_event(4, 30);
    const Rational total = measure(a);
    if (total.is_zero()) continue;
    const Rational x = total * Rational(gen.integer(1, 99), 100);
    const auto carved = carve(a, x);
    ASSERT_EQ(measure(carved), x);
    ASSERT_TRUE(leq(carved, a));
    ASSERT_FALSE(carved.is_zero());
    ASSERT_NE(carved, a);
    ASSERT_EQ(carved, GridOracle::carve(a, x));
    ++checked;
  }
}

}  // namespace
}  // namespace rccs
