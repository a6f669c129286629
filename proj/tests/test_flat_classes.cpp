#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lensfloer/errors.hpp"
#include "lensfloer/flat_classes.hpp"
#include "oracles.hpp"

using namespace lensfloer;

TEST(LensSpace, Validates) {
  EXPECT_NO_THROW(LensSpace(17, 2));
  EXPECT_THROW(LensSpace(16, 3), DomainError);
  EXPECT_THROW(LensSpace(1, 1), DomainError);
  EXPECT_THROW(LensSpace(9, 3), DomainError);
  EXPECT_THROW(LensSpace(9, 0), DomainError);
  EXPECT_THROW(LensSpace(9, 9), DomainError);
  EXPECT_EQ(LensSpace(17, 2).r(), 9);
}

TEST(EnumerateClasses, Examples) {
  const auto five = enumerate_classes(LensSpace(5, 1));
  ASSERT_EQ(five.size(), 3U);
  EXPECT_EQ(five[0], (FlatClass{0, Stabilizer::SU2}));
  EXPECT_EQ(five[2], (FlatClass{2, Stabilizer::U1}));

  const auto seventeen = enumerate_classes(LensSpace(17, 2));
  ASSERT_EQ(seventeen.size(), 9U);
  EXPECT_EQ(std::count_if(seventeen.begin(), seventeen.end(),
                          [](const FlatClass& c) { return c.is_trivial(); }),
            1);
  EXPECT_TRUE(seventeen.front().is_trivial());

  EXPECT_EQ(enumerate_classes(LensSpace(3, 1)).size(), 2U);
}

TEST(EnumerateClasses, LabelOrderAndStabilizers) {
  for (std::int64_t p = 3; p <= 61; p += 2) {
    const auto classes = enumerate_classes(LensSpace(p, 1));
    ASSERT_EQ(classes.size(), static_cast<std::size_t>((p + 1) / 2));
    for (std::size_t i = 0; i < classes.size(); ++i) {
      EXPECT_EQ(classes[i].l, static_cast<std::int64_t>(i));
      EXPECT_EQ(classes[i].stabilizer_dim(), i == 0 ? 3 : 1);
    }
  }
}

TEST(CanonicalLabel, Examples) {
  EXPECT_EQ(canonical_label(13, 17), 4);
  EXPECT_EQ(canonical_label(17, 17), 0);
  EXPECT_EQ(canonical_label(5, 17), 5);
  EXPECT_EQ(canonical_label(-1, 17), 1);
}

TEST(CanonicalLabel, IdempotentAndSymmetric) {
  for (std::int64_t p = 3; p <= 41; p += 2) {
    for (std::int64_t l = -2 * p; l <= 2 * p; ++l) {
      const std::int64_t c = canonical_label(l, p);
      EXPECT_LE(c, (p - 1) / 2);
      EXPECT_GE(c, 0);
      EXPECT_EQ(canonical_label(c, p), c);
      EXPECT_EQ(canonical_label(p - l, p), c);
    }
  }
}

TEST(GradingKPair, Examples) {
  EXPECT_EQ(grading_kpair(1, LensSpace(17, 2)), (KPair{1, 8}));
  EXPECT_EQ(grading_kpair(2, LensSpace(17, 2)), (KPair{2, 16}));
  EXPECT_EQ(grading_kpair(1, LensSpace(5, 1)), (KPair{1, 4}));
}

TEST(GradingKPair, CongruencesAndRange) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    const auto [p, q] = oracle::random_lens(rng, 401);
    const std::int64_t r = oracle::inverse_scan(q, p);
    for (std::int64_t l = 1; l <= (p - 1) / 2; l += 1 + (p / 40)) {
      const KPair k = grading_kpair(l, LensSpace(p, q));
      EXPECT_GE(k.k1, 1);
      EXPECT_LE(k.k1, p - 1);
      EXPECT_GE(k.k2, 1);
      EXPECT_LE(k.k2, p - 1);
      EXPECT_EQ(oracle::pmod(k.k1 - l, p), 0);
      EXPECT_EQ(oracle::pmod(k.k2 + r * l, p), 0);
    }
  }
}
