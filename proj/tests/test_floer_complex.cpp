#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "lensfloer/errors.hpp"
#include "lensfloer/floer_complex.hpp"
#include "oracles.hpp"

using namespace lensfloer;

namespace {

const LensSpace kL17(17, 2);

std::vector<std::int64_t> labels(const std::vector<FlatClass>& gens) {
  std::vector<std::int64_t> out;
  for (const auto& g : gens) out.push_back(g.l);
  return out;
}

}  // namespace

TEST(Delta, Examples) {
  EXPECT_EQ(delta(1, kL17).value, 2);
  EXPECT_EQ(delta(2, kL17).value, 4);
  EXPECT_EQ(delta(4, kL17).value, 0);
  EXPECT_THROW(delta(0, kL17), DomainError);
  EXPECT_THROW(delta(9, kL17), DomainError);
}

TEST(Delta, GoldenTableForEightNPlusOne) {
  for (std::int64_t n = 1; n <= 12; ++n) {
    const LensSpace y(8 * n + 1, 2);
    for (std::int64_t l = 1; l <= 4 * n; ++l) {
      const std::int64_t want = (l % 2 == 1 ? 2 * l : 6 * l) % 8;
      EXPECT_EQ(delta(l, y).value, want) << "p = " << y.p() << ", l = " << l;
    }
  }
}

TEST(Delta, MatchesRectangleScan) {
  for (std::int64_t p = 3; p <= 45; p += 2) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const LensSpace y(p, q);
      for (std::int64_t l = 1; l <= (p - 1) / 2; ++l) {
        const KPair k = grading_kpair(l, y);
        ASSERT_EQ(delta(l, y).value, oracle::grading_scan(k.k1, k.k2, p, q));
        ASSERT_EQ(delta(l, y).value % 2, 0);
      }
    }
  }
}

TEST(Delta, RepresentativeIndependence) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<std::int64_t> lift(0, 2);
  for (int t = 0; t < 200; ++t) {
    const auto [p, q] = oracle::random_lens(rng, 41);
    std::uniform_int_distribution<std::int64_t> pick_l(1, (p - 1) / 2);
    const LensSpace y(p, q);
    const std::int64_t l = pick_l(rng);
    const KPair k = grading_kpair(l, y);
    for (int s = 0; s < 3; ++s) {
      const KPair lifted{k.k1 + lift(rng) * p, k.k2 + lift(rng) * p};
      ASSERT_EQ(kpair_grading(lifted, y), delta(l, y));
      ASSERT_EQ(oracle::grading_scan(lifted.k1, lifted.k2, p, q), delta(l, y).value);
    }
  }
}

TEST(DeltaTheta, IsZero) {
  EXPECT_EQ(delta_theta(kL17).value, 0);
  EXPECT_EQ(delta_theta(LensSpace(5, 1)).value, 0);
}

TEST(DeltaReverse, Examples) {
  EXPECT_EQ(delta_reverse(1, kL17).value, 4);
  EXPECT_EQ(delta_reverse(4, kL17).value, 6);
  EXPECT_EQ(delta_reverse(3, kL17).value, 0);
}

TEST(FormalDim, Examples) {
  const FlatClass theta = make_flat_class(0);
  EXPECT_EQ(formal_dim_mod8(make_flat_class(1), theta, kL17), 1);
  EXPECT_EQ(formal_dim_mod8(theta, make_flat_class(2), kL17), 1);
  EXPECT_EQ(formal_dim_mod8(make_flat_class(3), make_flat_class(2), kL17), 1);
  EXPECT_THROW(formal_dim_mod8(theta, theta, kL17), DomainError);
}

TEST(BoundaryElement, Examples) {
  const auto a = boundary_element(4, 3, kL17);
  EXPECT_EQ(a.value, 1);
  ASSERT_TRUE(a.chosen.has_value());
  EXPECT_EQ(*a.chosen, (KPair{1, 5}));
  EXPECT_EQ(a.dirac_witnesses, (std::vector<LatticePoint>{{0, 2}}));

  const auto b = boundary_element(2, 1, kL17);
  EXPECT_EQ(b.value, 1);
  EXPECT_EQ(*b.chosen, (KPair{1, 7}));
  EXPECT_EQ(b.dirac_witnesses, (std::vector<LatticePoint>{{0, 3}}));

  EXPECT_EQ(boundary_element(8, 3, kL17).value, 0);
}

TEST(BoundaryElement, Preconditions) {
  EXPECT_THROW(boundary_element(4, 1, kL17), DomainError);  // gap 0 - 2 = 6
  EXPECT_THROW(boundary_element(0, 3, kL17), DomainError);
  EXPECT_THROW(boundary_element(4, 9, kL17), DomainError);
}

TEST(BoundaryCandidates, DropZeroResiduesAndDuplicates) {
  // m = 0: the four sign choices collapse to two.
  EXPECT_EQ(boundary_candidates(1, 0, kL17).size(), 2U);
  for (const auto& c : boundary_candidates(3, 5, kL17)) {
    EXPECT_GE(c.k.k1, 1);
    EXPECT_LE(c.k.k1, 16);
    EXPECT_EQ(c.dirac.has_value(), c.minimal);
  }
}

TEST(AssembleComplex, L17) {
  const auto cx = assemble_complex(kL17);
  EXPECT_EQ(labels(cx.generators[0]), (std::vector<std::int64_t>{4, 8}));
  EXPECT_EQ(labels(cx.generators[1]), (std::vector<std::int64_t>{1, 5}));
  EXPECT_EQ(labels(cx.generators[2]), (std::vector<std::int64_t>{2, 6}));
  EXPECT_EQ(labels(cx.generators[3]), (std::vector<std::int64_t>{3, 7}));
  EXPECT_EQ(cx.homology, (std::array<std::size_t, 4>{0, 0, 0, 0}));
  EXPECT_EQ(cx.boundaries[0].to_rows(), (std::vector<std::string>{"10", "01"}));
  EXPECT_EQ(cx.boundaries[2].to_rows(), (std::vector<std::string>{"10", "01"}));
  EXPECT_TRUE(cx.boundaries[1].is_zero());
  EXPECT_TRUE(cx.boundaries[3].is_zero());
}

TEST(AssembleComplex, L9Vanishes) {
  EXPECT_TRUE(assemble_complex(LensSpace(9, 2)).homology_vanishes());
}

TEST(AssembleComplex, MatchesRecipeScan) {
  // Every boundary entry against the scan-based recipe, and every
  // non-adjacent pair has no minimal candidate of the wrong kind.
  for (std::int64_t p = 3; p <= 35; p += 2) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto cx = assemble_complex(LensSpace(p, q));
      for (int i = 0; i < 4; ++i) {
        const auto& src = cx.generators[static_cast<std::size_t>(i)];
        const auto& dst = cx.generators[static_cast<std::size_t>(FloerComplexData::prev(i))];
        for (std::size_t c = 0; c < src.size(); ++c) {
          for (std::size_t r = 0; r < dst.size(); ++r) {
            const int want = oracle::boundary_scan(src[c].l, dst[r].l, p, q);
            ASSERT_NE(want, -2);
            ASSERT_EQ(cx.boundaries[static_cast<std::size_t>(i)].get(r, c), want == 1)
                << "L(" << p << "," << q << ") " << src[c].l << " -> " << dst[r].l;
          }
        }
      }
    }
  }
}

TEST(AssembleComplex, RoutesAgree) {
  for (std::int64_t p = 3; p <= 121; p += 2) {
    for (std::int64_t q = 1; q < p; q += 1 + p / 30) {
      if (std::gcd(p, q) != 1) continue;
      const LensSpace y(p, q);
      const auto sweep = assemble_complex(y, BoundaryRoute::KPairSweep);
      const auto pairwise = assemble_complex(y, BoundaryRoute::Pairwise);
      for (std::size_t i = 0; i < 4; ++i) {
        ASSERT_EQ(sweep.boundaries[i], pairwise.boundaries[i]) << "L(" << p << "," << q << ")";
      }
      ASSERT_EQ(sweep.homology, pairwise.homology);
    }
  }
}

TEST(AssembleComplex, HomologyInvariants) {
  for (std::int64_t p = 3; p <= 101; p += 2) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto cx = assemble_complex(LensSpace(p, q));
      std::size_t total = 0;
      std::int64_t chi_c = 0;
      std::int64_t chi_h = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        const std::size_t dim = cx.generators[i].size();
        total += dim;
        ASSERT_LE(cx.homology[i], dim);
        const std::int64_t sign = i % 2 == 0 ? 1 : -1;
        chi_c += sign * static_cast<std::int64_t>(dim);
        chi_h += sign * static_cast<std::int64_t>(cx.homology[i]);
        const auto& next = cx.boundaries[static_cast<std::size_t>(FloerComplexData::prev(static_cast<int>(i)))];
        ASSERT_TRUE((next * cx.boundaries[i]).is_zero());
      }
      ASSERT_EQ(total, static_cast<std::size_t>((p - 1) / 2));
      ASSERT_EQ(chi_c, chi_h);
    }
  }
}
