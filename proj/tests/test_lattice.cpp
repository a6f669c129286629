#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "lensfloer/errors.hpp"
#include "lensfloer/lattice.hpp"
#include "oracles.hpp"

using namespace lensfloer;

namespace {

constexpr double kTol = 1e-6;

const LensSpace kL17(17, 2);

}  // namespace

TEST(CountLattice, Examples) {
  const auto a = count_lattice({1, 8}, kL17);
  EXPECT_EQ(a.n1, 1);
  EXPECT_EQ(a.n2, 0);
  EXPECT_TRUE(a.minimal);
  EXPECT_EQ(a.solutions, (std::vector<LatticePoint>{{-1, -8}, {0, 0}, {1, 8}}));

  const auto b = count_lattice({2, 16}, kL17);
  EXPECT_EQ(b.n1, 5);
  EXPECT_EQ(b.n2, 2);

  const auto c = count_lattice({18, 8}, kL17);
  EXPECT_EQ(c.n1, 31);
  EXPECT_EQ(c.n2, 4);
  EXPECT_FALSE(c.minimal);
}

TEST(CountLattice, RejectsNonPositive) {
  EXPECT_THROW(count_lattice({0, 3}, kL17), DomainError);
  EXPECT_THROW(lattice_counts({3, -1}, kL17), DomainError);
  EXPECT_THROW(is_minimal({0, 0}, kL17), DomainError);
}

TEST(CountLattice, MatchesRectangleScan) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 1500; ++t) {
    const auto [p, q] = oracle::random_lens(rng, 61);
    std::uniform_int_distribution<std::int64_t> pick_k(1, 2 * p + 3);
    const KPair k{pick_k(rng), pick_k(rng)};
    const LensSpace space(p, q);
    const auto want = oracle::box_scan(k.k1, k.k2, p, q);
    const auto got = count_lattice(k, space);
    ASSERT_EQ(got.n1, want.n1) << p << " " << q << " " << k.k1 << " " << k.k2;
    ASSERT_EQ(got.n2, want.n2);
    ASSERT_EQ(got.minimal, want.minimal);
    ASSERT_EQ(got.solutions, want.solutions);
    const auto [n1, n2] = lattice_counts(k, space);
    ASSERT_EQ(n1, want.n1);
    ASSERT_EQ(n2, want.n2);
    ASSERT_EQ(is_minimal(k, space), want.minimal);
  }
}

TEST(CountLattice, FastCountsAgreeAtLargeP) {
  // Walking route vs floor-sum route where the scan would be too slow.
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const auto [p, q] = oracle::random_lens(rng, 200001);
    std::uniform_int_distribution<std::int64_t> pick_k(1, 3 * p);
    std::uniform_int_distribution<std::int64_t> pick_short(1, 400);
    const KPair k{pick_short(rng), pick_k(rng)};
    const LensSpace space(p, q);
    const auto full = count_lattice(k, space);
    const auto [n1, n2] = lattice_counts(k, space);
    ASSERT_EQ(n1, full.n1);
    ASSERT_EQ(n2, full.n2);
    ASSERT_EQ(is_minimal(k, space), full.minimal);
  }
}

TEST(CountLattice, StructuralInvariants) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 800; ++t) {
    const auto [p, q] = oracle::random_lens(rng, 101);
    std::uniform_int_distribution<std::int64_t> pick_k(1, p + 5);
    const KPair k{pick_k(rng), pick_k(rng)};
    const auto c = count_lattice(k, LensSpace(p, q));
    EXPECT_GE(c.n1, 1);
    EXPECT_EQ(c.n2 % 2, 0);
    EXPECT_EQ(oracle::pmod(fixed_dim(k, LensSpace(p, q)), 2), 1);
    for (const auto& [i, j] : c.solutions) {
      EXPECT_TRUE(std::binary_search(c.solutions.begin(), c.solutions.end(), LatticePoint{-i, -j}));
    }
  }
}

TEST(IsMinimal, MinkowskiBoundIsSafe) {
  // Every minimal box found by brute force satisfies k1 k2 <= p.
  for (std::int64_t p = 3; p <= 25; p += 2) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t k1 = 1; k1 <= p; ++k1) {
        for (std::int64_t k2 = 1; k2 <= p; ++k2) {
          const bool want = oracle::box_scan(k1, k2, p, q).minimal;
          if (want) {
            EXPECT_LE(k1 * k2, p);
          }
          ASSERT_EQ(is_minimal({k1, k2}, LensSpace(p, q)), want) << p << " " << q << " " << k1 << " " << k2;
        }
      }
    }
  }
}

TEST(FixedDim, Examples) {
  EXPECT_EQ(fixed_dim({1, 8}, kL17), 1);
  EXPECT_EQ(fixed_dim({1, 1}, LensSpace(5, 1)), 1);
  // With p = 1 every point solves the congruence: -1 + 2*1 + 4 = 5.
  const auto trivial = oracle::box_scan(1, 1, 1, 1);
  EXPECT_EQ(-1 + 2 * trivial.n1 + trivial.n2, 5);
}

TEST(CharacterOracle, Examples) {
  EXPECT_NEAR(character_dim_oracle({1, 8}, kL17), 1.0, kTol);
  EXPECT_NEAR(character_dim_oracle({2, 16}, kL17), 11.0, kTol);
  const double v = character_dim_oracle({1, 1}, LensSpace(3, 1));
  EXPECT_NEAR(v, std::round(v), kTol);
}

TEST(DiracCount, Examples) {
  EXPECT_EQ(dirac_count({1, 5}, kL17), 1);
  EXPECT_EQ(dirac_witnesses({1, 5}, kL17), (std::vector<LatticePoint>{{0, 2}}));
  EXPECT_EQ(dirac_count({1, 8}, kL17), 0);
  EXPECT_EQ(dirac_count({1, 7}, kL17), 1);
  EXPECT_EQ(dirac_witnesses({1, 7}, kL17), (std::vector<LatticePoint>{{0, 3}}));
}

TEST(DiracCount, MatchesScan) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 1500; ++t) {
    const auto [p, q] = oracle::random_lens(rng, 61);
    std::uniform_int_distribution<std::int64_t> pick_k(1, 2 * p + 3);
    const KPair k{pick_k(rng), pick_k(rng)};
    const LensSpace space(p, q);
    const std::int64_t want = oracle::dirac_scan(k.k1, k.k2, p, q);
    ASSERT_EQ(dirac_count(k, space), want) << p << " " << q << " " << k.k1 << " " << k.k2;
    ASSERT_EQ(static_cast<std::int64_t>(dirac_witnesses(k, space).size()), want);
  }
}

TEST(DiracOracle, Examples) {
  EXPECT_NEAR(dirac_count_oracle({1, 5}, kL17), 1.0, kTol);
  EXPECT_NEAR(dirac_count_oracle({1, 8}, kL17), 0.0, kTol);
}

TEST(Oracles, AgreeWithExactRoutes) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> pick_k(1, 12);
  for (int t = 0; t < 600; ++t) {
    const auto [p, q] = oracle::random_lens(rng, 31);
    const KPair k{pick_k(rng), pick_k(rng)};
    const LensSpace space(p, q);
    ASSERT_NEAR(character_dim_oracle(k, space), static_cast<double>(fixed_dim(k, space)), kTol);
    ASSERT_NEAR(dirac_count_oracle(k, space), static_cast<double>(dirac_count(k, space)), kTol);
  }
}

TEST(SpectralFlow, Examples) {
  EXPECT_EQ(spectral_flow_affine(1, 17, 1), -1);
  EXPECT_EQ(spectral_flow_affine(16, 17, 1), -1);
  EXPECT_EQ(spectral_flow_affine(3, 17, -1), 0);
  EXPECT_THROW(spectral_flow_affine(0, 17, 1), DomainError);
  EXPECT_THROW(spectral_flow_affine(17, 17, 1), DomainError);
  EXPECT_THROW(spectral_flow_affine(1, 17, 0), DomainError);
}

TEST(SpectralFlow, SplitTotalIsMinusOne) {
  for (std::int64_t p = 3; p <= 101; p += 2) {
    for (std::int64_t l = 1; l < p; ++l) {
      ASSERT_EQ(spectral_flow_affine(l, p, 1) + spectral_flow_affine(l, p, -1), -1);
    }
  }
}
