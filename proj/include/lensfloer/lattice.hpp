#pragma once

/**
 * @file lattice.hpp
 * @brief Lattice-point counts behind dimensions, gradings and Dirac indices.
 *
 * Every count here is over the lattice {(i,j) : i + q j = 0 (mod p)} inside
 * the box |i| <= k1, |j| <= k2. The box splits into
 *   - interior  |i| < k1, |j| < k2           (counted by n1, weight 2)
 *   - edges     exactly one of |i| = k1, |j| = k2 (counted by n2, weight 1)
 *   - corners   |i| = k1 and |j| = k2        (counted by neither)
 *
 * count_lattice and dirac_count walk the shorter side of the box and solve
 * the congruence for the other coordinate, O(min(k1, k2)). lattice_counts
 * reduces the interior to a floor sum and costs O(log p). The *_oracle
 * functions evaluate the corresponding Z_p characters in floating point and
 * share no code with the exact routes.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "lensfloer/flat_classes.hpp"

namespace lensfloer {

using LatticePoint = std::pair<std::int64_t, std::int64_t>;

struct LatticeCounts {
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  /// True iff every solution in the closed box lies in
  /// {(0,0), +-(k1,k2), +-(k1,-k2)}, i.e. n1 == 1 and n2 == 0.
  bool minimal = false;
  /// Every solution in the closed box, corners included, sorted.
  std::vector<LatticePoint> solutions;
};

/// Throws DomainError unless k1, k2 >= 1.
void validate(const KPair& k);

/// Full count with the solution list.
LatticeCounts count_lattice(const KPair& k, const LensSpace& space);

/// n1 and n2 only; no allocation.
std::pair<std::int64_t, std::int64_t> lattice_counts(const KPair& k, const LensSpace& space);

/// Same answer as count_lattice(k, space).minimal. Boxes with k1*k2 > p are
/// rejected up front: the open box then has area above 4p, so Minkowski's
/// theorem puts a nonzero lattice point in its interior.
bool is_minimal(const KPair& k, const LensSpace& space);

/// dim M(P(k1,k2))^{Z_p} = -1 + 2 n1 + n2.
std::int64_t fixed_dim(const KPair& k, const LensSpace& space);

/// Real part of (1/p) sum_j Tr(zeta^j) for the Lefschetz character
/// -1 + sum a_ij t1^i t2^j restricted to t = (zeta^j, zeta^{qj}).
double character_dim_oracle(const KPair& k, const LensSpace& space);

/// #{(a,b) : 0 <= a < k1, 0 <= b < k2,
///           -k1 + 2a + 1 + q(-k2 + 2b + 1) = 0 (mod 2p)}.
/// The twisted Dirac index on the cylinder is minus this count.
std::int64_t dirac_count(const KPair& k, const LensSpace& space);

/// The (a,b) pairs counted by dirac_count, sorted.
std::vector<LatticePoint> dirac_witnesses(const KPair& k, const LensSpace& space);

/// (1/2p) sum_{j<2p} sum_{a,b} exp(2 pi i j e(a,b) / 2p); real part.
double dirac_count_oracle(const KPair& k, const LensSpace& space);

/// Signed count of zero crossings of lambda_n(t) = direction*(-2 pi l t/p)
/// + eps + 2 pi n, t in [0,1], with eps -> 0+ handled symbolically.
/// Downward crossings count -1, upward +1. Requires 0 < l < p, direction = +-1.
int spectral_flow_affine(std::int64_t l, std::int64_t p, int direction);

}  // namespace lensfloer
