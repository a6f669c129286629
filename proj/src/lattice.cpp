#include "lensfloer/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "lensfloer/errors.hpp"
#include "lensfloer/exact_arith.hpp"

namespace lensfloer {

namespace {

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  const auto prod = static_cast<__int128>(floor_mod(a, m)) * floor_mod(b, m);
  return static_cast<std::int64_t>(prod % m);
}

// Walks the shorter side of the box. For each coordinate s on that side,
// `visit(s, c, a, b)` receives the residue c that the other coordinate must
// hit, plus the short and long half-lengths. Returning false stops the walk.
template <typename Visit>
void walk_short_side(const KPair& k, const LensSpace& space, Visit&& visit) {
  const std::int64_t p = space.p();
  const bool short_is_i = k.k1 <= k.k2;
  const std::int64_t a = short_is_i ? k.k1 : k.k2;
  const std::int64_t b = short_is_i ? k.k2 : k.k1;
  // i + q j = 0  <=>  j = -r i  <=>  i = -q j   (mod p)
  const std::int64_t factor = short_is_i ? floor_mod(-space.r(), p) : floor_mod(-space.q(), p);
  for (std::int64_t s = -a; s <= a; ++s) {
    if (!visit(s, mul_mod(factor, s, p), a, b)) return;
  }
}

}  // namespace

void validate(const KPair& k) {
  if (k.k1 < 1 || k.k2 < 1) {
    throw DomainError("k-pair must be positive, got (" + std::to_string(k.k1) + "," +
                      std::to_string(k.k2) + ")");
  }
}

std::pair<std::int64_t, std::int64_t> lattice_counts(const KPair& k, const LensSpace& space) {
  validate(k);
  const std::int64_t p = space.p();
  const std::int64_t r = space.r();
  const std::int64_t q = space.q();
  // Interior: for each |i| < k1 the j = -r i (mod p) with |j| < k2 number
  //   floor((k2 - 1 + r i)/p) - floor((-k2 + r i)/p),
  // summed over i = i' - (k1 - 1), i' in [0, 2 k1 - 2].
  const std::int64_t width = 2 * k.k1 - 1;
  const std::int64_t shift = mul_mod(r, k.k1 - 1, p);
  const std::int64_t n1 = floor_sum(width, p, r, k.k2 - 1 - shift) - floor_sum(width, p, r, -k.k2 - shift);
  // Edges: |i| = k1 with |j| < k2, and |j| = k2 with |i| < k1.
  std::int64_t n2 = 0;
  for (const std::int64_t i : {k.k1, -k.k1}) {
    n2 += count_congruent(-k.k2 + 1, k.k2 - 1, mul_mod(-r, i, p), p);
  }
  for (const std::int64_t j : {k.k2, -k.k2}) {
    n2 += count_congruent(-k.k1 + 1, k.k1 - 1, mul_mod(-q, j, p), p);
  }
  return {n1, n2};
}

LatticeCounts count_lattice(const KPair& k, const LensSpace& space) {
  validate(k);
  const std::int64_t p = space.p();
  const bool short_is_i = k.k1 <= k.k2;
  LatticeCounts out;
  walk_short_side(k, space, [&](std::int64_t s, std::int64_t c, std::int64_t a, std::int64_t b) {
    for (std::int64_t t = -b + floor_mod(c + b, p); t <= b; t += p) {
      const bool s_edge = (s == -a || s == a);
      const bool t_edge = (t == -b || t == b);
      if (!s_edge && !t_edge) {
        ++out.n1;
      } else if (s_edge != t_edge) {
        ++out.n2;
      }
      out.solutions.emplace_back(short_is_i ? LatticePoint{s, t} : LatticePoint{t, s});
    }
    return true;
  });
  std::sort(out.solutions.begin(), out.solutions.end());
  out.minimal = out.n1 == 1 && out.n2 == 0;
  return out;
}

bool is_minimal(const KPair& k, const LensSpace& space) {
  validate(k);
  if (static_cast<__int128>(k.k1) * k.k2 > space.p()) return false;
  // Only (0,0) may appear off the corners; stop at the first other point.
  const std::int64_t p = space.p();
  bool minimal = true;
  walk_short_side(k, space, [&](std::int64_t s, std::int64_t c, std::int64_t a, std::int64_t b) {
    const std::int64_t open = count_congruent(-b + 1, b - 1, c, p);
    const bool edge = floor_mod(b - c, p) == 0 || floor_mod(-b - c, p) == 0;
    const std::int64_t allowed = s == 0 ? 1 : 0;
    if (open != allowed || (s != -a && s != a && edge)) minimal = false;
    return minimal;
  });
  return minimal;
}

std::int64_t fixed_dim(const KPair& k, const LensSpace& space) {
  const auto [n1, n2] = lattice_counts(k, space);
  return -1 + 2 * n1 + n2;
}

double character_dim_oracle(const KPair& k, const LensSpace& space) {
  validate(k);
  const std::int64_t p = space.p();
  const std::int64_t q = space.q();
  double total = 0.0;
  for (std::int64_t g = 0; g < p; ++g) {
    std::complex<double> trace{-1.0, 0.0};
    for (std::int64_t i = -k.k1; i <= k.k1; ++i) {
      for (std::int64_t j = -k.k2; j <= k.k2; ++j) {
        const bool i_in = std::abs(i) < k.k1;
        const bool j_in = std::abs(j) < k.k2;
        const int weight = (i_in && j_in) ? 2 : (i_in != j_in ? 1 : 0);
        if (weight == 0) continue;
        const std::int64_t e = floor_mod(g * floor_mod(i + q * j, p), p);
        trace += static_cast<double>(weight) *
                 std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) /
                                     static_cast<double>(p));
      }
    }
    total += trace.real();
  }
  return total / static_cast<double>(p);
}

std::int64_t dirac_count(const KPair& k, const LensSpace& space) {
  validate(k);
  const std::int64_t p = space.p();
  const std::int64_t two_p = 2 * p;
  const std::int64_t q = space.q();
  const std::int64_t r = space.r();
  std::int64_t count = 0;
  if (k.k1 <= k.k2) {
    // Fix a; need 2 q b = -c (mod 2p), solvable iff c is even, then b = -r c/2 (mod p).
    const std::int64_t tail = mul_mod(q, 1 - k.k2, two_p);
    for (std::int64_t a = 0; a < k.k1; ++a) {
      const std::int64_t c = floor_mod(floor_mod(-k.k1 + 2 * a + 1, two_p) + tail, two_p);
      if (c % 2 != 0) continue;
      const std::int64_t b0 = mul_mod(-r, c / 2, p);
      count += count_congruent(0, k.k2 - 1, b0, p);
    }
  } else {
    // Fix b; need 2a = -c (mod 2p), i.e. a = -c/2 (mod p).
    for (std::int64_t b = 0; b < k.k2; ++b) {
      const std::int64_t c =
          floor_mod(floor_mod(1 - k.k1, two_p) + mul_mod(q, -k.k2 + 2 * b + 1, two_p), two_p);
      if (c % 2 != 0) continue;
      const std::int64_t a0 = floor_mod(-c / 2, p);
      count += count_congruent(0, k.k1 - 1, a0, p);
    }
  }
  return count;
}

std::vector<LatticePoint> dirac_witnesses(const KPair& k, const LensSpace& space) {
  validate(k);
  const std::int64_t p = space.p();
  const std::int64_t two_p = 2 * p;
  std::vector<LatticePoint> out;
  for (std::int64_t a = 0; a < k.k1; ++a) {
    const std::int64_t c = floor_mod(floor_mod(-k.k1 + 2 * a + 1, two_p) +
                                         mul_mod(space.q(), 1 - k.k2, two_p),
                                     two_p);
    if (c % 2 != 0) continue;
    const std::int64_t b0 = mul_mod(-space.r(), c / 2, p);
    for (std::int64_t b = b0; b < k.k2; b += p) out.emplace_back(a, b);
  }
  return out;
}

double dirac_count_oracle(const KPair& k, const LensSpace& space) {
  validate(k);
  const std::int64_t two_p = 2 * space.p();
  const std::int64_t q = space.q();
  double total = 0.0;
  for (std::int64_t g = 0; g < two_p; ++g) {
    for (std::int64_t a = 0; a < k.k1; ++a) {
      for (std::int64_t b = 0; b < k.k2; ++b) {
        const std::int64_t e = -k.k1 + 2 * a + 1 + q * (-k.k2 + 2 * b + 1);
        const std::int64_t phase = floor_mod(g * floor_mod(e, two_p), two_p);
        total += std::cos(2.0 * std::numbers::pi * static_cast<double>(phase) /
                          static_cast<double>(two_p));
      }
    }
  }
  return total / static_cast<double>(two_p);
}

int spectral_flow_affine(std::int64_t l, std::int64_t p, int direction) {
  if (p < 2 || l <= 0 || l >= p) {
    throw DomainError("spectral flow requires 0 < l < p");
  }
  if (direction != 1 && direction != -1) {
    throw DomainError("spectral flow direction must be +1 or -1");
  }
  // lambda_n(0) = 2 pi n + eps and lambda_n(1) = 2 pi (n - direction l/p) + eps.
  // With eps -> 0+, a value whose 2 pi part is zero counts as positive.
  // |l/p| < 1, so only n in {-1, 0, 1} can change sign.
  int flow = 0;
  for (std::int64_t n = -2; n <= 2; ++n) {
    const bool start_positive = n >= 0;
    const bool end_positive = n * p - direction * l >= 0;
    if (start_positive && !end_positive) --flow;
    if (!start_positive && end_positive) ++flow;
  }
  return flow;
}

}  // namespace lensfloer
