#pragma once

#include <cstdint>
#include <vector>

namespace lensfloer {

/// L(p,q) with p odd, 0 < q < p, gcd(p,q) = 1. The constructor enforces
/// these and caches r = q^{-1} mod p.
class LensSpace {
 public:
  /// Keeps every residue product below 2^63.
  static constexpr std::int64_t kMaxModulus = 2147483647;

  LensSpace(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  /// The positive representative of q^{-1} mod p, in [1, p).
  std::int64_t r() const { return r_; }

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
  std::int64_t r_;
};

/// A bundle parameter for the torus-equivariant bundle P(k1, k2) on S^4.
struct KPair {
  std::int64_t k1;
  std::int64_t k2;

  friend bool operator==(const KPair&, const KPair&) = default;
};

enum class Stabilizer { SU2, U1 };

/// Gauge class of a flat SU(2) connection on L(p,q); holonomy
/// diag(zeta^l, zeta^-l) with l in [0, (p-1)/2]. l = 0 is the trivial
/// connection theta.
struct FlatClass {
  std::int64_t l;
  Stabilizer stabilizer;

  bool is_trivial() const { return stabilizer == Stabilizer::SU2; }
  int stabilizer_dim() const { return is_trivial() ? 3 : 1; }

  friend bool operator==(const FlatClass&, const FlatClass&) = default;
};

FlatClass make_flat_class(std::int64_t l);

/// [theta, rho_1, ..., rho_{(p-1)/2}].
std::vector<FlatClass> enumerate_classes(const LensSpace& space);

/// min(l mod p, p - (l mod p)); rho_l and rho_{p-l} are conjugate.
std::int64_t canonical_label(std::int64_t l, std::int64_t p);

/// The smallest positive (k1, k2) with k1 = l and k2 = -r l (mod p); the
/// bundle whose fixed-point moduli computes the grading of rho_l.
KPair grading_kpair(std::int64_t l, const LensSpace& space);

}  // namespace lensfloer
