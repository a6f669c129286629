#pragma once

/**
 * @file floer_complex.hpp
 * @brief The Z/4-graded GF(2) Floer chain complex of L(p,q), p odd.
 *
 * Generators are the U(1)-stabilized flat classes rho_l, l = 1..(p-1)/2.
 * Each has an even grading delta(l) in Z/8 and sits in C_i with
 * i = delta/2 mod 4. The boundary C_i -> C_{i-1} has entry 1 for (l, m)
 * when the one-dimensional moduli space between them is nonempty and the
 * twisted Dirac index on it is odd.
 *
 * The moduli space is nonempty exactly when some (k1, k2) in [1, p-1]^2
 * with
 *     k1 = s_l l + s_m m,   k2 = r (s_m m - s_l l)   (mod p),  s_l, s_m = +-1
 * is minimal (see lattice.hpp). Larger representatives never qualify:
 * k1 >= p puts (p, 0) in the box, k2 >= p puts (0, p) there.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lensfloer/flat_classes.hpp"
#include "lensfloer/gf2.hpp"
#include "lensfloer/lattice.hpp"

namespace lensfloer {

/// Residue mod 8.
struct Grading {
  int value = 0;

  friend bool operator==(const Grading&, const Grading&) = default;
};

Grading make_grading(std::int64_t value);

/// 2 n1 + n2 (mod 8) for an arbitrary positive k-pair. Lifting either
/// entry by a multiple of p does not change the value.
Grading kpair_grading(const KPair& k, const LensSpace& space);

/// delta(rho_l) = 2 n1 + n2 (mod 8) on the grading k-pair of l.
Grading delta(std::int64_t l, const LensSpace& space);
Grading delta_theta(const LensSpace& space);
/// Grading of rho_l on -L(p,q): -delta - 2 (mod 8).
Grading delta_reverse(std::int64_t l, const LensSpace& space);

/// dim M_{ab} mod 8 = delta(a) - delta(b) - dim Stab(a). Throws on a == b.
int formal_dim_mod8(const FlatClass& a, const FlatClass& b, const LensSpace& space);

struct BoundaryCandidate {
  int sign_l = 1;
  int sign_m = 1;
  KPair k{};
  bool minimal = false;
  /// dirac_count(k); only filled for minimal candidates.
  std::optional<std::int64_t> dirac;
};

/// The up-to-four sign choices for the pair (l, m), residues that vanish
/// mod p dropped and duplicates (from l = 0 or m = 0) merged.
std::vector<BoundaryCandidate> boundary_candidates(std::int64_t l, std::int64_t m,
                                                   const LensSpace& space);

/// Dirac parity on the one-dimensional moduli space from rho_l to rho_m,
/// or nullopt if it is empty. l or m may be 0 (theta). Throws
/// ConsistencyError if two minimal candidates disagree on parity.
std::optional<int> moduli_dirac_parity(std::int64_t l, std::int64_t m, const LensSpace& space);

struct BoundaryElement {
  int value = 0;
  std::vector<BoundaryCandidate> candidates;
  /// First minimal candidate, if any, with its full lattice data.
  std::optional<KPair> chosen;
  std::optional<LatticeCounts> chosen_counts;
  std::vector<LatticePoint> dirac_witnesses;
};

/// <d rho_l, rho_m> with evidence. Requires l, m in [1, (p-1)/2] and
/// delta(l) - delta(m) = 2 (mod 8).
BoundaryElement boundary_element(std::int64_t l, std::int64_t m, const LensSpace& space);

struct FloerComplexData {
  explicit FloerComplexData(const LensSpace& s) : space(s) {}

  LensSpace space;
  /// gradings[l] for l = 0..(p-1)/2; gradings[0] is theta.
  std::vector<Grading> gradings;
  /// generators[i] spans C_i, in increasing l.
  std::array<std::vector<FlatClass>, 4> generators;
  /// boundaries[i] : C_i -> C_{i-1}. Rows follow generators[i-1], columns
  /// follow generators[i].
  std::array<Gf2Matrix, 4> boundaries;
  std::array<std::size_t, 4> homology{};
  /// slots[l] = position of rho_l inside generators[degree_of(l)].
  std::vector<std::size_t> slots;

  static constexpr int prev(int i) { return (i + 3) % 4; }
  static constexpr int next(int i) { return (i + 1) % 4; }

  /// C_i index of rho_l.
  int degree_of(std::int64_t l) const;
  /// Position of rho_l inside generators[degree_of(l)].
  std::size_t position_of(std::int64_t l) const;
  bool homology_vanishes() const;
};

enum class BoundaryRoute {
  /// Enumerate every minimal (k1, k2) with k1 k2 <= p once and map it back to
  /// its (l, m). O(p log p) candidates.
  KPairSweep,
  /// Call the per-pair recipe on every grading-adjacent (l, m).
  Pairwise,
};

/// Builds gradings, boundaries and homology. Throws ConsistencyError if
/// d o d != 0 or candidate parities disagree.
FloerComplexData assemble_complex(const LensSpace& space,
                                  BoundaryRoute route = BoundaryRoute::KPairSweep);

}  // namespace lensfloer
