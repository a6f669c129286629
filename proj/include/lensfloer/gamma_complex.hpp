#pragma once

/**
 * @file gamma_complex.hpp
 * @brief The computable part of the gamma-twisted complex C_*(Y; gamma).
 *
 * In degree i the chain group is CF_{2i} + CF_{2i-2}, with an extra theta
 * summand when i = 0. In terms of the base complex CF_{2i} is C_i and
 * CF_{2i-2} is C_{i-1}. Off-diagonal blocks come from the base boundary and
 * from the two theta arrows. The diagonal blocks count zeros of sections
 * over two-dimensional moduli and have no formula here, so they are marked
 * unknown and no homology of this complex is reported.
 */

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lensfloer/floer_complex.hpp"
#include "lensfloer/gf2.hpp"

namespace lensfloer {

struct GammaChainGroup {
  int index = 0;
  /// CF_{2i}, i.e. base C_i.
  std::vector<FlatClass> upper;
  /// CF_{2i-2}, i.e. base C_{i-1}.
  std::vector<FlatClass> lower;
  bool has_theta = false;

  std::size_t size() const { return upper.size() + lower.size() + (has_theta ? 1 : 0); }
  /// upper, then lower, then theta.
  std::vector<FlatClass> generators() const;
};

/// Throws DomainError unless p is prime.
void require_prime(const LensSpace& space);

/// Chain group C_i(Y; gamma) for i in Z/4 (any integer is reduced).
GammaChainGroup gamma_chain_group(const LensSpace& space, int i);
GammaChainGroup gamma_chain_group(const FloerComplexData& base, int i);

struct ThetaMaps {
  /// 1 x |C_1|: CF_2 -> <theta>.
  Gf2Matrix theta_in;
  /// |C_2| x 1: <theta> -> CF_{-4}.
  Gf2Matrix theta_out;
};

ThetaMaps theta_row_maps(const LensSpace& space, bool gamma_nontrivial);
ThetaMaps theta_row_maps(const FloerComplexData& base, bool gamma_nontrivial);

struct GammaComplexData {
  explicit GammaComplexData(FloerComplexData b) : base(std::move(b)) {}

  FloerComplexData base;
  Gf2Matrix theta_in;
  Gf2Matrix theta_out;
  bool gamma_nontrivial = false;
  /// Diagonal blocks per degree; never known.
  std::array<bool, 4> diagonal_known{};
};

GammaComplexData build_gamma_complex(const LensSpace& space, bool gamma_nontrivial);

struct VanishingCertificate {
  bool cf0_to_cfm2_iso = false;
  bool cf2_to_cf0_zero = false;
  bool cfm2_to_cfm4_zero = false;
  bool i_theta_even = false;
  bool certified = false;
  /// One line per failed condition.
  std::vector<std::string> reasons;
};

VanishingCertificate vanishing_certificate(const LensSpace& space, bool i_theta_even);
VanishingCertificate vanishing_certificate(const FloerComplexData& base, bool i_theta_even);

}  // namespace lensfloer
