#include "lensfloer/gamma_complex.hpp"

#include "lensfloer/errors.hpp"
#include "lensfloer/exact_arith.hpp"

namespace lensfloer {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(floor_mod(i, 4)); }

bool is_iso(const Gf2Matrix& m) { return m.rows() == m.cols() && gf2_rank(m) == m.rows(); }

}  // namespace

std::vector<FlatClass> GammaChainGroup::generators() const {
  std::vector<FlatClass> out(upper);
  out.insert(out.end(), lower.begin(), lower.end());
  if (has_theta) out.push_back(make_flat_class(0));
  return out;
}

void require_prime(const LensSpace& space) {
  if (!is_prime(space.p())) {
    throw DomainError("the gamma complex needs p prime, got p = " + std::to_string(space.p()));
  }
}

GammaChainGroup gamma_chain_group(const FloerComplexData& base, int i) {
  require_prime(base.space);
  GammaChainGroup g;
  g.index = static_cast<int>(idx(i));
  g.upper = base.generators[idx(i)];
  g.lower = base.generators[idx(i - 1)];
  g.has_theta = g.index == 0;
  return g;
}

GammaChainGroup gamma_chain_group(const LensSpace& space, int i) {
  require_prime(space);
  return gamma_chain_group(assemble_complex(space), i);
}

ThetaMaps theta_row_maps(const FloerComplexData& base, bool gamma_nontrivial) {
  require_prime(base.space);
  const auto& cf2 = base.generators[1];
  const auto& cfm4 = base.generators[2];
  ThetaMaps maps{Gf2Matrix(1, cf2.size()), Gf2Matrix(cfm4.size(), 1)};
  if (!gamma_nontrivial) return maps;
  for (std::size_t c = 0; c < cf2.size(); ++c) {
    if (moduli_dirac_parity(cf2[c].l, 0, base.space).value_or(0) == 1) maps.theta_in.set(0, c, true);
  }
  for (std::size_t r = 0; r < cfm4.size(); ++r) {
    if (moduli_dirac_parity(0, cfm4[r].l, base.space).value_or(0) == 1) maps.theta_out.set(r, 0, true);
  }
  return maps;
}

ThetaMaps theta_row_maps(const LensSpace& space, bool gamma_nontrivial) {
  require_prime(space);
  return theta_row_maps(assemble_complex(space), gamma_nontrivial);
}

GammaComplexData build_gamma_complex(const LensSpace& space, bool gamma_nontrivial) {
  require_prime(space);
  GammaComplexData out(assemble_complex(space));
  auto maps = theta_row_maps(out.base, gamma_nontrivial);
  out.theta_in = std::move(maps.theta_in);
  out.theta_out = std::move(maps.theta_out);
  out.gamma_nontrivial = gamma_nontrivial;
  return out;
}

VanishingCertificate vanishing_certificate(const FloerComplexData& base, bool i_theta_even) {
  require_prime(base.space);
  VanishingCertificate cert;
  // boundaries[i] : C_i -> C_{i-1}; CF_0 = C_0, CF_2 = C_1, CF_{-2} = C_3, CF_{-4} = C_2.
  cert.cf0_to_cfm2_iso = is_iso(base.boundaries[0]);
  cert.cf2_to_cf0_zero = base.boundaries[1].is_zero();
  cert.cfm2_to_cfm4_zero = base.boundaries[3].is_zero();
  cert.i_theta_even = i_theta_even;
  if (!cert.cf0_to_cfm2_iso) cert.reasons.emplace_back("d: CF_0 -> CF_-2 is not an isomorphism");
  if (!cert.cf2_to_cf0_zero) cert.reasons.emplace_back("d: CF_2 -> CF_0 is nonzero");
  if (!cert.cfm2_to_cfm4_zero) cert.reasons.emplace_back("d: CF_-2 -> CF_-4 is nonzero");
  if (!cert.i_theta_even) cert.reasons.emplace_back("i_theta is odd, theta coefficient may survive");
  cert.certified = cert.reasons.empty();
  return cert;
}

VanishingCertificate vanishing_certificate(const LensSpace& space, bool i_theta_even) {
  require_prime(space);
  return vanishing_certificate(assemble_complex(space), i_theta_even);
}

}  // namespace lensfloer
