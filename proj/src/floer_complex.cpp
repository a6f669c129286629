#include "lensfloer/floer_complex.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "lensfloer/errors.hpp"
#include "lensfloer/exact_arith.hpp"

namespace lensfloer {

namespace {

std::int64_t top_label(const LensSpace& space) { return (space.p() - 1) / 2; }

void check_generator(std::int64_t l, const LensSpace& space, const char* what) {
  if (l < 1 || l > top_label(space)) {
    throw DomainError(std::string(what) + " = " + std::to_string(l) + " is not a U(1) label in [1, " +
                      std::to_string(top_label(space)) + "]");
  }
}

[[noreturn]] void parity_clash(std::int64_t l, std::int64_t m, const LensSpace& space) {
  throw ConsistencyError("minimal k-pairs for (l,m) = (" + std::to_string(l) + "," +
                         std::to_string(m) + ") on L(" + std::to_string(space.p()) + "," +
                         std::to_string(space.q()) + ") disagree on Dirac parity");
}

}  // namespace

Grading make_grading(std::int64_t value) { return Grading{static_cast<int>(floor_mod(value, 8))}; }

Grading kpair_grading(const KPair& k, const LensSpace& space) {
  const auto [n1, n2] = lattice_counts(k, space);
  return make_grading(2 * n1 + n2);
}

Grading delta(std::int64_t l, const LensSpace& space) {
  check_generator(l, space, "l");
  return kpair_grading(grading_kpair(l, space), space);
}

Grading delta_theta(const LensSpace& /*space*/) { return Grading{0}; }

Grading delta_reverse(std::int64_t l, const LensSpace& space) {
  return make_grading(-delta(l, space).value - 2);
}

int formal_dim_mod8(const FlatClass& a, const FlatClass& b, const LensSpace& space) {
  if (a.l == b.l) throw DomainError("formal dimension needs two different flat classes");
  const auto grading = [&](const FlatClass& c) {
    return c.is_trivial() ? delta_theta(space).value : delta(c.l, space).value;
  };
  return static_cast<int>(floor_mod(grading(a) - grading(b) - a.stabilizer_dim(), 8));
}

std::vector<BoundaryCandidate> boundary_candidates(std::int64_t l, std::int64_t m,
                                                   const LensSpace& space) {
  const std::int64_t p = space.p();
  std::vector<BoundaryCandidate> out;
  for (const int sl : {1, -1}) {
    for (const int sm : {1, -1}) {
      const std::int64_t k1 = floor_mod(sl * l + sm * m, p);
      const std::int64_t k2 = floor_mod(space.r() * floor_mod(sm * m - sl * l, p), p);
      if (k1 == 0 || k2 == 0) continue;
      const KPair k{k1, k2};
      const bool seen = std::any_of(out.begin(), out.end(),
                                    [&](const BoundaryCandidate& c) { return c.k == k; });
      if (seen) continue;
      BoundaryCandidate cand{sl, sm, k, is_minimal(k, space), std::nullopt};
      if (cand.minimal) cand.dirac = dirac_count(k, space);
      out.push_back(cand);
    }
  }
  return out;
}

std::optional<int> moduli_dirac_parity(std::int64_t l, std::int64_t m, const LensSpace& space) {
  std::optional<int> parity;
  for (const auto& cand : boundary_candidates(l, m, space)) {
    if (!cand.minimal) continue;
    const int bit = static_cast<int>(*cand.dirac % 2);
    if (parity && *parity != bit) parity_clash(l, m, space);
    parity = bit;
  }
  return parity;
}

BoundaryElement boundary_element(std::int64_t l, std::int64_t m, const LensSpace& space) {
  check_generator(l, space, "l");
  check_generator(m, space, "m");
  const int gap = delta(l, space).value - delta(m, space).value;
  if (floor_mod(gap, 8) != 2) {
    throw DomainError("boundary needs delta(l) - delta(m) = 2 mod 8, got " +
                      std::to_string(floor_mod(gap, 8)));
  }
  BoundaryElement out;
  out.candidates = boundary_candidates(l, m, space);
  std::optional<int> parity;
  for (const auto& cand : out.candidates) {
    if (!cand.minimal) continue;
    const int bit = static_cast<int>(*cand.dirac % 2);
    if (parity && *parity != bit) parity_clash(l, m, space);
    parity = bit;
    if (!out.chosen) {
      out.chosen = cand.k;
      out.chosen_counts = count_lattice(cand.k, space);
      out.dirac_witnesses = dirac_witnesses(cand.k, space);
    }
  }
  out.value = parity.value_or(0);
  return out;
}

int FloerComplexData::degree_of(std::int64_t l) const {
  return gradings.at(static_cast<std::size_t>(l)).value / 2 % 4;
}

std::size_t FloerComplexData::position_of(std::int64_t l) const {
  return slots.at(static_cast<std::size_t>(l));
}

bool FloerComplexData::homology_vanishes() const {
  return std::all_of(homology.begin(), homology.end(), [](std::size_t h) { return h == 0; });
}

namespace {

void fill_pairwise(FloerComplexData& cx) {
  for (int i = 0; i < 4; ++i) {
    const int j = FloerComplexData::prev(i);
    auto& matrix = cx.boundaries[static_cast<std::size_t>(i)];
    const auto& sources = cx.generators[static_cast<std::size_t>(i)];
    const auto& targets = cx.generators[static_cast<std::size_t>(j)];
    for (std::size_t c = 0; c < sources.size(); ++c) {
      for (std::size_t r = 0; r < targets.size(); ++r) {
        if (moduli_dirac_parity(sources[c].l, targets[r].l, cx.space).value_or(0) == 1) {
          matrix.set(r, c, true);
        }
      }
    }
  }
}

void fill_kpair_sweep(FloerComplexData& cx) {
  const LensSpace& space = cx.space;
  const std::int64_t p = space.p();
  const std::int64_t half = (p + 1) / 2;  // inverse of 2 mod p
  std::map<std::pair<std::int64_t, std::int64_t>, int> parity;
  for (std::int64_t k1 = 1; k1 < p; ++k1) {
    const std::int64_t k2_max = std::min(p - 1, p / k1);
    for (std::int64_t k2 = 1; k2 <= k2_max; ++k2) {
      const KPair k{k1, k2};
      if (!is_minimal(k, space)) continue;
      // s_l l = (k1 - q k2)/2 and s_m m = (k1 + q k2)/2 (mod p).
      const std::int64_t qk2 = floor_mod(space.q() * k2, p);
      const std::int64_t src = floor_mod(floor_mod(k1 - qk2, p) * half, p);
      const std::int64_t dst = floor_mod(floor_mod(k1 + qk2, p) * half, p);
      if (src == 0 || dst == 0) continue;  // a theta end
      const std::int64_t l = canonical_label(src, p);
      const std::int64_t m = canonical_label(dst, p);
      if (floor_mod(cx.gradings[l].value - cx.gradings[m].value, 8) != 2) continue;
      const int bit = static_cast<int>(dirac_count(k, space) % 2);
      const auto [it, inserted] = parity.emplace(std::pair{l, m}, bit);
      if (!inserted && it->second != bit) parity_clash(l, m, space);
    }
  }
  for (const auto& [lm, bit] : parity) {
    if (bit == 0) continue;
    const auto [l, m] = lm;
    cx.boundaries[static_cast<std::size_t>(cx.degree_of(l))].set(cx.position_of(m),
                                                                 cx.position_of(l), true);
  }
}

}  // namespace

FloerComplexData assemble_complex(const LensSpace& space, BoundaryRoute route) {
  FloerComplexData cx(space);
  const std::int64_t top = top_label(space);
  cx.gradings.resize(static_cast<std::size_t>(top + 1));
  cx.slots.resize(static_cast<std::size_t>(top + 1), 0);
  cx.gradings[0] = delta_theta(space);
  for (std::int64_t l = 1; l <= top; ++l) {
    const Grading g = delta(l, space);
    if (g.value % 2 != 0) {
      throw ConsistencyError("odd grading " + std::to_string(g.value) + " for l = " +
                             std::to_string(l) + " with p odd");
    }
    cx.gradings[static_cast<std::size_t>(l)] = g;
    auto& bucket = cx.generators[static_cast<std::size_t>(cx.degree_of(l))];
    cx.slots[static_cast<std::size_t>(l)] = bucket.size();
    bucket.push_back(make_flat_class(l));
  }
  for (int i = 0; i < 4; ++i) {
    cx.boundaries[static_cast<std::size_t>(i)] =
        Gf2Matrix(cx.generators[static_cast<std::size_t>(FloerComplexData::prev(i))].size(),
                  cx.generators[static_cast<std::size_t>(i)].size());
  }

  if (route == BoundaryRoute::Pairwise) {
    fill_pairwise(cx);
  } else {
    fill_kpair_sweep(cx);
  }

  std::array<std::size_t, 4> ranks{};
  for (int i = 0; i < 4; ++i) {
    const auto& d_i = cx.boundaries[static_cast<std::size_t>(i)];
    const auto& d_prev = cx.boundaries[static_cast<std::size_t>(FloerComplexData::prev(i))];
    if (!(d_prev * d_i).is_zero()) {
      throw ConsistencyError("d o d != 0 on C_" + std::to_string(i) + " of L(" +
                             std::to_string(space.p()) + "," + std::to_string(space.q()) + ")");
    }
    ranks[static_cast<std::size_t>(i)] = gf2_rank(d_i);
  }
  for (int i = 0; i < 4; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    cx.homology[idx] = cx.generators[idx].size() - ranks[idx] -
                       ranks[static_cast<std::size_t>(FloerComplexData::next(i))];
  }
  return cx;
}

}  // namespace lensfloer
