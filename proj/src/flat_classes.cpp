#include "lensfloer/flat_classes.hpp"

#include <string>

#include "lensfloer/errors.hpp"
#include "lensfloer/exact_arith.hpp"

namespace lensfloer {

LensSpace::LensSpace(std::int64_t p, std::int64_t q) : p_(p), q_(q), r_(0) {
  if (p < 3 || p % 2 == 0) {
    throw DomainError("L(p,q) requires odd p >= 3, got p = " + std::to_string(p));
  }
  if (p > kMaxModulus) {
    throw DomainError("p = " + std::to_string(p) + " exceeds the supported range");
  }
  if (q <= 0 || q >= p) {
    throw DomainError("L(p,q) requires 0 < q < p, got q = " + std::to_string(q));
  }
  if (gcd(p, q) != 1) {
    throw DomainError("L(p,q) requires gcd(p,q) = 1, got gcd(" + std::to_string(p) + "," +
                      std::to_string(q) + ") = " + std::to_string(gcd(p, q)));
  }
  r_ = mod_inverse(q, p).value();
}

FlatClass make_flat_class(std::int64_t l) {
  if (l < 0) throw DomainError("flat class label must be non-negative");
  return FlatClass{l, l == 0 ? Stabilizer::SU2 : Stabilizer::U1};
}

std::vector<FlatClass> enumerate_classes(const LensSpace& space) {
  std::vector<FlatClass> classes;
  const std::int64_t top = (space.p() - 1) / 2;
  classes.reserve(static_cast<std::size_t>(top + 1));
  for (std::int64_t l = 0; l <= top; ++l) classes.push_back(make_flat_class(l));
  return classes;
}

std::int64_t canonical_label(std::int64_t l, std::int64_t p) {
  if (p < 1 || p % 2 == 0) throw DomainError("canonical_label requires odd p");
  const std::int64_t v = floor_mod(l, p);
  return v <= p - v ? v : p - v;
}

KPair grading_kpair(std::int64_t l, const LensSpace& space) {
  const std::int64_t p = space.p();
  if (floor_mod(l, p) == 0) throw DomainError("grading_kpair is undefined for theta");
  const std::int64_t k1 = floor_mod(l, p);
  const std::int64_t k2 = floor_mod(-space.r() * floor_mod(l, p), p);
  return KPair{k1, k2};
}

}  // namespace lensfloer
