#include "lensfloer/invariants.hpp"

#include "lensfloer/errors.hpp"
#include "lensfloer/flat_classes.hpp"
#include "lensfloer/gamma_complex.hpp"

namespace lensfloer {

namespace {

void require_odd(std::int64_t p) {
  if (p < 3 || p % 2 == 0) throw DomainError("p must be odd and >= 3, got " + std::to_string(p));
}

void require_coprime(std::int64_t p, std::int64_t q) {
  require_odd(p);
  if (gcd(p, q) != 1) {
    throw DomainError("gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
  }
}

constexpr std::int64_t kBPlus = 1;
constexpr std::int64_t kQ = 2;

}  // namespace

Rational casson_walker_sum(std::int64_t p, std::int64_t q) {
  require_coprime(p, q);
  // ((k/p)) = (2k - p) / 2p for 0 < k < p.
  const std::int64_t qr = floor_mod(q, p);
  __int128 total = 0;
  std::int64_t qk = 0;
  for (std::int64_t k = 1; k < p; ++k) {
    qk += qr;
    if (qk >= p) qk -= p;
    total += static_cast<__int128>(2 * k - p) * (2 * qk - p);
  }
  const bool negative = total < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-total)
                                   : static_cast<unsigned __int128>(total);
  BigInt num = static_cast<std::uint64_t>(mag >> 64);
  num <<= 64;
  num += static_cast<std::uint64_t>(mag);
  if (negative) num = -num;
  return Rational(num, BigInt(4) * p * p);
}

Rational casson_walker_sum_direct(std::int64_t p, std::int64_t q) {
  require_coprime(p, q);
  Rational total;
  for (std::int64_t k = 1; k < p; ++k) {
    total += sawtooth(Rational(BigInt(k), BigInt(p))) * sawtooth(Rational(BigInt(q) * k, BigInt(p)));
  }
  return total;
}

BigInt signature_closed_form(std::int64_t p) {
  require_odd(p);
  return BigInt(p) * (p - 1) * (p - 5) / 6;
}

SignatureCheck signature_mod16_check(std::int64_t p) {
  const Rational scaled = Rational(BigInt(4) * p * p) * casson_walker_sum(p, kQ);
  if (!scaled.is_integer()) {
    throw ConsistencyError("4p^2 lambda is not an integer for p = " + std::to_string(p));
  }
  const BigInt closed = signature_closed_form(p);
  if (scaled.num() != closed) {
    throw ConsistencyError("4p^2 lambda = " + scaled.str() + " but p(p-1)(p-5)/6 = " +
                           closed.str() + " for p = " + std::to_string(p));
  }
  BigInt r = closed % 16;
  if (r < 0) r += 16;
  return SignatureCheck{static_cast<int>(r), true};
}

ThetaParityRoutes i_theta_parity_routes(std::int64_t p) {
  require_odd(p);
  if (p % 8 != 1) throw DomainError("i_theta parity needs p = 1 mod 8, got " + std::to_string(p));
  const std::int64_t n = (p - 1) / 8;
  signature_mod16_check(p);
  const Rational sign = Rational(BigInt(4) * p * p) * casson_walker_sum(p, kQ);
  const Rational diff = Rational(n) - sign / Rational(8);
  if (!diff.is_integer()) {
    throw ConsistencyError("N - sign/8 is not an integer for p = " + std::to_string(p));
  }
  BigInt parity = diff.num() % 2;
  if (parity < 0) parity += 2;
  return ThetaParityRoutes{static_cast<int>(n % 2), static_cast<int>(parity)};
}

int i_theta_parity(std::int64_t p) {
  const auto routes = i_theta_parity_routes(p);
  if (routes.from_n != routes.from_signature) {
    throw ConsistencyError("i_theta parity routes disagree for p = " + std::to_string(p));
  }
  return routes.from_n;
}

int relative_dim_mod8(Grading delta, std::int64_t alpha_sq, std::int64_t b_plus) {
  const std::int64_t a = floor_mod(alpha_sq, 8);
  const std::int64_t b = floor_mod(b_plus, 8);
  return static_cast<int>(floor_mod(-delta.value - 2 * a - 3 * (1 + b), 8));
}

std::string to_string(Verdict v) {
  return v == Verdict::TheoremApplies ? "THEOREM_APPLIES" : "NOT_APPLICABLE";
}

ObstructionReport obstruction_report(std::int64_t p) {
  require_odd(p);
  return obstruction_report(assemble_complex(LensSpace(p, kQ)));
}

ObstructionReport obstruction_report(const FloerComplexData& base) {
  const std::int64_t p = base.space.p();
  if (base.space.q() != kQ) throw DomainError("obstruction report is defined for q = 2 only");
  ObstructionReport rep;
  rep.p = p;
  rep.prime = is_prime(p);
  rep.mod16 = static_cast<int>(p % 16);
  rep.homology_vanishes = base.homology_vanishes();

  if (p % 8 == 1) rep.i_theta_even = i_theta_parity(p) == 0;

  if (rep.prime) rep.gamma_certificate = vanishing_certificate(base, rep.i_theta_even).certified;

  // alpha^2 = p, b^+ = 1: the relative dimension is -delta mod 8 once p = 1 mod 16.
  if (rep.mod16 == 1) {
    for (std::size_t l = 1; l < base.gradings.size(); ++l) {
      const Grading g = base.gradings[l];
      if (relative_dim_mod8(g, p, kBPlus) != floor_mod(-g.value, 8)) {
        throw ConsistencyError("relative dimension mismatch at l = " + std::to_string(l));
      }
    }
  }
  rep.two_squares = two_squares(p);

  if (!rep.prime) rep.reasons.push_back(std::to_string(p) + " is not prime");
  if (rep.mod16 != 1) {
    rep.reasons.push_back("p = " + std::to_string(rep.mod16) + " mod 16, not 1");
  }
  if (!rep.homology_vanishes) rep.reasons.emplace_back("I_*(L(p,2)) does not vanish");
  if (!rep.i_theta_even) {
    rep.reasons.emplace_back(p % 8 == 1 ? "i_theta is odd" : "i_theta parity needs p = 1 mod 8");
  }
  if (!rep.gamma_certificate) {
    rep.reasons.emplace_back(rep.prime ? "gamma complex vanishing certificate fails"
                                       : "gamma complex needs p prime");
  }
  rep.verdict = rep.reasons.empty() ? Verdict::TheoremApplies : Verdict::NotApplicable;
  return rep;
}

}  // namespace lensfloer
