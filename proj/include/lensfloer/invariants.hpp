#pragma once

/**
 * @file invariants.hpp
 * @brief Casson-Walker sums, signature congruences, the theta Dirac parity
 * and the decomposition obstruction check for L(p,2).
 *
 * The closed form p(p-1)(p-5)/6 and the mod 16 statements are specific to
 * q = 2; casson_walker_sum itself accepts any q.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lensfloer/exact_arith.hpp"
#include "lensfloer/floer_complex.hpp"

namespace lensfloer {

/// sum_{k=1}^{p-1} ((k/p)) ((q k/p)), exact. Uses one integer accumulator
/// over the common denominator 4p^2.
Rational casson_walker_sum(std::int64_t p, std::int64_t q);

/// The same sum term by term in Rational arithmetic. Slow; for checking.
Rational casson_walker_sum_direct(std::int64_t p, std::int64_t q);

/// p(p-1)(p-5)/6 for odd p >= 3.
BigInt signature_closed_form(std::int64_t p);

struct SignatureCheck {
  int residue = 0;  // mod 16
  bool consistent = false;
};

/// 4p^2 casson_walker_sum(p, 2) compared against the closed form. Throws
/// ConsistencyError if it is not an integer or differs.
SignatureCheck signature_mod16_check(std::int64_t p);

struct ThetaParityRoutes {
  int from_n = 0;          // N mod 2
  int from_signature = 0;  // (N - sign/8) mod 2
};

/// Both routes for p = 8N + 1. Throws DomainError otherwise.
ThetaParityRoutes i_theta_parity_routes(std::int64_t p);

/// Parity of i_theta for p = 8N + 1; throws ConsistencyError if the routes
/// disagree.
int i_theta_parity(std::int64_t p);

/// (-delta - 2 alpha^2 - 3 (1 + b^+)) mod 8.
int relative_dim_mod8(Grading delta, std::int64_t alpha_sq, std::int64_t b_plus);

enum class Verdict { TheoremApplies, NotApplicable };

std::string to_string(Verdict v);

struct ObstructionReport {
  std::int64_t p = 0;
  bool prime = false;
  int mod16 = 0;
  bool homology_vanishes = false;
  bool i_theta_even = false;
  bool gamma_certificate = false;
  std::optional<std::pair<std::int64_t, std::int64_t>> two_squares;
  Verdict verdict = Verdict::NotApplicable;
  /// One entry per false gate.
  std::vector<std::string> reasons;
};

/// Runs every gate for L(p, 2) with b^+ = 1 and alpha^2 = p.
ObstructionReport obstruction_report(std::int64_t p);
/// Same, reusing an assembled complex of L(p, 2).
ObstructionReport obstruction_report(const FloerComplexData& base);

}  // namespace lensfloer
