#pragma once

/**
 * @file exact_arith.hpp
 * @brief Exact integer, modular and rational primitives.
 *
 * Everything downstream (gradings, Dedekind sums, signature congruences)
 * is exact; no floating point enters a reported value. Floating point is
 * only used by the character oracles in lattice.hpp, which exist to check
 * the exact routes.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace lensfloer {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt value) : num_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  /// Mathematical floor, rounding toward negative infinity.
  BigInt floor() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "num/den", always with the denominator, e.g. "0/1", "-1/18".
  std::string str() const;
  /// Accepts "num/den" or a bare integer.
  static Rational parse(std::string_view text);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Congruence class with 0 <= value < modulus.
class Residue {
 public:
  Residue(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

/// a mod m in [0, m) for m > 0, regardless of the sign of a.
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// floor(a / b) for b > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  const std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

/// Number of integers x in [lo, hi] with x = c (mod m).
constexpr std::int64_t count_congruent(std::int64_t lo, std::int64_t hi,
                                       std::int64_t c, std::int64_t m) {
  if (hi < lo) return 0;
  return floor_div(hi - c, m) - floor_div(lo - 1 - c, m);
}

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// sum_{i=0}^{n-1} floor((a i + b) / m) for n >= 0, m >= 1; O(log m).
std::int64_t floor_sum(std::int64_t n, std::int64_t m, std::int64_t a, std::int64_t b);

/// Inverse of a modulo p. Throws DomainError unless gcd(a, p) = 1 and p >= 1.
Residue mod_inverse(std::int64_t a, std::int64_t p);

/// ((x)): 0 on integers, x - floor(x) - 1/2 otherwise.
Rational sawtooth(const Rational& x);

/// Representation p = a^2 + b^2 with 0 <= a <= b and the smallest such a.
std::optional<std::pair<std::int64_t, std::int64_t>> two_squares(std::int64_t p);

/// Deterministic Miller-Rabin over the full signed 64-bit range.
/// Throws DomainError for negative input.
bool is_prime(std::int64_t n);

}  // namespace lensfloer
