#include "lensfloer/exact_arith.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "lensfloer/errors.hpp"

namespace lensfloer {

namespace {

using U64 = std::uint64_t;
using U128 = unsigned __int128;

U64 mul_mod(U64 a, U64 b, U64 m) { return static_cast<U64>(static_cast<U128>(a) * b % m); }

U64 pow_mod(U64 base, U64 exp, U64 m) {
  U64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

BigInt Rational::floor() const {
  BigInt q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw DomainError("rational division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

Rational Rational::parse(std::string_view text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
    return Rational(BigInt(std::string(text.substr(0, slash))),
                    BigInt(std::string(text.substr(slash + 1))));
  } catch (const std::runtime_error&) {
    throw DomainError("malformed rational: " + std::string(text));
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Residue::Residue(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
  if (modulus <= 0) throw DomainError("residue modulus must be positive");
  value_ = floor_mod(value, modulus);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t floor_sum(std::int64_t n, std::int64_t m, std::int64_t a, std::int64_t b) {
  if (n < 0 || m < 1) throw DomainError("floor_sum requires n >= 0 and m >= 1");
  __int128 total = 0;
  const __int128 pairs = static_cast<__int128>(n) * (n - 1) / 2;
  total += pairs * floor_div(a, m) + static_cast<__int128>(n) * floor_div(b, m);
  // Euclid-like reduction with a, b in [0, m).
  U128 un = static_cast<U128>(n);
  U128 um = static_cast<U128>(m);
  U128 ua = static_cast<U128>(floor_mod(a, m));
  U128 ub = static_cast<U128>(floor_mod(b, m));
  while (true) {
    if (ua >= um) {
      total += static_cast<__int128>(un * (un - 1) / 2 * (ua / um));
      ua %= um;
    }
    if (ub >= um) {
      total += static_cast<__int128>(un * (ub / um));
      ub %= um;
    }
    const U128 y_max = ua * un + ub;
    if (y_max < um) break;
    un = y_max / um;
    ub = y_max % um;
    std::swap(um, ua);
  }
  return static_cast<std::int64_t>(total);
}

Residue mod_inverse(std::int64_t a, std::int64_t p) {
  if (p < 1) throw DomainError("mod_inverse: modulus must be positive");
  // Extended Euclid on (a mod p, p), tracking only the coefficient of a.
  std::int64_t old_r = floor_mod(a, p), r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1 && p != 1) {
    throw DomainError("mod_inverse: " + std::to_string(a) + " is not invertible mod " +
                      std::to_string(p));
  }
  return Residue(old_s, p);
}

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational{};
  return x - Rational(x.floor()) - Rational(1, 2);
}

std::optional<std::pair<std::int64_t, std::int64_t>> two_squares(std::int64_t p) {
  if (p < 1) throw DomainError("two_squares: p must be positive");
  for (std::int64_t a = 0; 2 * a * a <= p; ++a) {
    const std::int64_t rest = p - a * a;
    auto b = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
    while (b * b > rest) --b;
    while ((b + 1) * (b + 1) <= rest) ++b;
    if (b * b == rest) return std::pair{a, b};
  }
  return std::nullopt;
}

bool is_prime(std::int64_t n) {
  if (n < 0) throw DomainError("is_prime: negative input");
  if (n < 2) return false;
  constexpr std::array<U64, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  const auto m = static_cast<U64>(n);
  for (const U64 w : kWitnesses) {
    if (m % w == 0) return m == w;
  }
  U64 d = m - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These twelve bases are deterministic below 3.3e24.
  for (const U64 w : kWitnesses) {
    U64 x = pow_mod(w, d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace lensfloer
