#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lensfloer {

/// Dense GF(2) matrix, row-major, 64 columns per word.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  /// One string of '0'/'1' per row; all rows must have equal length.
  static Gf2Matrix from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value);

  bool is_zero() const;
  /// Number of set entries.
  std::size_t weight() const;

  /// Product over GF(2); throws DomainError on a shape mismatch.
  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

  std::vector<std::string> to_rows() const;

 private:
  friend std::size_t gf2_rank(Gf2Matrix m);

  void xor_row_into(std::size_t src, std::size_t dst);
  const std::uint64_t* row_ptr(std::size_t r) const { return bits_.data() + r * words_; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Rank over GF(2) by Gaussian elimination.
std::size_t gf2_rank(Gf2Matrix m);

}  // namespace lensfloer
