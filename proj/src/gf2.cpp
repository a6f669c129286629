#include "lensfloer/gf2.hpp"

#include <bit>
#include <utility>

#include "lensfloer/errors.hpp"

namespace lensfloer {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged GF(2) matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw DomainError("GF(2) rows must contain only 0 and 1");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  std::uint64_t& word = bits_[r * words_ + c / 64];
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  word = value ? (word | mask) : (word & ~mask);
}

bool Gf2Matrix::is_zero() const {
  for (const auto w : bits_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t Gf2Matrix::weight() const {
  std::size_t total = 0;
  for (const auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void Gf2Matrix::xor_row_into(std::size_t src, std::size_t dst) {
  std::uint64_t* d = bits_.data() + dst * words_;
  const std::uint64_t* s = row_ptr(src);
  for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("GF(2) product shape mismatch");
  Gf2Matrix out(a.rows_, b.cols_);
  // Row r of the product is the XOR of the rows of b selected by row r of a.
  // Boundary matrices are sparse, so walk set bits only.
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::uint64_t* dst = out.bits_.data() + r * out.words_;
    const std::uint64_t* arow = a.row_ptr(r);
    for (std::size_t w = 0; w < a.words_; ++w) {
      std::uint64_t word = arow[w];
      while (word != 0) {
        const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        const std::uint64_t* src = b.row_ptr(k);
        for (std::size_t v = 0; v < out.words_; ++v) dst[v] ^= src[v];
      }
    }
  }
  return out;
}

std::vector<std::string> Gf2Matrix::to_rows() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) out[r][c] = '1';
    }
  }
  return out;
}

std::size_t gf2_rank(Gf2Matrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols_ && rank < m.rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows_ && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows_) continue;
    if (pivot != rank) {
      for (std::size_t w = 0; w < m.words_; ++w) {
        std::swap(m.bits_[pivot * m.words_ + w], m.bits_[rank * m.words_ + w]);
      }
    }
    for (std::size_t r = rank + 1; r < m.rows_; ++r) {
      if (m.get(r, c)) m.xor_row_into(rank, r);
    }
    ++rank;
  }
  return rank;
}

}  // namespace lensfloer
