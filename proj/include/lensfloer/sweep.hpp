#pragma once

/// Parallel sweep of L(p, q) over a range of p with ordered CSV output.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lensfloer {

struct SweepRow {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::array<std::size_t, 4> h{};
  bool i_theta_even = false;
  std::string verdict;
};

inline constexpr const char* kSweepHeader = "p,q,h0,h1,h2,h3,i_theta_even,verdict";

/// Odd p in [p_min, p_max] with p > q and gcd(p, q) = 1, ascending.
std::vector<std::int64_t> sweep_moduli(std::int64_t p_min, std::int64_t p_max, std::int64_t q);

SweepRow sweep_row(std::int64_t p, std::int64_t q);

/// jobs = 0 means one worker per hardware thread. The result does not
/// depend on jobs. The first failing p (in ascending order) rethrows.
std::vector<SweepRow> run_sweep(std::int64_t p_min, std::int64_t p_max, std::int64_t q,
                                unsigned jobs);

/// Header line plus one line per row, each terminated by '\n'.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Throws IoError if the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lensfloer
