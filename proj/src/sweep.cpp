#include "lensfloer/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cstring>
#include <exception>
#include <fstream>
#include <locale>
#include <sstream>
#include <thread>

#include "lensfloer/errors.hpp"
#include "lensfloer/exact_arith.hpp"
#include "lensfloer/floer_complex.hpp"
#include "lensfloer/invariants.hpp"

namespace lensfloer {

std::vector<std::int64_t> sweep_moduli(std::int64_t p_min, std::int64_t p_max, std::int64_t q) {
  if (q < 1) throw DomainError("q must be positive, got " + std::to_string(q));
  std::vector<std::int64_t> out;
  for (std::int64_t p = std::max<std::int64_t>(p_min, 3); p <= p_max; ++p) {
    if (p % 2 == 1 && p > q && gcd(p, q) == 1) out.push_back(p);
  }
  return out;
}

SweepRow sweep_row(std::int64_t p, std::int64_t q) {
  const FloerComplexData cx = assemble_complex(LensSpace(p, q));
  SweepRow row;
  row.p = p;
  row.q = q;
  row.h = cx.homology;
  row.i_theta_even = p % 8 == 1 && i_theta_parity(p) == 0;
  row.verdict = q == 2 ? to_string(obstruction_report(cx).verdict) : to_string(Verdict::NotApplicable);
  return row;
}

std::vector<SweepRow> run_sweep(std::int64_t p_min, std::int64_t p_max, std::int64_t q,
                                unsigned jobs) {
  const std::vector<std::int64_t> moduli = sweep_moduli(p_min, p_max, q);
  std::vector<SweepRow> rows(moduli.size());
  std::vector<std::exception_ptr> errors(moduli.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < moduli.size(); i = next++) {
      try {
        rows[i] = sweep_row(moduli[i], q);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  const std::size_t n_threads = std::min<std::size_t>(jobs, std::max<std::size_t>(moduli.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << r.p << ',' << r.q << ',' << r.h[0] << ',' << r.h[1] << ',' << r.h[2] << ',' << r.h[3]
        << ',' << (r.i_theta_even ? "true" : "false") << ',' << r.verdict << '\n';
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path + " for writing: " + std::strerror(errno));
  file << text;
  file.flush();
  if (!file) throw IoError("write to " + path + " failed");
}

}  // namespace lensfloer
