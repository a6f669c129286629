#include "lensfloer/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <sstream>

#include "CLI11.hpp"
#include "lensfloer/errors.hpp"
#include "lensfloer/flat_classes.hpp"
#include "lensfloer/floer_complex.hpp"
#include "lensfloer/invariants.hpp"
#include "lensfloer/lattice.hpp"
#include "lensfloer/serialize.hpp"
#include "lensfloer/sweep.hpp"

namespace lensfloer {

namespace {

constexpr std::int64_t kDefaultMaxP = 1000000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_cap(std::int64_t p) {
  const std::int64_t cap = max_modulus();
  if (p > cap) {
    throw DomainError("p = " + std::to_string(p) + " exceeds LENSFLOER_MAX_P = " + std::to_string(cap));
  }
}

LensSpace make_space(std::int64_t p, std::int64_t q) {
  check_cap(p);
  return LensSpace(p, q);
}

std::string join_points(const std::vector<LatticePoint>& pts) {
  std::string s;
  for (const auto& [a, b] : pts) {
    if (!s.empty()) s += ' ';
    s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return s.empty() ? "-" : s;
}

void print_counts(std::ostream& out, const KPair& k, const LatticeCounts& c) {
  out << "k = (" << k.k1 << "," << k.k2 << ")\n";
  out << "N1 = " << c.n1 << ", N2 = " << c.n2 << ", minimal = " << (c.minimal ? "yes" : "no") << '\n';
  out << "solutions: " << join_points(c.solutions) << '\n';
}

void render_complex_text(std::ostream& out, const FloerComplexData& cx) {
  out << "L(" << cx.space.p() << "," << cx.space.q() << ")\n";
  out << "l     delta\n";
  for (std::size_t l = 0; l < cx.gradings.size(); ++l) {
    out << (l == 0 ? std::string("theta") : std::to_string(l)) << std::string(l == 0 ? 1 : 6 - std::to_string(l).size(), ' ')
        << cx.gradings[l].value << '\n';
  }
  for (std::size_t i = 0; i < 4; ++i) {
    out << "C_" << i << ":";
    for (const auto& g : cx.generators[i]) out << " rho_" << g.l;
    if (cx.generators[i].empty()) out << " 0";
    out << '\n';
  }
  for (std::size_t i = 0; i < 4; ++i) {
    out << "d_" << i << ": C_" << i << " -> C_" << FloerComplexData::prev(static_cast<int>(i)) << '\n';
    for (const auto& row : cx.boundaries[i].to_rows()) out << "  " << row << '\n';
  }
  out << "I = (" << cx.homology[0] << "," << cx.homology[1] << "," << cx.homology[2] << ","
      << cx.homology[3] << ")\n";
}

void render_report_text(std::ostream& out, const ObstructionReport& r) {
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "p = " << r.p << '\n';
  out << "prime: " << yn(r.prime) << '\n';
  out << "p mod 16: " << r.mod16 << '\n';
  out << "homology vanishes: " << yn(r.homology_vanishes) << '\n';
  out << "i_theta even: " << yn(r.i_theta_even) << '\n';
  out << "gamma certificate: " << yn(r.gamma_certificate) << '\n';
  out << "two squares: ";
  if (r.two_squares) {
    out << r.two_squares->first << "^2 + " << r.two_squares->second << "^2\n";
  } else {
    out << "none\n";
  }
  out << "verdict: " << to_string(r.verdict) << '\n';
  for (const auto& reason : r.reasons) out << "  - " << reason << '\n';
}

}  // namespace

std::int64_t max_modulus() {
  const char* env = std::getenv("LENSFLOER_MAX_P");
  if (env == nullptr || *env == '\0') return kDefaultMaxP;
  std::int64_t value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value < 3) {
    throw UsageError(std::string("LENSFLOER_MAX_P must be an integer >= 3, got '") + env + "'");
  }
  return value;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Instanton Floer chain complexes of lens spaces"};
  app.name("lensfloer");
  app.require_subcommand(1);

  std::int64_t p = 0;
  std::int64_t q = 2;
  std::int64_t l = 0;
  std::int64_t m = 0;
  std::string format = "text";
  bool evidence = false;
  bool json = false;
  std::int64_t p_min = 0;
  std::int64_t p_max = 0;
  std::string out_path;
  unsigned jobs = 1;

  auto* complex = app.add_subcommand("complex", "Assemble the chain complex and its homology");
  complex->add_option("--p", p, "Odd modulus")->required();
  complex->add_option("--q", q, "Second lens parameter")->required();
  complex->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* delta_cmd = app.add_subcommand("delta", "Mod 8 grading of rho_l");
  delta_cmd->add_option("--p", p)->required();
  delta_cmd->add_option("--q", q)->required();
  delta_cmd->add_option("--l", l)->required();
  delta_cmd->add_flag("--evidence", evidence, "Print the k-pair and lattice solutions");

  auto* boundary = app.add_subcommand("boundary", "Boundary coefficient <d rho_l, rho_m>");
  boundary->add_option("--p", p)->required();
  boundary->add_option("--q", q)->required();
  boundary->add_option("--l", l)->required();
  boundary->add_option("--m", m)->required();
  boundary->add_flag("--evidence", evidence, "Print candidates, lattice data and Dirac witnesses");

  auto* obstruct = app.add_subcommand("obstruct", "Decomposition obstruction for L(p,2)");
  obstruct->add_option("--p", p)->required();
  obstruct->add_flag("--json", json);

  auto* sweep = app.add_subcommand("sweep", "CSV sweep over a range of p");
  sweep->add_option("--p-min", p_min)->required();
  sweep->add_option("--p-max", p_max)->required();
  sweep->add_option("--q", q);
  sweep->add_option("--out", out_path)->required();
  sweep->add_option("--jobs", jobs, "Worker threads, 0 for all cores");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (complex->parsed()) {
      const FloerComplexData cx = assemble_complex(make_space(p, q));
      if (format == "json") {
        out << to_json(cx).dump() << '\n';
      } else {
        render_complex_text(out, cx);
      }
    } else if (delta_cmd->parsed()) {
      const LensSpace space = make_space(p, q);
      out << delta(l, space).value << '\n';
      if (evidence) {
        const KPair k = grading_kpair(l, space);
        print_counts(out, k, count_lattice(k, space));
      }
    } else if (boundary->parsed()) {
      const LensSpace space = make_space(p, q);
      const BoundaryElement b = boundary_element(l, m, space);
      out << b.value << '\n';
      if (evidence) {
        for (const auto& c : b.candidates) {
          out << "candidate s_l = " << c.sign_l << ", s_m = " << c.sign_m << ": (" << c.k.k1 << ","
              << c.k.k2 << ") " << (c.minimal ? "minimal" : "not minimal");
          if (c.dirac) out << ", dirac_count = " << *c.dirac;
          out << '\n';
        }
        if (b.chosen) {
          print_counts(out, *b.chosen, *b.chosen_counts);
          out << "dirac witnesses (a,b): " << join_points(b.dirac_witnesses) << '\n';
        } else {
          out << "no minimal candidate\n";
        }
      }
    } else if (obstruct->parsed()) {
      check_cap(p);
      const ObstructionReport rep = obstruction_report(p);
      if (json) {
        out << to_json(rep).dump() << '\n';
      } else {
        render_report_text(out, rep);
      }
    } else if (sweep->parsed()) {
      if (p_min <= p_max) check_cap(p_max);
      write_text_file(out_path, sweep_csv(run_sweep(p_min, p_max, q, jobs)));
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace lensfloer
