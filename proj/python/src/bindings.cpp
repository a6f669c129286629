#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lensfloer/cli.hpp"
#include "lensfloer/errors.hpp"
#include "lensfloer/serialize.hpp"

namespace py = pybind11;
namespace lf = lensfloer;

namespace {

// JSON crosses the boundary as text; the Python side decodes it.
std::string dump(const lf::Json& j) { return j.dump(); }

lf::KPair kpair(std::int64_t k1, std::int64_t k2) { return lf::KPair{k1, k2}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Compiled core of lensfloer";

  py::register_exception<lf::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<lf::ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception<lf::IoError>(m, "IoError", PyExc_OSError);

  m.def("mod_inverse", [](std::int64_t a, std::int64_t p) { return lf::mod_inverse(a, p).value(); });
  m.def("is_prime", &lf::is_prime);
  m.def("two_squares", &lf::two_squares);
  m.def("sawtooth", [](const std::string& x) { return lf::sawtooth(lf::Rational::parse(x)).str(); });

  m.def("grading_kpair", [](std::int64_t l, std::int64_t p, std::int64_t q) {
    const auto k = lf::grading_kpair(l, lf::LensSpace(p, q));
    return std::pair{k.k1, k.k2};
  });
  m.def("count_lattice", [](std::int64_t k1, std::int64_t k2, std::int64_t p, std::int64_t q) {
    return dump(lf::to_json(lf::count_lattice(kpair(k1, k2), lf::LensSpace(p, q))));
  });
  m.def("fixed_dim", [](std::int64_t k1, std::int64_t k2, std::int64_t p, std::int64_t q) {
    return lf::fixed_dim(kpair(k1, k2), lf::LensSpace(p, q));
  });
  m.def("character_dim_oracle", [](std::int64_t k1, std::int64_t k2, std::int64_t p, std::int64_t q) {
    return lf::character_dim_oracle(kpair(k1, k2), lf::LensSpace(p, q));
  });
  m.def("dirac_count", [](std::int64_t k1, std::int64_t k2, std::int64_t p, std::int64_t q) {
    return lf::dirac_count(kpair(k1, k2), lf::LensSpace(p, q));
  });
  m.def("dirac_count_oracle", [](std::int64_t k1, std::int64_t k2, std::int64_t p, std::int64_t q) {
    return lf::dirac_count_oracle(kpair(k1, k2), lf::LensSpace(p, q));
  });
  m.def("spectral_flow_affine", &lf::spectral_flow_affine);

  m.def("delta", [](std::int64_t l, std::int64_t p, std::int64_t q) {
    return lf::delta(l, lf::LensSpace(p, q)).value;
  });
  m.def("boundary_element", [](std::int64_t l, std::int64_t m_, std::int64_t p, std::int64_t q) {
    return dump(lf::to_json(lf::boundary_element(l, m_, lf::LensSpace(p, q))));
  });
  m.def(
      "assemble_complex",
      [](std::int64_t p, std::int64_t q) {
        return dump(lf::to_json(lf::assemble_complex(lf::LensSpace(p, q))));
      },
      py::call_guard<py::gil_scoped_release>());

  m.def("theta_row_maps", [](std::int64_t p, std::int64_t q, bool gamma_nontrivial) {
    const auto maps = lf::theta_row_maps(lf::LensSpace(p, q), gamma_nontrivial);
    return std::pair{maps.theta_in.to_rows(), maps.theta_out.to_rows()};
  });
  m.def("vanishing_certificate", [](std::int64_t p, std::int64_t q, bool i_theta_even) {
    return dump(lf::to_json(lf::vanishing_certificate(lf::LensSpace(p, q), i_theta_even)));
  });

  m.def("casson_walker_sum", [](std::int64_t p, std::int64_t q) {
    return lf::casson_walker_sum(p, q).str();
  });
  m.def("signature_closed_form", [](std::int64_t p) { return lf::signature_closed_form(p).str(); });
  m.def("signature_mod16_check", [](std::int64_t p) {
    const auto c = lf::signature_mod16_check(p);
    return std::pair{c.residue, c.consistent};
  });
  m.def("i_theta_parity", &lf::i_theta_parity);
  m.def("relative_dim_mod8", [](int delta, std::int64_t alpha_sq, std::int64_t b_plus) {
    return lf::relative_dim_mod8(lf::make_grading(delta), alpha_sq, b_plus);
  });
  m.def(
      "obstruction_report", [](std::int64_t p) { return dump(lf::to_json(lf::obstruction_report(p))); },
      py::call_guard<py::gil_scoped_release>());

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = lf::run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
