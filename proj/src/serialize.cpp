#include "lensfloer/serialize.hpp"

#include <string>

namespace lensfloer {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const FlatClass& c) {
  return Json{{"l", c.l}, {"stabilizer", c.is_trivial() ? "SU2" : "U1"}};
}

Json to_json(const KPair& k) { return Json::array({k.k1, k.k2}); }

Json to_json(const LatticeCounts& counts) {
  Json solutions = Json::array();
  for (const auto& [i, j] : counts.solutions) solutions.push_back(Json::array({i, j}));
  return Json{{"n1", counts.n1}, {"n2", counts.n2}, {"minimal", counts.minimal},
              {"solutions", std::move(solutions)}};
}

Json to_json(const FloerComplexData& cx) {
  Json gens = Json::object();
  Json bnd = Json::object();
  Json hom = Json::object();
  Json grad = Json::object();
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string key = std::to_string(i);
    Json list = Json::array();
    for (const auto& c : cx.generators[i]) list.push_back(to_json(c));
    gens[key] = std::move(list);
    bnd[key] = cx.boundaries[i].to_rows();
    hom[key] = cx.homology[i];
  }
  for (std::size_t l = 0; l < cx.gradings.size(); ++l) grad[std::to_string(l)] = cx.gradings[l].value;
  return Json{{"p", cx.space.p()},       {"q", cx.space.q()},    {"gradings", std::move(grad)},
              {"generators", std::move(gens)}, {"boundary", std::move(bnd)},
              {"homology", std::move(hom)}};
}

Json to_json(const BoundaryElement& b) {
  Json cands = Json::array();
  for (const auto& c : b.candidates) {
    cands.push_back(Json{{"sign_l", c.sign_l},
                         {"sign_m", c.sign_m},
                         {"k", to_json(c.k)},
                         {"minimal", c.minimal},
                         {"dirac_count", c.dirac ? Json(*c.dirac) : Json(nullptr)}});
  }
  Json out{{"value", b.value}, {"candidates", std::move(cands)}};
  out["chosen"] = b.chosen ? to_json(*b.chosen) : Json(nullptr);
  out["chosen_counts"] = b.chosen_counts ? to_json(*b.chosen_counts) : Json(nullptr);
  Json wit = Json::array();
  for (const auto& [a, c] : b.dirac_witnesses) wit.push_back(Json::array({a, c}));
  out["dirac_witnesses"] = std::move(wit);
  return out;
}

Json to_json(const VanishingCertificate& cert) {
  return Json{{"cf0_to_cfm2_iso", cert.cf0_to_cfm2_iso},
              {"cf2_to_cf0_zero", cert.cf2_to_cf0_zero},
              {"cfm2_to_cfm4_zero", cert.cfm2_to_cfm4_zero},
              {"i_theta_even", cert.i_theta_even},
              {"certified", cert.certified}};
}

Json to_json(const ObstructionReport& rep) {
  Json out{{"p", rep.p},
           {"prime", rep.prime},
           {"mod16", rep.mod16},
           {"homology_vanishes", rep.homology_vanishes},
           {"i_theta_even", rep.i_theta_even},
           {"gamma_certificate", rep.gamma_certificate}};
  out["two_squares"] = rep.two_squares
                           ? Json::array({rep.two_squares->first, rep.two_squares->second})
                           : Json(nullptr);
  out["verdict"] = to_string(rep.verdict);
  out["reasons"] = rep.reasons;
  return out;
}

}  // namespace lensfloer
