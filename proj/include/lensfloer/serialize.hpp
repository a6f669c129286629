#pragma once

/// JSON renderings of the library types. Numbers are emitted by the json
/// library, which does not consult the locale.

#include "json.hpp"

#include "lensfloer/exact_arith.hpp"
#include "lensfloer/flat_classes.hpp"
#include "lensfloer/floer_complex.hpp"
#include "lensfloer/gamma_complex.hpp"
#include "lensfloer/invariants.hpp"
#include "lensfloer/lattice.hpp"

namespace lensfloer {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const FlatClass& c);
Json to_json(const KPair& k);
/// Solutions as sorted [i, j] pairs.
Json to_json(const LatticeCounts& counts);
Json to_json(const FloerComplexData& cx);
Json to_json(const BoundaryElement& b);
Json to_json(const VanishingCertificate& cert);
Json to_json(const ObstructionReport& rep);

}  // namespace lensfloer
