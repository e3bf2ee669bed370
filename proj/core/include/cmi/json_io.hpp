#pragma once

#include <cmi/betti.hpp>
#include <cmi/certificate.hpp>
#include <cmi/ideal.hpp>
#include <cmi/simplicial.hpp>

#include <json.hpp>

namespace cmi {

// Structured counterparts of the text formats. Shapes:
//   ideal        {"vars": [labels], "gens": [[exponent vector], ...]}
//   complex      {"vertices": [labels], "facets": [[label, ...], ...]}
//   certificate  {"leaf": [exponent vector]} or {"left":…, "right":…, "meet":…}
//   betti        {"characteristic": c, "entries": [{"i","j","value"}, ...]}
// All from_* functions throw input_error on malformed input.

nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const CertPtr& cert);
CertPtr certificate_from_json(const nlohmann::json& j, std::size_t nvars);

nlohmann::json betti_to_json(const BettiTable& table);

} // namespace cmi
