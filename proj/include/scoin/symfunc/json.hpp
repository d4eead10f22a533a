#pragma once

#include <json.hpp>

#include "scoin/combinatorics/json.hpp"
#include "scoin/symfunc/symfn.hpp"

namespace scoin::sym {

/// {"degree": n, "basis": "s", "terms": [{"index": [..], "coeff": [[qexp, zexp, c], ...]}]}
inline void to_json(nlohmann::json& j, const SymFn& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [l, c] : f.coeffs()) terms.push_back({{"index", l}, {"coeff", c}});
  j = {{"degree", f.degree()}, {"basis", std::string(to_string(f.basis()))}, {"terms", terms}};
}

inline void from_json(const nlohmann::json& j, SymFn& f) {
  f = SymFn(j.at("degree").get<int>(), parse_basis(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms")) f.add(t.at("index").get<Partition>(), t.at("coeff").get<QZPoly>());
}

}  // namespace scoin::sym
