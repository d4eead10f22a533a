#pragma once

#include <json.hpp>

#include "scoin/superspace/element.hpp"

namespace scoin::super {

/// {"n": n, "terms": [{"x": [...], "theta": [...], "c": "p/q"}, ...]}
inline void to_json(nlohmann::json& j, const SuperElement& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> th;
    for (int i = 1; i <= f.n(); ++i)
      if (m.thetas & (1u << (i - 1))) th.push_back(i);
    terms.push_back({{"x", m.exps.to_vector(f.n())}, {"theta", th}, {"c", c.to_string()}});
  }
  j = {{"n", f.n()}, {"terms", terms}};
}

inline void from_json(const nlohmann::json& j, SuperElement& f) {
  int n = j.at("n").get<int>();
  f = SuperElement(n);
  for (const auto& t : j.at("terms")) {
    auto xs = t.at("x").get<std::vector<int>>();
    if (static_cast<int>(xs.size()) != n) throw std::invalid_argument("SuperElement JSON: exponent length mismatch");
    SuperMonomial m;
    m.exps = Exponent(xs);
    for (int i : t.at("theta").get<std::vector<int>>()) {
      if (i < 1 || i > n) throw std::invalid_argument("SuperElement JSON: theta index out of range");
      m.thetas |= 1u << (i - 1);
    }
    f.add_term(m, Rational::parse(t.at("c").get<std::string>()));
  }
}

}  // namespace scoin::super
