#pragma once

// JSON (de)serialization for the combinatorial types; field names follow the type definitions.

#include <json.hpp>

#include "scoin/combinatorics/objects.hpp"
#include "scoin/combinatorics/qzpoly.hpp"

namespace scoin::comb {

inline void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }
inline void from_json(const nlohmann::json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

inline void to_json(nlohmann::json& j, const Subset& s) { j = {{"n", s.ambient()}, {"elems", s.elems()}}; }
inline void from_json(const nlohmann::json& j, Subset& s) {
  s = Subset(j.at("n").get<int>(), j.at("elems").get<std::vector<int>>());
}

inline void to_json(nlohmann::json& j, const SignedPartition& sp) { j = {{"mu", sp.mu}, {"gamma", sp.gamma}}; }
inline void from_json(const nlohmann::json& j, SignedPartition& sp) {
  sp = SignedPartition(j.at("mu").get<Partition>(), j.at("gamma").get<std::vector<int>>());
}

inline void to_json(nlohmann::json& j, const TranslationSequence& t) { j = {{"mu", t.mu}, {"sets", t.sets}}; }
inline void from_json(const nlohmann::json& j, TranslationSequence& t) {
  t = TranslationSequence(j.at("mu").get<Partition>(), j.at("sets").get<std::vector<Subset>>());
}

inline void to_json(nlohmann::json& j, const OrderedSetPartition& s) { j = {{"blocks", s.blocks}}; }
inline void from_json(const nlohmann::json& j, OrderedSetPartition& s) {
  s = OrderedSetPartition(j.at("blocks").get<Blocks>());
}

inline void to_json(nlohmann::json& j, const OrderedMultisetPartition& s) { j = {{"blocks", s.blocks}}; }
inline void from_json(const nlohmann::json& j, OrderedMultisetPartition& s) {
  s = OrderedMultisetPartition(j.at("blocks").get<Blocks>());
}

inline void to_json(nlohmann::json& j, const StandardTableau& t) { j = {{"shape", t.shape}, {"filling", t.rows}}; }
inline void from_json(const nlohmann::json& j, StandardTableau& t) {
  t = StandardTableau(j.at("shape").get<Partition>(), j.at("filling").get<std::vector<std::vector<int>>>());
}

/// Terms as [q-exponent, z-exponent, coefficient] triples.
inline void to_json(nlohmann::json& j, const QZPoly& p) {
  j = nlohmann::json::array();
  for (const auto& [k, c] : p.terms()) j.push_back({k.first, k.second, c});
}
inline void from_json(const nlohmann::json& j, QZPoly& p) {
  p = QZPoly();
  for (const auto& t : j) p.add_term(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<std::int64_t>());
}

}  // namespace scoin::comb
