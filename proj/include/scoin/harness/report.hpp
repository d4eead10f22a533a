#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scoin/coinvariant/coinvariant.hpp"
#include "scoin/harness/checks.hpp"
#include "scoin/harness/properties.hpp"

namespace scoin::harness {

enum class Format { json, tsv, latex };
/// Throws std::invalid_argument on anything but json, tsv or latex.
Format parse_format(std::string_view name);

struct EmitOptions {
  /// Timing and cache hits vary between runs, so they are left out unless asked for.
  bool stats = false;
};

nlohmann::ordered_json to_json(const Report& r, const EmitOptions& opts = {});
Report report_from_json(const nlohmann::json& j);

/// One report renders as a JSON object, several as an array. TSV starts with a header row;
/// LaTeX is a complete document.
std::string emit(const std::vector<Report>& reports, Format format, const EmitOptions& opts = {});

/// Rows i (bosonic degree) by columns j (fermionic degree).
Table bidegree_table(const coinv::BidegreeTable& t, const std::string& caption);
/// One row per nonzero bidegree with its Schur expansion.
Table frobenius_table(const coinv::FrobeniusTable& t, const std::string& caption);

/// A property-suite run packaged as a report named "properties".
Report properties_report(const std::vector<PropertyResult>& results, std::uint32_t seed);

}  // namespace scoin::harness
