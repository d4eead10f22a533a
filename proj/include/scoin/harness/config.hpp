#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace scoin::harness {

/// key = value lines; '#' starts a comment, blank lines are ignored. Throws std::invalid_argument
/// on a malformed line and std::runtime_error when the file cannot be read.
std::map<std::string, std::string> load_config(const std::filesystem::path& file);
std::map<std::string, std::string> parse_config(const std::string& text);

/// Applies the keys that configure library limits:
///   cap.<check>            largest n for that check without --force
///   engine.hilbert, engine.frobenius, engine.closure, engine.matrix_cells
///   enumeration.max_n
/// Other keys (jobs, format, cache, seed) are read by the CLI itself. Unknown keys throw
/// std::invalid_argument.
void apply_limits(const std::map<std::string, std::string>& config);

}  // namespace scoin::harness
