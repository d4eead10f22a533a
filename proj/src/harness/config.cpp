#include "scoin/harness/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "scoin/coinvariant/coinvariant.hpp"
#include "scoin/combinatorics/enumerate.hpp"
#include "scoin/harness/checks.hpp"

namespace scoin::harness {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t to_int(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  std::int64_t x = 0;
  try {
    x = std::stoll(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || x < 0) throw std::invalid_argument("config key " + key + " needs a nonnegative integer, got '" + v + "'");
  return x;
}

}  // namespace

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || trim(line.substr(0, eq)).empty())
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

std::map<std::string, std::string> load_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read config file " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void apply_limits(const std::map<std::string, std::string>& config) {
  static const std::set<std::string> cli_keys{"jobs", "format", "cache", "seed"};
  auto& e = coinv::engine_caps();
  for (const auto& [k, v] : config) {
    if (cli_keys.count(k)) continue;
    if (k.rfind("cap.", 0) == 0) {
      set_check_cap(k.substr(4), static_cast<int>(to_int(k, v)));
    } else if (k == "engine.hilbert") {
      e.hilbert = static_cast<int>(to_int(k, v));
    } else if (k == "engine.frobenius") {
      e.frobenius = static_cast<int>(to_int(k, v));
    } else if (k == "engine.closure") {
      e.closure = static_cast<int>(to_int(k, v));
    } else if (k == "engine.matrix_cells") {
      e.matrix_cells = to_int(k, v);
    } else if (k == "enumeration.max_n") {
      comb::enumeration_caps().max_n = static_cast<int>(to_int(k, v));
    } else {
      throw std::invalid_argument("unknown config key '" + k + "'");
    }
  }
}

}  // namespace scoin::harness
