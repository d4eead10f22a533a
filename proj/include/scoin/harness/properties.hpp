#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scoin::harness {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  /// The first few failing cases, reproducible from the seed.
  std::vector<std::string> witnesses;
};

/// anticommutation, contraction, odot-module, antisymmetrizer, gale-order, kostka, rank-nullity
const std::vector<std::string>& property_suite_names();

/// Runs one suite with its own generator seeded from (seed, suite index); throws
/// std::invalid_argument on an unknown name. Random objects live in n <= nmax.
PropertyResult run_property_suite(const std::string& name, std::uint32_t seed, int cases = 1000, int nmax = 4);
std::vector<PropertyResult> run_property_suites(std::uint32_t seed, int cases = 1000, int nmax = 4);

}  // namespace scoin::harness
