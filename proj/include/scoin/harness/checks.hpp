#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "scoin/coinvariant/coinvariant.hpp"
#include "scoin/combinatorics/enumerate.hpp"

namespace scoin::harness {

using coinv::RankCache;

struct CheckSpec {
  std::string name;
  int n = 0;
  std::map<std::string, std::string> options;
};

enum class Status { pass, fail, skipped };
const char* to_string(Status s);

/// Rows of a rendered table; the first row is the header. `latex` optionally holds the same
/// cells typeset for math mode.
struct Table {
  std::string caption;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::vector<std::string>> latex;
};

struct Report {
  std::string check;
  /// Parameters in display order.
  std::vector<std::pair<std::string, std::string>> parameters;
  Status status = Status::pass;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  std::vector<Table> tables;
  double seconds = 0;
  std::int64_t cache_hits = 0;
  std::string version;
};

struct RunContext {
  int jobs = 1;
  RankCache* cache = nullptr;
  /// Lift every cap for the duration of the run.
  bool force = false;
  std::uint32_t seed = 20240611;
};

/// The thirteen verification checks, in the order `verify all` runs them.
const std::vector<std::string>& check_names();
/// Largest n a check accepts without --force; overridable per check.
int check_cap(const std::string& name);
void set_check_cap(const std::string& name, int cap);

/// Runs one check. Resource refusals become skipped reports and integrity errors become failures;
/// an unknown check name or n < 1 throws std::invalid_argument.
Report run(const CheckSpec& spec, const RunContext& ctx = {});

/// Raises every library cap while alive (when active) and restores the previous values.
class CapLift {
 public:
  explicit CapLift(bool active);
  ~CapLift();
  CapLift(const CapLift&) = delete;
  CapLift& operator=(const CapLift&) = delete;

 private:
  bool active_;
  coinv::EngineCaps engine_;
  comb::EnumerationCaps enumeration_;
};

/// Counts cache lookups that were answered; wraps another cache.
class CountingCache : public RankCache {
 public:
  explicit CountingCache(RankCache* inner) : inner_(inner) {}
  std::optional<std::int64_t> lookup(const std::string& key) override;
  void store(const std::string& key, std::int64_t value) override;
  std::int64_t hits() const { return hits_.load(); }

 private:
  RankCache* inner_;
  std::atomic<std::int64_t> hits_{0};
};

}  // namespace scoin::harness
