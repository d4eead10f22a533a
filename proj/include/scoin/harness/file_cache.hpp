#pragma once

#include <filesystem>
#include <string>

#include "scoin/coinvariant/engine.hpp"

namespace scoin::harness {

using coinv::RankCache;

/// Lowercase hex SHA-256 of the bytes of s.
std::string sha256_hex(const std::string& s);

/// Rank cache on disk: one JSON file per entry, named by the SHA-256 of the module version and
/// the key. Entries are written to a temporary file and renamed into place, so concurrent
/// writers never expose partial files; a file whose stored key differs is ignored.
class FileRankCache : public RankCache {
 public:
  /// Creates the directory if needed; throws std::runtime_error when that fails.
  explicit FileRankCache(std::filesystem::path dir);

  std::optional<std::int64_t> lookup(const std::string& key) override;
  void store(const std::string& key, std::int64_t value) override;

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

/// SCOIN_CACHE_DIR if set, else $XDG_CACHE_HOME/scoin, else $HOME/.cache/scoin, else ./.scoin-cache.
std::filesystem::path default_cache_dir();

}  // namespace scoin::harness
