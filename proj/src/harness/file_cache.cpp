#include "scoin/harness/file_cache.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "scoin/harness/version.hpp"

namespace scoin::harness {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& s) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(s.data(), s.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

FileRankCache::FileRankCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_)) throw std::runtime_error("cannot create cache directory " + dir_.string());
}

fs::path FileRankCache::path_for(const std::string& key) const {
  return dir_ / (sha256_hex(std::string(kModuleVersion) + "\n" + key) + ".json");
}

std::optional<std::int64_t> FileRankCache::lookup(const std::string& key) {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("module").get<std::string>() != kModuleVersion || j.at("key").get<std::string>() != key) return std::nullopt;
    return j.at("value").get<std::int64_t>();
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // unreadable entries are recomputed and overwritten
  }
}

void FileRankCache::store(const std::string& key, std::int64_t value) {
  static std::atomic<unsigned> counter{0};
  const fs::path target = path_for(key);
  std::ostringstream tmpname;
  tmpname << target.filename().string() << ".tmp." << std::random_device{}() << "." << counter++;
  const fs::path tmp = dir_ / tmpname.str();
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << nlohmann::json{{"module", kModuleVersion}, {"key", key}, {"value", value}}.dump() << "\n";
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);  // atomic on POSIX; the last writer wins with identical content
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move cache file into place: " + target.string());
  }
}

fs::path default_cache_dir() {
  if (const char* d = std::getenv("SCOIN_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "scoin";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "scoin";
  return ".scoin-cache";
}

}  // namespace scoin::harness
