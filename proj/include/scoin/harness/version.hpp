#pragma once

namespace scoin::harness {

inline constexpr const char* kToolVersion = "0.1.0";
/// Bumped whenever a cached quantity could change meaning; part of every cache key.
inline constexpr const char* kModuleVersion = "coinvariant-1";

}  // namespace scoin::harness
