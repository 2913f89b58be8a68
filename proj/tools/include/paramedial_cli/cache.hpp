#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace paramedial::cli {

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data);
/// 16 lowercase hex digits.
std::string hex64(std::uint64_t value);

inline constexpr const char* kCacheEnv = "PARAMEDIAL_CACHE_DIR";

/// Directory-backed store of command outputs. A cold run and a cached run
/// return identical bytes; with no directory configured every lookup misses.
class ResultCache {
 public:
  explicit ResultCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

  /// The flag wins over the environment variable.
  static ResultCache from(const std::string& flag);

  bool enabled() const noexcept { return dir_.has_value(); }
  std::optional<std::string> load(std::string_view key) const;
  void store(std::string_view key, const std::string& content) const;
  std::filesystem::path path_for(std::string_view key) const;

 private:
  std::optional<std::filesystem::path> dir_;
};

}  // namespace paramedial::cli
