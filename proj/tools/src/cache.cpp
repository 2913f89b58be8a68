#include "paramedial_cli/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "paramedial/errors.hpp"

namespace paramedial::cli {

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

ResultCache ResultCache::from(const std::string& flag) {
  if (!flag.empty()) return ResultCache(std::filesystem::path(flag));
  if (const char* env = std::getenv(kCacheEnv); env != nullptr && *env != '\0') {
    return ResultCache(std::filesystem::path(env));
  }
  return ResultCache(std::nullopt);
}

std::filesystem::path ResultCache::path_for(std::string_view key) const {
  return *dir_ / (hex64(fnv1a(key)) + ".out");
}

std::optional<std::string> ResultCache::load(std::string_view key) const {
  if (!dir_) return std::nullopt;
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void ResultCache::store(std::string_view key, const std::string& content) const {
  if (!dir_) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  if (ec) throw Error("cannot create cache directory " + dir_->string() + ": " + ec.message());
  const auto target = path_for(key);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw Error("cannot move cache file into place: " + target.string());
}

}  // namespace paramedial::cli
