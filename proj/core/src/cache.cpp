#include "yk/cache.hpp"

#include <fstream>
#include <sstream>

#include "yk/error.hpp"

namespace yk {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string CacheKey::line() const {
  std::string out = kind + "|d=" + std::to_string(d) + "|D=";
  for (std::size_t i = 0; i < D.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(D[i]);
  }
  return out + "|" + word_text;
}

CacheStore::CacheStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error("cache: cannot create directory " + dir_.string());
}

std::filesystem::path CacheStore::record_path(const CacheKey& key) const {
  std::ostringstream name;
  name << std::hex << fnv1a64(key.line()) << ".rec";
  return dir_ / name.str();
}

std::optional<std::string> CacheStore::lookup(const CacheKey& key, std::string* warning) const {
  std::ifstream in(record_path(key));
  if (!in) return std::nullopt;
  std::string version, stored_key, value;
  if (!std::getline(in, version) || !std::getline(in, stored_key) ||
      !std::getline(in, value)) {
    if (warning) *warning = "corrupt cache record " + record_path(key).string();
    return std::nullopt;
  }
  if (version != engine_version || stored_key != key.line()) {
    if (warning)
      *warning = "stale or mismatched cache record " + record_path(key).string();
    return std::nullopt;
  }
  return value;
}

void CacheStore::store(const CacheKey& key, const std::string& value) const {
  const auto path = record_path(key);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cache: cannot write " + tmp);
    out << engine_version << "\n" << key.line() << "\n" << value << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace yk
