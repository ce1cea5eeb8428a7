#ifndef YK_CACHE_HPP
#define YK_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace yk {

struct CacheKey {
  std::string word_text;  // canonical word serialization
  std::string kind;
  int d = 1;
  std::vector<int> D;

  std::string line() const;
};

/*
  One record per file under a content-addressed directory: the file name is
  the FNV-1a hash of the canonical key line, the body is three lines of
  human-readable text (engine version stamp, key, value). Writes go through
  a temp file and an atomic rename. A record that fails to match its key or
  version reports corruption and is treated as a miss.
*/
class CacheStore {
public:
  static constexpr const char* engine_version = "yk-core-1";

  explicit CacheStore(std::filesystem::path dir);

  std::optional<std::string> lookup(const CacheKey& key, std::string* warning = nullptr) const;
  void store(const CacheKey& key, const std::string& value) const;
  const std::filesystem::path& dir() const { return dir_; }

private:
  std::filesystem::path record_path(const CacheKey& key) const;
  std::filesystem::path dir_;
};

std::uint64_t fnv1a64(const std::string& s);

}  // namespace yk

#endif
