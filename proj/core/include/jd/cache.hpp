#ifndef JD_CACHE_HPP
#define JD_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

namespace jd {

// Content-addressed result cache. Entries are keyed by a logical key
// string that embeds the engine version, so a version bump invalidates
// everything. Writes go through a lock file plus an atomic rename, so
// concurrent invocations never observe torn entries. Any read problem
// is reported as a miss; callers recompute.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);

  // $JDCALC_CACHE_DIR, else $XDG_CACHE_HOME/jdcalc, else
  // $HOME/.cache/jdcalc, else ./.jdcalc-cache.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<std::string> get(const std::string& logical_key) const;
  void put(const std::string& logical_key, const std::string& payload) const;

 private:
  std::filesystem::path entry_path(const std::string& logical_key) const;
  std::filesystem::path dir_;
};

}  // namespace jd

#endif
