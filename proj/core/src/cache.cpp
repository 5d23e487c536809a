#include "jd/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace jd {
namespace {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

// flock-based lock file, released on destruction.
class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path) {
    fd_ = ::open(path.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ >= 0) ::flock(fd_, LOCK_EX);
  }
  ~FileLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace

DiskCache::DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path DiskCache::default_dir() {
  if (const char* env = std::getenv("JDCALC_CACHE_DIR"); env && *env)
    return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "jdcalc";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "jdcalc";
  return std::filesystem::path(".jdcalc-cache");
}

std::filesystem::path DiskCache::entry_path(const std::string& key) const {
  return dir_ / (hex64(fnv1a64(key)) + ".rec");
}

std::optional<std::string> DiskCache::get(const std::string& key) const {
  std::error_code ec;
  const auto path = entry_path(key);
  if (!std::filesystem::exists(path, ec) || ec) return std::nullopt;
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header) || header != key) return std::nullopt;
  std::ostringstream rest;
  rest << in.rdbuf();
  return rest.str();
}

void DiskCache::put(const std::string& key, const std::string& payload) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;  // cache is best effort
  FileLock lock(dir_ / ".lock");
  const auto tmp = entry_path(key).string() + ".tmp." +
                   std::to_string(static_cast<long>(::getpid()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << key << '\n' << payload;
  }
  std::filesystem::rename(tmp, entry_path(key), ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace jd
