#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "mflab/cli.hpp"
#include "mflab/error.hpp"

namespace mflab::cli {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kIo, "sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

fs::path default_cache_dir() {
  if (const char* dir = std::getenv("MFLAB_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "mflab";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "mflab";
  return fs::temp_directory_path() / "mflab-cache";
}

std::string to_string(Cache::Status s) {
  switch (s) {
    case Cache::Status::kDisabled: return "disabled";
    case Cache::Status::kHit: return "hit";
    case Cache::Status::kMiss: return "miss";
    case Cache::Status::kCorrupt: return "corrupt";
  }
  return "unknown";
}

Cache::Cache(fs::path dir, bool enabled, std::ostream& warnings)
    : dir_(std::move(dir)), enabled_(enabled), warnings_(warnings) {}

std::string Cache::key_text(const std::string& command, const Json& params) {
  Json key{{"command", command}, {"params", params}, {"version", kCodeVersion}};
  return key.dump();
}

fs::path Cache::path_for(const std::string& command, const std::string& key) const {
  return dir_ / command / (sha256_hex(key) + ".json");
}

std::optional<Json> Cache::get(const std::string& command, const Json& params) {
  if (!enabled_) {
    status_ = Status::kDisabled;
    return std::nullopt;
  }
  std::string key = key_text(command, params);
  last_key_ = sha256_hex(key);
  fs::path path = path_for(command, key);
  std::error_code ec;
  if (!fs::exists(path, ec)) {
    status_ = Status::kMiss;
    return std::nullopt;
  }
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  Json stored = Json::parse(buf.str(), nullptr, false);
  if (stored.is_discarded() || !stored.is_object() || !stored.contains("key") || !stored.contains("value") ||
      stored["key"] != key) {
    warnings_ << "mflab: warning: corrupted cache entry " << path.string() << ", recomputing\n";
    status_ = Status::kCorrupt;
    return std::nullopt;
  }
  status_ = Status::kHit;
  return stored["value"];
}

void Cache::put(const std::string& command, const Json& params, const Json& value) {
  if (!enabled_) return;
  std::string key = key_text(command, params);
  fs::path path = path_for(command, key);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) {
    warnings_ << "mflab: warning: cannot create cache directory " << path.parent_path().string() << ": "
              << ec.message() << "\n";
    return;
  }
  // Write to a unique temporary, then rename over the target.
  std::random_device rd;
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    out << Json{{"key", key}, {"value", value}}.dump() << "\n";
    if (!out) {
      warnings_ << "mflab: warning: cannot write cache entry " << tmp.string() << "\n";
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    warnings_ << "mflab: warning: cannot store cache entry " << path.string() << ": " << ec.message() << "\n";
    fs::remove(tmp, ec);
  }
}

}  // namespace mflab::cli
