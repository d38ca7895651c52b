#pragma once

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mflab/matrix.hpp"
#include "mflab/vector_field.hpp"

namespace mflab::cli {

using Json = nlohmann::json;

/// Bumped whenever a cached result could change.
inline constexpr const char* kCodeVersion = "1";

/// Entry point of the `mflab` tool. Exit codes: 0 success, 1 failed
/// verification or computation error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string sha256_hex(const std::string& data);

/// Content-addressed result store: <dir>/<command>/<sha256 of key>.json.
class Cache {
 public:
  enum class Status { kDisabled, kHit, kMiss, kCorrupt };

  Cache(std::filesystem::path dir, bool enabled, std::ostream& warnings);

  /// Key text is the canonical dump of {command, params, version}.
  static std::string key_text(const std::string& command, const Json& params);
  std::filesystem::path path_for(const std::string& command, const std::string& key) const;

  std::optional<Json> get(const std::string& command, const Json& params);
  void put(const std::string& command, const Json& params, const Json& value);

  Status last_status() const { return status_; }
  std::string last_key() const { return last_key_; }

 private:
  std::filesystem::path dir_;
  bool enabled_;
  std::ostream& warnings_;
  Status status_ = Status::kDisabled;
  std::string last_key_;
};

std::filesystem::path default_cache_dir();
std::string to_string(Cache::Status s);

// -- JSON helpers -------------------------------------------------------------

Json to_json(const Rational& r);
Json to_json(const MultiPoly& p);
Json to_json(const std::complex<double>& z);
Json to_json(const RationalMatrix& m);
Json to_json(const PolyMatrix& m);
Json to_json(const VectorField& v);

/// "p/q" or a decimal; "re:im" for complex values.
Rational parse_exact(const std::string& text);
std::complex<double> parse_complex(const std::string& text);

// -- verification suites ------------------------------------------------------

struct VerifyReport {
  std::string suite;
  Json checks = Json::object();  // name -> observed result
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
  Json to_json() const;
};

/// Suites: tangency, delta, sl2, linearpart, picard, and all (every module).
/// `terms` is the q-series order used by series-based checks.
VerifyReport verify_suite(const std::string& name, int terms);
const std::vector<std::string>& verify_suite_names();

}  // namespace mflab::cli
