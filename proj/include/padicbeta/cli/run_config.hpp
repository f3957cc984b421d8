#pragma once

// Parameters of one verification run. Validated before any computation and
// serialized into every report so that a report line can be reproduced.

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "padicbeta/core/number_theory.hpp"

namespace padicbeta::cli {

using ordered_json = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "padic-core",       "lgamma-identities", "gamma-functional-equations", "beta-reflection", "beta-products",
      "hurwitz",          "algebraicity",      "rec-exact",                  "rec-mod-roots",   "gross-koblitz"};
  return names;
}

struct RunConfig {
  std::vector<long> primes{3, 5, 7};
  long precision = 12;
  long digits = 60;
  long m_min = 3;
  long m_max = 12;
  std::string suite = "all";
  std::string format = "json";
  std::uint64_t seed = 1;
  bool quick = false;

  // Samples per sampled invariant report.
  long samples() const { return quick ? 20 : 100; }
  // Samples for the costlier extended-gamma identities.
  long gamma_samples() const { return quick ? 5 : 20; }

  void validate() const {
    if (primes.empty()) throw ConfigError("at least one prime is required");
    for (long p : primes)
      if (p < 3 || !is_prime(p)) throw ConfigError("--p: " + std::to_string(p) + " is not an odd prime");
    if (precision < 2 || precision > 200) throw ConfigError("--precision must lie in [2, 200]");
    if (digits < 20 || digits > 2000) throw ConfigError("--digits must lie in [20, 2000]");
    if (m_min < 3 || m_max < m_min) throw ConfigError("--m: need 3 <= lo <= hi");
    if (m_max > 200) throw ConfigError("--m: conductors above 200 are out of scope");
    if (format != "json" && format != "tsv" && format != "text") throw ConfigError("--format must be json, tsv or text");
    if (suite != "all") {
      bool known = false;
      for (const auto& s : suite_names()) known = known || s == suite;
      if (!known) throw ConfigError("unknown suite '" + suite + "'");
    }
  }

  ordered_json to_json() const {
    ordered_json j;
    j["primes"] = primes;
    j["precision"] = precision;
    j["digits"] = digits;
    j["m"] = {m_min, m_max};
    j["suite"] = suite;
    j["format"] = format;
    j["seed"] = seed;
    j["quick"] = quick;
    return j;
  }

  // FNV-1a over the canonical JSON form.
  std::string hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : to_json().dump()) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }
};

inline long parse_long(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw ConfigError(what + ": '" + s + "' is not an integer");
  }
  if (pos != s.size()) throw ConfigError(what + ": '" + s + "' is not an integer");
  return v;
}

/// "X" means 3..X; "A..B" is explicit.
inline void parse_m_range(const std::string& s, long& lo, long& hi) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    lo = 3;
    hi = parse_long(s, "--m");
  } else {
    lo = parse_long(s.substr(0, dots), "--m");
    hi = parse_long(s.substr(dots + 2), "--m");
  }
}

/// Comma-separated list of primes.
inline std::vector<long> parse_primes(const std::string& s) {
  std::vector<long> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    auto piece = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_long(piece, "--p"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace padicbeta::cli
