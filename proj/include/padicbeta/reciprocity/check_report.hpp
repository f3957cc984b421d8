#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace padicbeta {

/// The outcome of one verification, reproducible from its parameters alone.
struct CheckReport {
  enum class Status { Pass, Fail, Refused };

  std::string check;
  std::vector<std::pair<std::string, long>> params;
  Status status = Status::Pass;
  // Exactly one residual kind is set when a comparison was made: the p-adic
  // valuation of a difference, or a real absolute error rendered in
  // scientific notation.
  std::optional<long> residual_valuation;
  std::optional<std::string> residual_real;
  // Observed sign or root-of-unity class, where the check records one.
  std::string observed;
  std::string detail;

  bool passed() const { return status == Status::Pass; }
  bool failed() const { return status == Status::Fail; }
};

inline const char* to_string(CheckReport::Status s) {
  switch (s) {
    case CheckReport::Status::Pass: return "pass";
    case CheckReport::Status::Fail: return "fail";
    case CheckReport::Status::Refused: return "refused";
  }
  return "?";
}

inline CheckReport refused(std::string check, std::vector<std::pair<std::string, long>> params, std::string why) {
  CheckReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.status = CheckReport::Status::Refused;
  r.detail = std::move(why);
  return r;
}

}  // namespace padicbeta
