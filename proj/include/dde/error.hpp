#pragma once

#include <stdexcept>
#include <string>

namespace dde {

/// Broad failure classes. The CLI maps each to a stable exit code.
enum class ErrorKind {
  InvalidArgument,  // bad flag, bad parameter, precondition violated
  Data,             // IO, parse, support violation, degenerate sample
  Fit,              // estimator did not converge
  Numeric,          // quadrature or other numerical failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::string stage = {})
      : std::runtime_error(stage.empty() ? what : stage + ": " + what),
        kind_(kind),
        stage_(std::move(stage)),
        detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Pipeline stage that failed ("fit", "bandwidth", ...); empty when raised
  /// outside a pipeline.
  const std::string& stage() const noexcept { return stage_; }
  const std::string& detail() const noexcept { return detail_; }

  /// Same error, tagged with a pipeline stage. An existing tag is kept.
  Error at_stage(const std::string& stage) const {
    return stage_.empty() ? Error(kind_, detail_, stage) : *this;
  }

 private:
  ErrorKind kind_;
  std::string stage_;
  std::string detail_;
};

inline Error invalid_argument(const std::string& what) { return {ErrorKind::InvalidArgument, what}; }
inline Error data_error(const std::string& what) { return {ErrorKind::Data, what}; }
inline Error fit_error(const std::string& what) { return {ErrorKind::Fit, what}; }
inline Error numeric_error(const std::string& what) { return {ErrorKind::Numeric, what}; }

/// Exit codes: 0 ok, 2 usage, 3 data, 4 fit, 5 numeric.
constexpr int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return 2;
    case ErrorKind::Data: return 3;
    case ErrorKind::Fit: return 4;
    case ErrorKind::Numeric: return 5;
  }
  return 1;
}

}  // namespace dde
