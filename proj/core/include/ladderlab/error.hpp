#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ladderlab {

enum class ErrorKind {
  pole,
  precision_unreachable,
  domain,
  missed_zero,
  on_zero,
  continuation_failure,
  tolerance_not_met,
  non_finite,
  bracket_failure,
  convergence_failure,
  tail_bound_unavailable,
  io,
  usage,
};

std::string_view to_string(ErrorKind kind);

/// Numeric failures (exit status 1) as opposed to bad input (exit status 2).
bool is_numeric_failure(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ladderlab
