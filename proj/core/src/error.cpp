#include "ladderlab/error.hpp"

namespace ladderlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::pole: return "pole";
    case ErrorKind::precision_unreachable: return "precision-unreachable";
    case ErrorKind::domain: return "domain";
    case ErrorKind::missed_zero: return "missed-zero";
    case ErrorKind::on_zero: return "on-zero";
    case ErrorKind::continuation_failure: return "continuation-step-failure";
    case ErrorKind::tolerance_not_met: return "tolerance-not-met";
    case ErrorKind::non_finite: return "non-finite";
    case ErrorKind::bracket_failure: return "bracket-failure";
    case ErrorKind::convergence_failure: return "convergence-failure";
    case ErrorKind::tail_bound_unavailable: return "tail-bound-not-computable";
    case ErrorKind::io: return "io";
    case ErrorKind::usage: return "usage";
  }
  return "unknown";
}

bool is_numeric_failure(ErrorKind kind) {
  return kind != ErrorKind::domain && kind != ErrorKind::usage;
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace ladderlab
