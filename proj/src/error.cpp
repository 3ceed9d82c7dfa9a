#include "stratarg/error.hpp"

namespace stratarg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::unknown_argument: return "unknown-argument";
    case ErrorKind::size_bound_exceeded: return "size-bound-exceeded";
    case ErrorKind::invalid_framework: return "invalid-framework";
    case ErrorKind::illegal_move: return "illegal-move";
    case ErrorKind::wrong_turn: return "wrong-turn";
    case ErrorKind::ineffective_move: return "ineffective-move";
    case ErrorKind::not_effective: return "not-effective";
    case ErrorKind::unknown_fixture: return "unknown-fixture";
    case ErrorKind::invalid_params: return "invalid-params";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

}  // namespace stratarg
