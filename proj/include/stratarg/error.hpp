#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stratarg {

enum class ErrorKind {
  unknown_argument,
  size_bound_exceeded,
  invalid_framework,
  illegal_move,
  wrong_turn,
  ineffective_move,
  not_effective,
  unknown_fixture,
  invalid_params,
  parse_error,
};

std::string_view to_string(ErrorKind kind);

/// Every engine failure is reported through this one exception type; the kind
/// distinguishes bad input from desk-scale limits.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stratarg
