#pragma once

#include <stdexcept>
#include <string>

namespace multifan {

enum class ErrorKind {
  dimension_mismatch,
  singular,
  invalid_fan,
  not_complete,
  not_generic,
  on_wall,
  not_lattice,
  not_primitive,
  verification_failed,
  parse_error,
  unsupported,
};

const char* to_string(ErrorKind kind);

/// Exception type used across the library. `kind()` classifies the failure
/// so the CLI can map it to an exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace multifan
