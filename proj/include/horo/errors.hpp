#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace horo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid point, boundary point, or parameter for a model space.
struct DomainError : Error {
  using Error::Error;
};

/// A construction needs two distinct points (or a nonzero displacement).
struct DegenerateError : Error {
  using Error::Error;
};

/// Numeric Busemann limit did not settle within the evaluation horizon.
struct ConvergenceError : Error {
  using Error::Error;
};

/// Arity mismatch, incompatible region, or a malformed request.
struct UsageError : Error {
  using Error::Error;
};

struct InvalidSliceError : Error {
  using Error::Error;
};

struct NotInSliceError : Error {
  using Error::Error;
};

/// Shortest-path query between nodes in different components.
struct NoPathError : Error {
  using Error::Error;
};

struct DisconnectedNetError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t offset, const std::string& message)
      : Error("at byte " + std::to_string(offset) + ": " + message), offset(offset) {}
  std::size_t offset;
};

}  // namespace horo
