#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrinv {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid or incomplete run configuration. `field()` names the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Operation requested for a field geometry that does not support it.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Syntax or lexical error in operator text; `offset()` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Sampling would alias; `max_time()` is the largest admissible time.
class NyquistError : public Error {
 public:
  NyquistError(double max_time, const std::string& what)
      : Error(what), max_time_(max_time) {}
  double max_time() const noexcept { return max_time_; }

 private:
  double max_time_;
};

/// A precondition on numeric arguments failed.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Richardson differences vanished; nothing left to estimate.
class AlreadyConverged : public Error {
 public:
  AlreadyConverged() : Error("already converged") {}
};

}  // namespace lrinv
