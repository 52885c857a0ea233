#pragma once

#include <stdexcept>
#include <string>

namespace magicpol {

/// Base class for all magicpol exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: unknown unit tag, malformed flag value, invalid request.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Invalid or inconsistent data file content. Messages carry file:line context
/// where available.
class DataError : public Error {
 public:
  using Error::Error;
  DataError(const std::string& path, long line, const std::string& what)
      : Error(path + ":" + std::to_string(line) + ": " + what) {}
};

/// Mathematical domain violation (zero frequency, exact pole, negative time).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested inside a resonance exclusion window.
class ResonanceError : public DomainError {
 public:
  ResonanceError(const std::string& what, std::string channel_label)
      : DomainError(what), channel_(std::move(channel_label)) {}
  const std::string& channel() const noexcept { return channel_; }

 private:
  std::string channel_;
};

/// Model construction or solver setup failure (empty model, unsupported
/// target, degenerate match).
class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace magicpol
