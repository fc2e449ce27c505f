#pragma once

#include <stdexcept>
#include <string>

namespace tck {

// Base of every error raised by the toolkit. The code is a stable
// machine-readable tag surfaced in CLI error reports.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

class DomainError : public Error {
public:
  explicit DomainError(const std::string& message) : Error("domain_error", message) {}
};

class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& message)
      : Error("precondition_error", message) {}
};

class ResourceError : public Error {
public:
  explicit ResourceError(const std::string& message) : Error("resource_error", message) {}
};

// Raised when two computations that must agree do not; always a bug.
class ConsistencyError : public Error {
public:
  explicit ConsistencyError(const std::string& message)
      : Error("consistency_error", message) {}
};

}  // namespace tck
