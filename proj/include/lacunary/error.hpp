#pragma once

#include <stdexcept>
#include <string>

namespace lacunary {

enum class ErrorCode {
  kInvalidArgument = 1,
  kVariantMismatch = 2,
  kResourceLimit = 3,
  kNumericalFailure = 4,
};

const char* error_code_name(ErrorCode code) noexcept;

// Base of every exception thrown by the library. The code maps one-to-one
// onto the C API status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::kInvalidArgument, what) {}
};

class VariantMismatch : public Error {
 public:
  explicit VariantMismatch(const std::string& what)
      : Error(ErrorCode::kVariantMismatch, what) {}
};

class ResourceLimit : public Error {
 public:
  explicit ResourceLimit(const std::string& what)
      : Error(ErrorCode::kResourceLimit, what) {}
};

class NumericalFailure : public Error {
 public:
  explicit NumericalFailure(const std::string& what)
      : Error(ErrorCode::kNumericalFailure, what) {}
};

}  // namespace lacunary
