#pragma once

#include <stdexcept>
#include <string>

namespace ppinterp {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidMesh,
  kOutOfDomain,
  kNumerical,
  kIo,
};

/// Base exception for every failure raised by the library. The C API maps
/// `code()` onto its status enum.
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

class MeshError : public Error {
 public:
  explicit MeshError(const std::string& what)
      : Error(ErrorCode::kInvalidMesh, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorCode::kOutOfDomain, what) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what)
      : Error(ErrorCode::kNumerical, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::kIo, what) {}
};

}  // namespace ppinterp
