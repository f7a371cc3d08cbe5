#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlab {

enum class ErrorCode {
  BackendMismatch,
  InvalidAlgebra,
  InvalidRelation,
  InvalidArgument,
  SizeBound,
  IndexMismatch,
  IndexOut,
  NotAHomomorphism,
  SubsetViolation,
  DivisibilityViolation,
  BoundsViolation,
  SchemeMismatch,
  DimMismatch,
  InvalidPartition,
  Overflow,
  UnsupportedMaxval,
  MalformedHeader,
  TruncatedData,
  BadMagic,
  VersionUnsupported,
  NumeratorOverflow,
  ParseError,
  IoError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// C API and the CLI can map it to a stable status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qlab
