#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace psg {

enum class ErrorCode {
  EmptySet,
  NonPositiveMove,
  DuplicateMove,
  ParseError,
  InvalidArgument,
  PeriodNotFound,
  GcdNotOne,
  ContainsOne,
  SizeMismatch,
  OutOfQuadrant,
  DegenerateSlope,
  UnknownFormat,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when no repeated outcome window shows up within the position cap.
class PeriodNotFound : public Error {
 public:
  explicit PeriodNotFound(std::int64_t cap)
      : Error(ErrorCode::PeriodNotFound,
              "no repeated outcome window within cap " + std::to_string(cap)),
        cap_(cap) {}

  std::int64_t cap() const noexcept { return cap_; }

 private:
  std::int64_t cap_;
};

}  // namespace psg
