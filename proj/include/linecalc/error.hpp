#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linecalc {

enum class ErrorKind {
  ParseError,
  InvalidField,
  UnknownVariable,
  ParameterPresent,
  FieldMismatch,
  DivisionByZero,
  AllZero,
  NotHomogeneous,
  LineNotContained,
  InfiniteField,
  CurveNotOnX,
  SingularAlongCurve,
  SingularAlongLine,
  TwistTooNegative,
  BasePointedCover,
  NotCorankOne,
  ConstraintViolated,
  CharTwoForbidden,
  InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind);

/// Library error carrying a named kind; the CLI maps kinds to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace linecalc
