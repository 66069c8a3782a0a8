#pragma once

#include <stdexcept>
#include <string>

namespace affgrass {

// Errors caused by bad input: malformed text, violated preconditions.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Errors raised when a proved statement fails at runtime. These always
// indicate a bug in this library, never bad input.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class ParseError : public InputError {
public:
  ParseError(const std::string& reason, int line, int column)
      : InputError(reason + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        reason_(reason), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& reason() const noexcept { return reason_; }
  // Same position, with where prefixed to the reason.
  ParseError in_context(const std::string& where) const {
    return ParseError(where + ": " + reason_, line_, column_);
  }

private:
  std::string reason_;
  int line_;
  int column_;
};

#define AFFGRASS_DEFINE_ERROR(Name, Base)                                      \
  class Name : public Base {                                                   \
  public:                                                                      \
    using Base::Base;                                                          \
  };

AFFGRASS_DEFINE_ERROR(NegativeValuation, InputError)
AFFGRASS_DEFINE_ERROR(ZeroPolynomial, InputError)
AFFGRASS_DEFINE_ERROR(SingularMatrix, InputError)
AFFGRASS_DEFINE_ERROR(LeviMismatch, InputError)
AFFGRASS_DEFINE_ERROR(NotAdjacent, InputError)
AFFGRASS_DEFINE_ERROR(RootNotInNNbar, InputError)
AFFGRASS_DEFINE_ERROR(NotInFiber, InputError)
AFFGRASS_DEFINE_ERROR(InvalidFiberDatum, InputError)
AFFGRASS_DEFINE_ERROR(CoprimalityViolation, InputError)
AFFGRASS_DEFINE_ERROR(PrecisionExhausted, InputError)

AFFGRASS_DEFINE_ERROR(ProportionalityViolation, InvariantViolation)
AFFGRASS_DEFINE_ERROR(FiberRetractViolation, InvariantViolation)

#undef AFFGRASS_DEFINE_ERROR

// Carries the offending certificate as serialized JSON.
class TheoremViolation : public InvariantViolation {
public:
  TheoremViolation(const std::string& what, std::string certificate_json)
      : InvariantViolation(what), certificate_json_(std::move(certificate_json)) {}

  const std::string& certificate_json() const noexcept {
    return certificate_json_;
  }

private:
  std::string certificate_json_;
};

} // namespace affgrass
