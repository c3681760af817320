#pragma once

#include <stdexcept>
#include <string>

namespace vartin {

// Exit-code classes used by the command-line front end.
enum class ErrorKind {
  InvalidInput = 1,
  Undecided = 2,
  Internal = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& what)
      : Error(ErrorKind::InvalidInput, what) {}
};

struct ParseError : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct InvalidLabel : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct UnknownVertex : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct RingMismatch : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct NonReducedWord : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct NoRelation : InvalidInput {
  using InvalidInput::InvalidInput;
};

// Recoverable: a finite search ran out of budget, or an operation requires a
// finite Coxeter group / complete root system.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what)
      : Error(ErrorKind::Undecided, what) {}
};

struct Unsupported : Error {
  explicit Unsupported(const std::string& what)
      : Error(ErrorKind::Undecided, what) {}
};

struct TruncationError : Error {
  explicit TruncationError(const std::string& what)
      : Error(ErrorKind::Undecided, what) {}
};

struct ClosureError : Error {
  explicit ClosureError(const std::string& what)
      : Error(ErrorKind::Undecided, what) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& what)
      : Error(ErrorKind::Internal, what) {}
};

struct ArithmeticOverflow : InternalError {
  using InternalError::InternalError;
};

}  // namespace vartin
