#pragma once

#include <stdexcept>
#include <string>

namespace sinv {

// Domain failure taxonomy. The names are part of the CLI/JSON contract, so
// they are spelled exactly as reported to the user.
enum class Err {
  NotInScalarPlusIdeal,
  NoStabilization,
  IndexNotZero,
  PreconditionViolated,
  NotFredholm,
  NotInOnePlusA2,
  NotInOnePlusF2,
  NotUnit,
  NotInvertibleOverL,
  NotInOnePlusP,
  LambdaMinusOne,
  SymbolNotUnit,
  NonzeroDegree,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::NotInScalarPlusIdeal: return "NotInScalarPlusIdeal";
    case Err::NoStabilization: return "NoStabilization";
    case Err::IndexNotZero: return "IndexNotZero";
    case Err::PreconditionViolated: return "PreconditionViolated";
    case Err::NotFredholm: return "NotFredholm";
    case Err::NotInOnePlusA2: return "NotInOnePlusA2";
    case Err::NotInOnePlusF2: return "NotInOnePlusF2";
    case Err::NotUnit: return "NotUnit";
    case Err::NotInvertibleOverL: return "NotInvertibleOverL";
    case Err::NotInOnePlusP: return "NotInOnePlusP";
    case Err::LambdaMinusOne: return "LambdaMinusOne";
    case Err::SymbolNotUnit: return "SymbolNotUnit";
    case Err::NonzeroDegree: return "NonzeroDegree";
  }
  return "UnknownError";
}

class DomainError : public std::runtime_error {
 public:
  DomainError(Err code, const std::string& detail, long aux = 0)
      : std::runtime_error(detail.empty()
                               ? std::string(err_name(code))
                               : std::string(err_name(code)) + ": " + detail),
        code_(code),
        aux_(aux) {}

  Err code() const { return code_; }
  const char* name() const { return err_name(code_); }
  // Side-channel payload: the degree for NonzeroDegree, the certified index
  // for a NotUnit raised off a nonzero symbol degree.
  long aux() const { return aux_; }

 private:
  Err code_;
  long aux_;
};

// Expression/word syntax failure; reported with a 0-based input position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error("parse error at position " + std::to_string(pos) +
                           ": " + msg),
        pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace sinv
