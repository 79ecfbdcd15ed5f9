#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lsp {

enum class Errc {
  // malformed or rejected input
  MalformedCartan,
  NotFiniteType,
  NotDominant,
  LambdaMismatch,
  NotLSPath,
  ChainNotDecreasing,
  BadTurningPoints,
  StringIncomplete,
  NotReducedWordOfW0,
  PreconditionViolated,
  NotShapeMM,
  UnclassifiablePath,
  NotInImage,
  NotNormalized,
  NotA2,
  Parse,
  // arithmetic
  Overflow,
  NonIntegerExponent,
  // invariant breaches inside the library
  InternalNonIntegralWeight,
  ExpansionMismatch,
  Internal,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::MalformedCartan: return "MalformedCartan";
    case Errc::NotFiniteType: return "NotFiniteType";
    case Errc::NotDominant: return "NotDominant";
    case Errc::LambdaMismatch: return "LambdaMismatch";
    case Errc::NotLSPath: return "NotLSPath";
    case Errc::ChainNotDecreasing: return "ChainNotDecreasing";
    case Errc::BadTurningPoints: return "BadTurningPoints";
    case Errc::StringIncomplete: return "StringIncomplete";
    case Errc::NotReducedWordOfW0: return "NotReducedWordOfW0";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotShapeMM: return "NotShapeMM";
    case Errc::UnclassifiablePath: return "UnclassifiablePath";
    case Errc::NotInImage: return "NotInImage";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NotA2: return "NotA2";
    case Errc::Parse: return "Parse";
    case Errc::Overflow: return "Overflow";
    case Errc::NonIntegerExponent: return "NonIntegerExponent";
    case Errc::InternalNonIntegralWeight: return "InternalNonIntegralWeight";
    case Errc::ExpansionMismatch: return "ExpansionMismatch";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

/// True for codes that signal a bug in this library rather than bad input.
constexpr bool is_internal(Errc e) noexcept {
  return e == Errc::InternalNonIntegralWeight || e == Errc::ExpansionMismatch ||
         e == Errc::Internal;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by validate_ls; carries the 1-based index of the failing segment.
class NotLSPathError : public Error {
 public:
  NotLSPathError(std::size_t segment, const std::string& what)
      : Error(Errc::NotLSPath, what), segment_(segment) {}

  std::size_t segment() const noexcept { return segment_; }

 private:
  std::size_t segment_;
};

}  // namespace lsp
