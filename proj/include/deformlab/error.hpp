#pragma once

#include <stdexcept>
#include <string>

namespace deformlab {

enum class Errc {
  DimensionMismatch,
  SingularMap,
  NotMultiplicative,
  NotAssociative,
  NotACocycle,
  AllZero,
  PrefixInvalid,
  SingularLinearization,
  IdenticallySingular,
  DivisionByZero,
  InvalidArgument,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularMap: return "SingularMap";
    case Errc::NotMultiplicative: return "NotMultiplicative";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::AllZero: return "AllZero";
    case Errc::PrefixInvalid: return "PrefixInvalid";
    case Errc::SingularLinearization: return "SingularLinearization";
    case Errc::IdenticallySingular: return "IdenticallySingular";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace deformlab
