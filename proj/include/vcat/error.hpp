#pragma once

#include <stdexcept>
#include <string>

namespace vcat {

/// Failure classes surfaced by constructors, table lookups and checkers.
/// Law violations are never exceptions; they come back as report witnesses.
/// Exceptions are reserved for structurally unusable input.
enum class Errc {
  NonComposable,
  UnknownObject,
  UnknownMorphism,
  MalformedTable,
  MalformedMap,
  ArityMismatch,
  IndexOutOfRange,
  StructureMismatch,
  NotComposable,
  NotSymmetric,
  BaseMismatch,
  DanglingHom,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonComposable: return "NonComposable";
    case Errc::UnknownObject: return "UnknownObject";
    case Errc::UnknownMorphism: return "UnknownMorphism";
    case Errc::MalformedTable: return "MalformedTable";
    case Errc::MalformedMap: return "MalformedMap";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::StructureMismatch: return "StructureMismatch";
    case Errc::NotComposable: return "NotComposable";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::DanglingHom: return "DanglingHom";
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

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace vcat
