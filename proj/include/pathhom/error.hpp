#pragma once

#include <stdexcept>
#include <string>

namespace pathhom {

enum class ErrorKind {
  SelfLoop,
  UnknownVertex,
  DuplicateVertex,
  CycleTooShort,
  Mismatch,
  NotADigraphMap,
  BudgetExceeded,
  NotACycle,
  NotInOmega2,
  StateSpaceTooLarge,
  NotARetraction,
  BadRestriction,
  NotTraversable,
  BadEndpoints,
  NotDouble,
  NotSperner,
  SideVerticesPresent,
  BadTriangulation,
  ParseError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pathhom
