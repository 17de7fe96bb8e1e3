#include "pathhom/arith.hpp"
#include "pathhom/error.hpp"

namespace pathhom {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::CycleTooShort: return "CycleTooShort";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::NotADigraphMap: return "NotADigraphMap";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::NotInOmega2: return "NotInOmega2";
    case ErrorKind::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case ErrorKind::NotARetraction: return "NotARetraction";
    case ErrorKind::BadRestriction: return "BadRestriction";
    case ErrorKind::NotTraversable: return "NotTraversable";
    case ErrorKind::BadEndpoints: return "BadEndpoints";
    case ErrorKind::NotDouble: return "NotDouble";
    case ErrorKind::NotSperner: return "NotSperner";
    case ErrorKind::SideVerticesPresent: return "SideVerticesPresent";
    case ErrorKind::BadTriangulation: return "BadTriangulation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

const char* ring_name(Ring ring) { return ring == Ring::Q ? "q" : "z"; }

}  // namespace pathhom
