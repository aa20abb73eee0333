#include "gj2d/error.hpp"

namespace gj2d {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FNotVertex: return "FNotVertex";
    case ErrorKind::NotSubadditive: return "NotSubadditive";
    case ErrorKind::NotDiagonallyConstrainedFace: return "NotDiagonallyConstrainedFace";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::NotDiagonallyConstrained: return "NotDiagonallyConstrained";
    case ErrorKind::NotGenuinely2D: return "NotGenuinely2D";
    case ErrorKind::MTooSmall: return "MTooSmall";
    case ErrorKind::Covered: return "Covered";
    case ErrorKind::DegeneratePerturbation: return "DegeneratePerturbation";
    case ErrorKind::SplitNotMinimal: return "SplitNotMinimal";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace gj2d
