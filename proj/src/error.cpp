#include "ghgeo/error.hpp"

namespace ghgeo {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::LabelMismatch: return "LabelMismatch";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::EmptySpace: return "EmptySpace";
    case ErrorKind::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::Asymmetric: return "Asymmetric";
    case ErrorKind::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorKind::TriangleViolation: return "TriangleViolation";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorKind::NotANet: return "NotANet";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::EmptyRelation: return "EmptyRelation";
    case ErrorKind::NotACorrespondence: return "NotACorrespondence";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorKind::TOutOfRange: return "TOutOfRange";
    case ErrorKind::DegenerateGeodesic: return "DegenerateGeodesic";
    case ErrorKind::NotCertified: return "NotCertified";
    case ErrorKind::ParameterOrder: return "ParameterOrder";
    case ErrorKind::BadResolution: return "BadResolution";
    case ErrorKind::TooCoarse: return "TooCoarse";
    case ErrorKind::SizeOverflow: return "SizeOverflow";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::vector<std::size_t> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace ghgeo
