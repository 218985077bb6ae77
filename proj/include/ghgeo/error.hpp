#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ghgeo {

/// Every domain failure raised by the library. The CLI reports the
/// enumerator name verbatim, so renaming one is a wire-format change.
enum class ErrorKind {
  NotSquare,
  LabelMismatch,
  DuplicateLabel,
  EmptySpace,
  NonFiniteEntry,
  NegativeEntry,
  NonzeroDiagonal,
  Asymmetric,
  ZeroOffDiagonal,
  TriangleViolation,
  EmptySubset,
  IndexOutOfRange,
  InvalidEpsilon,
  NotANet,
  BudgetExceeded,
  EmptyRelation,
  NotACorrespondence,
  TooLarge,
  LambdaOutOfRange,
  TOutOfRange,
  DegenerateGeodesic,
  NotCertified,
  ParameterOrder,
  BadResolution,
  TooCoarse,
  SizeOverflow,
  EmptyFamily,
  MalformedInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::size_t> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  /// Indices naming where the violation was found (may be empty).
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace ghgeo
