#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lieeq {

enum class ErrorKind {
  UnsupportedGroup,
  NonDominantWeight,
  WeightSystemTooLarge,
  NumericalInconsistency,
  SingularPoint,
  SamplerStall,
  ResolutionTooCoarse,
  CandidateSetTooLarge,
  DomainExceeded,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace lieeq
