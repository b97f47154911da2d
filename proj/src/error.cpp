#include "lieeq/error.hpp"

namespace lieeq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorKind::NonDominantWeight: return "NonDominantWeight";
    case ErrorKind::WeightSystemTooLarge: return "WeightSystemTooLarge";
    case ErrorKind::NumericalInconsistency: return "NumericalInconsistency";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::SamplerStall: return "SamplerStall";
    case ErrorKind::ResolutionTooCoarse: return "ResolutionTooCoarse";
    case ErrorKind::CandidateSetTooLarge: return "CandidateSetTooLarge";
    case ErrorKind::DomainExceeded: return "DomainExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

}  // namespace lieeq
