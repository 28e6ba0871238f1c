#include "ordsgp/error.hpp"

#include <sstream>

namespace ordsgp {
namespace {

std::string join_tuple(const std::vector<Element>& witness) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) os << ',';
    os << witness[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

const char* to_string(Side side) noexcept {
  switch (side) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::TwoSided: return "two-sided";
  }
  return "?";
}

const char* to_string(ValidationFailure failure) noexcept {
  switch (failure) {
    case ValidationFailure::IndexOutOfRange: return "IndexOutOfRange";
    case ValidationFailure::NotAssociative: return "NotAssociative";
    case ValidationFailure::NotAntisymmetric: return "NotAntisymmetric";
    case ValidationFailure::NotTransitive: return "NotTransitive";
    case ValidationFailure::NotCompatible: return "NotCompatible";
    case ValidationFailure::NotClosed: return "NotClosed";
  }
  return "?";
}

const char* to_string(PreconditionFailure failure) noexcept {
  switch (failure) {
    case PreconditionFailure::EmptySet: return "EmptySet";
    case PreconditionFailure::NotRegular: return "NotRegular";
    case PreconditionFailure::NotIdempotent: return "NotIdempotent";
    case PreconditionFailure::NotPartition: return "NotPartition";
    case PreconditionFailure::NotCompleteSemilattice:
      return "NotCompleteSemilattice";
    case PreconditionFailure::NotClosedClass: return "NotClosedClass";
    case PreconditionFailure::NoJoin: return "NoJoin";
    case PreconditionFailure::NotDistributive: return "NotDistributive";
    case PreconditionFailure::NotMorphism: return "NotMorphism";
  }
  return "?";
}

ValidationError::ValidationError(ValidationFailure failure,
                                 std::vector<Element> witness, Side side)
    : Error(std::string(to_string(failure)) + join_tuple(witness) +
            (failure == ValidationFailure::NotCompatible
                 ? std::string(" on the ") + to_string(side) + " side"
                 : std::string())),
      failure_(failure),
      witness_(std::move(witness)),
      side_(side) {}

PreconditionError::PreconditionError(PreconditionFailure failure,
                                     std::vector<Element> witness,
                                     const std::string& detail)
    : Error(std::string(to_string(failure)) + join_tuple(witness) +
            (detail.empty() ? std::string() : ": " + detail)),
      failure_(failure),
      witness_(std::move(witness)) {}

SizeLimitError::SizeLimitError(std::string what, std::size_t requested,
                               std::size_t limit)
    : Error("SizeLimit: " + what + " requested for size " +
            std::to_string(requested) + ", limit is " + std::to_string(limit) +
            " (see ORDSGP_LIMITS)"),
      requested_(requested),
      limit_(limit) {}

UnknownNameError::UnknownNameError(const std::string& category,
                                   const std::string& name)
    : Error("unknown " + category + " '" + name + "'") {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace ordsgp
