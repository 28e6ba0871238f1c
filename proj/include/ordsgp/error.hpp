#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordsgp {

/// Index of an element of a finite carrier. Indices are the canonical
/// identity of elements; display names are cosmetic.
using Element = std::uint32_t;

/// Left, right or two-sided: used for ideals and for the side of a failed
/// compatibility check.
enum class Side { Left, Right, TwoSided };

const char* to_string(Side side) noexcept;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ValidationFailure {
  IndexOutOfRange,
  NotAssociative,
  NotAntisymmetric,
  NotTransitive,
  NotCompatible,
  NotClosed,
};

const char* to_string(ValidationFailure failure) noexcept;

/// A table or order that does not form an ordered semigroup. The witness is
/// the least violating tuple, e.g. (i,j,k) for NotAssociative or (a,b,c) for
/// NotCompatible together with side().
class ValidationError : public Error {
 public:
  ValidationError(ValidationFailure failure, std::vector<Element> witness,
                  Side side = Side::TwoSided);

  ValidationFailure failure() const noexcept { return failure_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }
  Side side() const noexcept { return side_; }

 private:
  ValidationFailure failure_;
  std::vector<Element> witness_;
  Side side_;
};

enum class PreconditionFailure {
  EmptySet,
  NotRegular,
  NotIdempotent,
  NotPartition,
  NotCompleteSemilattice,
  NotClosedClass,
  NoJoin,
  NotDistributive,
  NotMorphism,
};

const char* to_string(PreconditionFailure failure) noexcept;

class PreconditionError : public Error {
 public:
  PreconditionError(PreconditionFailure failure, std::vector<Element> witness,
                    const std::string& detail = {});

  PreconditionFailure failure() const noexcept { return failure_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  PreconditionFailure failure_;
  std::vector<Element> witness_;
};

/// A scan whose cost grows exponentially was asked for more elements than
/// the configured guard allows (see limits.hpp).
class SizeLimitError : public Error {
 public:
  SizeLimitError(std::string what, std::size_t requested, std::size_t limit);

  std::size_t requested() const noexcept { return requested_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

class UnknownNameError : public Error {
 public:
  UnknownNameError(const std::string& category, const std::string& name);
};

/// Malformed .osg/.sgp text; line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ordsgp
