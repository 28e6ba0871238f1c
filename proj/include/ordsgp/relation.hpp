#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ordsgp/element_set.hpp"

namespace ordsgp {

/// A partition of the carrier. Class ids are normalised by first
/// occurrence, so two relations are equal iff their class_of vectors are.
class EquivalenceRelation {
 public:
  EquivalenceRelation() = default;

  /// Elements with equal labels share a class.
  template <typename Label>
  static EquivalenceRelation from_labels(std::span<const Label> labels);

  /// Throws PreconditionError(NotPartition) if the classes overlap, miss an
  /// element or contain an empty class.
  static EquivalenceRelation from_classes(std::size_t n,
                                          const std::vector<ElementSet>& classes);

  static EquivalenceRelation identity(std::size_t n);
  static EquivalenceRelation universal(std::size_t n);

  std::size_t size() const noexcept { return class_of_.size(); }
  std::size_t class_count() const noexcept { return classes_.size(); }
  std::size_t class_of(Element a) const { return class_of_[a]; }
  const std::vector<std::size_t>& labels() const noexcept { return class_of_; }
  const std::vector<ElementSet>& classes() const noexcept { return classes_; }
  const ElementSet& class_containing(Element a) const {
    return classes_[class_of_[a]];
  }
  bool related(Element a, Element b) const {
    return class_of_[a] == class_of_[b];
  }

  /// Every class of *this lies inside a class of other (this is a subset of
  /// other as a relation).
  bool refines(const EquivalenceRelation& other) const;

  EquivalenceRelation intersect(const EquivalenceRelation& other) const;

  /// "{0,1} {2}"
  std::string to_string() const;

  friend bool operator==(const EquivalenceRelation& a,
                         const EquivalenceRelation& b) {
    return a.class_of_ == b.class_of_;
  }

 private:
  explicit EquivalenceRelation(std::vector<std::size_t> normalised);

  std::vector<std::size_t> class_of_;
  std::vector<ElementSet> classes_;
};

namespace detail {
std::vector<std::size_t> normalise_labels(std::span<const std::size_t> raw);
}  // namespace detail

template <typename Label>
EquivalenceRelation EquivalenceRelation::from_labels(
    std::span<const Label> labels) {
  // Map each label to the index of its first occurrence.
  std::vector<std::size_t> raw(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::size_t j = 0;
    while (!(labels[j] == labels[i])) ++j;
    raw[i] = j;
  }
  return EquivalenceRelation(detail::normalise_labels(raw));
}

}  // namespace ordsgp
