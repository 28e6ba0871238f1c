#include "ordsgp/relation.hpp"

#include <sstream>

#include "ordsgp/error.hpp"

namespace ordsgp {

namespace detail {

std::vector<std::size_t> normalise_labels(std::span<const std::size_t> raw) {
  std::vector<std::size_t> out(raw.size());
  std::vector<std::size_t> seen;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::size_t id = 0;
    while (id < seen.size() && seen[id] != raw[i]) ++id;
    if (id == seen.size()) seen.push_back(raw[i]);
    out[i] = id;
  }
  return out;
}

}  // namespace detail

EquivalenceRelation::EquivalenceRelation(std::vector<std::size_t> normalised)
    : class_of_(std::move(normalised)) {
  const std::size_t n = class_of_.size();
  for (Element a = 0; a < n; ++a) {
    if (class_of_[a] == classes_.size()) classes_.emplace_back(n);
    classes_[class_of_[a]].insert(a);
  }
}

EquivalenceRelation EquivalenceRelation::from_classes(
    std::size_t n, const std::vector<ElementSet>& classes) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw(n, unset);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].universe() != n || classes[c].empty())
      throw PreconditionError(PreconditionFailure::NotPartition, {},
                              "class " + std::to_string(c) + " is empty or foreign");
    for (Element a : classes[c]) {
      if (raw[a] != unset)
        throw PreconditionError(PreconditionFailure::NotPartition, {a},
                                "element in two classes");
      raw[a] = c;
    }
  }
  for (Element a = 0; a < n; ++a)
    if (raw[a] == unset)
      throw PreconditionError(PreconditionFailure::NotPartition, {a},
                              "element not covered");
  return EquivalenceRelation(detail::normalise_labels(raw));
}

EquivalenceRelation EquivalenceRelation::identity(std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  return EquivalenceRelation(std::move(labels));
}

EquivalenceRelation EquivalenceRelation::universal(std::size_t n) {
  return EquivalenceRelation(std::vector<std::size_t>(n, 0));
}

bool EquivalenceRelation::refines(const EquivalenceRelation& other) const {
  for (const auto& cls : classes_) {
    const auto target = other.class_of(cls.first());
    for (Element a : cls)
      if (other.class_of(a) != target) return false;
  }
  return true;
}

EquivalenceRelation EquivalenceRelation::intersect(
    const EquivalenceRelation& other) const {
  std::vector<std::size_t> raw(size());
  for (Element a = 0; a < size(); ++a)
    raw[a] = class_of_[a] * other.class_count() + other.class_of(a);
  return EquivalenceRelation(detail::normalise_labels(raw));
}

std::string EquivalenceRelation::to_string() const {
  std::ostringstream os;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (c) os << ' ';
    os << classes_[c];
  }
  return os.str();
}

}  // namespace ordsgp
