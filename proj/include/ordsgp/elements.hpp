#pragma once

#include <optional>

#include "ordsgp/element_set.hpp"
#include "ordsgp/structure.hpp"

namespace ordsgp {

/// E<=(S) = {e : e <= e^2}
ElementSet ordered_idempotents(const OrderedSemigroup& s);

/// Per-element regularity flags with the least witness x for each:
///   regular             a <= a x a
///   completely_regular  a <= a^2 x a^2
///   left_regular        a <= x a^2
///   right_regular       a <= a^2 x
struct ElementRegularity {
  std::optional<Element> regular;
  std::optional<Element> completely_regular;
  std::optional<Element> left_regular;
  std::optional<Element> right_regular;

  bool is_regular() const noexcept { return regular.has_value(); }
  bool is_completely_regular() const noexcept {
    return completely_regular.has_value();
  }
  bool is_left_regular() const noexcept { return left_regular.has_value(); }
  bool is_right_regular() const noexcept { return right_regular.has_value(); }
};

ElementRegularity element_regularity(const OrderedSemigroup& s, Element a);

/// V<=(a) = {b : a <= aba and b <= bab}
ElementSet inverses_of(const OrderedSemigroup& s, Element a);

/// Least x with ab <= bxa.
std::optional<Element> h_commute_witness(const OrderedSemigroup& s, Element a,
                                         Element b);

enum class WitnessMode {
  Shared,       // one z with e <= za and e <= az
  Independent,  // e <= za and e <= az' with z, z' chosen separately
};

/// G_e = {a : a <= ea, a <= ae, e <= za and e <= az for some z}.
/// Throws PreconditionError(NotIdempotent) if e is not in E<=(S).
ElementSet group_component(const OrderedSemigroup& s, Element e,
                           WitnessMode mode = WitnessMode::Shared);

}  // namespace ordsgp
