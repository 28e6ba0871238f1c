#include "ordsgp/elements.hpp"

#include "scan.hpp"

namespace ordsgp {

using detail::least;

ElementSet ordered_idempotents(const OrderedSemigroup& s) {
  ElementSet out = s.empty_set();
  for (Element e = 0; e < s.size(); ++e)
    if (s.leq(e, s.mul(e, e))) out.insert(e);
  return out;
}

ElementRegularity element_regularity(const OrderedSemigroup& s, Element a) {
  const std::size_t n = s.size();
  const Element a2 = s.mul(a, a);
  ElementRegularity r;
  r.regular = least(n, [&](Element x) { return s.leq(a, s.mul(a, x, a)); });
  r.completely_regular =
      least(n, [&](Element x) { return s.leq(a, s.mul(a2, x, a2)); });
  r.left_regular = least(n, [&](Element x) { return s.leq(a, s.mul(x, a2)); });
  r.right_regular = least(n, [&](Element x) { return s.leq(a, s.mul(a2, x)); });
  return r;
}

ElementSet inverses_of(const OrderedSemigroup& s, Element a) {
  ElementSet out = s.empty_set();
  for (Element b = 0; b < s.size(); ++b)
    if (s.leq(a, s.mul(a, b, a)) && s.leq(b, s.mul(b, a, b))) out.insert(b);
  return out;
}

std::optional<Element> h_commute_witness(const OrderedSemigroup& s, Element a,
                                         Element b) {
  const Element ab = s.mul(a, b);
  return least(s.size(), [&](Element x) { return s.leq(ab, s.mul(b, x, a)); });
}

ElementSet group_component(const OrderedSemigroup& s, Element e, WitnessMode mode) {
  const std::size_t n = s.size();
  if (e >= n || !s.leq(e, s.mul(e, e)))
    throw PreconditionError(PreconditionFailure::NotIdempotent, {e});
  ElementSet out = s.empty_set();
  for (Element a = 0; a < n; ++a) {
    if (!s.leq(a, s.mul(e, a)) || !s.leq(a, s.mul(a, e))) continue;
    bool reaches = false;
    if (mode == WitnessMode::Shared) {
      reaches = least(n, [&](Element z) {
                  return s.leq(e, s.mul(z, a)) && s.leq(e, s.mul(a, z));
                }).has_value();
    } else {
      reaches = least(n, [&](Element z) { return s.leq(e, s.mul(z, a)); }) &&
                least(n, [&](Element z) { return s.leq(e, s.mul(a, z)); });
    }
    if (reaches) out.insert(a);
  }
  return out;
}

}  // namespace ordsgp
