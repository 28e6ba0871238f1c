#pragma once

// Small named structures shared by the unit and acceptance tests.

#include <vector>

#include "ordsgp/enumeration.hpp"
#include "ordsgp/power.hpp"
#include "ordsgp/structure.hpp"

namespace fixtures {

using ordsgp::Element;
using ordsgp::FiniteSemigroup;
using ordsgp::OrderedSemigroup;
using ordsgp::OrderPair;

inline OrderedSemigroup make(const std::vector<std::vector<Element>>& rows,
                             const std::vector<OrderPair>& pairs = {}) {
  return OrderedSemigroup::validate(rows, pairs);
}

/// One element.
inline OrderedSemigroup t1() { return make({{0}}); }

/// Two-element chain under min, 0 <= 1.
inline OrderedSemigroup sl2() { return make({{0, 0}, {0, 1}}, {{0, 1}}); }

/// min under the reversed chain 1 <= 0.
inline OrderedSemigroup sl2_reversed() { return make({{0, 0}, {0, 1}}, {{1, 0}}); }

/// Left zeros: xy = x, discrete order.
inline OrderedSemigroup lz2() { return make({{0, 0}, {1, 1}}); }

/// Right zeros: xy = y, discrete order.
inline OrderedSemigroup rz2() { return make({{0, 1}, {0, 1}}); }

/// Null semigroup: xy = 0, discrete order.
inline OrderedSemigroup null2() { return make({{0, 0}, {0, 0}}); }

/// P_f of the 2-group: A = {0}, B = {1}, C = {0,1}; A, B below C.
inline OrderedSemigroup pz2() {
  return make({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}}, {{0, 2}, {1, 2}});
}

/// The cyclic group of order 2.
inline FiniteSemigroup z2() { return FiniteSemigroup::from_rows({{0, 1}, {1, 0}}); }
inline FiniteSemigroup left_zero2() { return FiniteSemigroup::from_rows({{0, 0}, {1, 1}}); }
inline FiniteSemigroup null2_plain() { return FiniteSemigroup::from_rows({{0, 0}, {0, 0}}); }
inline FiniteSemigroup t1_plain() { return FiniteSemigroup::from_rows({{0}}); }

/// Every named ordered fixture.
inline std::vector<OrderedSemigroup> all() {
  return {t1(), sl2(), sl2_reversed(), lz2(), rz2(), null2(), pz2()};
}

/// Ordered fixtures whose pairs all have joins and whose multiplication
/// distributes over them.
inline std::vector<OrderedSemigroup> join_closed() {
  return {t1(), sl2(), sl2_reversed(), pz2(),
          ordsgp::power_ordered_semigroup(left_zero2()),
          ordsgp::power_ordered_semigroup(null2_plain())};
}

/// All ordered semigroups with at most n elements, in stream order.
inline std::vector<OrderedSemigroup> up_to(std::size_t n) {
  std::vector<OrderedSemigroup> out;
  for (std::size_t k = 1; k <= n; ++k) {
    auto batch = ordsgp::enumerate_ordered_semigroups(k);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace fixtures
