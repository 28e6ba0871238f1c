#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordsgp/element_set.hpp"
#include "ordsgp/error.hpp"

namespace ordsgp {

using OrderPair = std::pair<Element, Element>;  // (lower, upper)

/// A finite semigroup given by its Cayley table (no order).
class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;

  /// Checks ranges and associativity; throws ValidationError with the least
  /// violating triple.
  static FiniteSemigroup from_rows(const std::vector<std::vector<Element>>& rows,
                                   std::vector<std::string> names = {});
  static FiniteSemigroup from_cells(std::size_t n, std::vector<Element> cells,
                                    std::vector<std::string> names = {});

  std::size_t size() const noexcept { return n_; }
  Element mul(Element a, Element b) const { return cells_[a * n_ + b]; }
  std::span<const Element> cells() const noexcept { return cells_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  friend bool operator==(const FiniteSemigroup& a, const FiniteSemigroup& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
  std::vector<std::string> names_;
};

enum class OrderCompletion {
  Reflexive,           // reflexive pairs added; transitivity must already hold
  ReflexiveTransitive, // reflexive-transitive closure taken before checking
};

/// A finite semigroup with a compatible partial order. Immutable once
/// constructed; every instance satisfies associativity, the partial-order
/// axioms and compatibility (a <= b implies ca <= cb and ac <= bc).
class OrderedSemigroup {
 public:
  OrderedSemigroup() = default;

  /// Validates table and order. Reflexive pairs are implied; transitivity is
  /// only completed when asked to. Throws ValidationError.
  static OrderedSemigroup validate(const FiniteSemigroup& semigroup,
                                   std::span<const OrderPair> pairs,
                                   OrderCompletion completion =
                                       OrderCompletion::Reflexive);

  static OrderedSemigroup validate(const std::vector<std::vector<Element>>& rows,
                                   std::span<const OrderPair> pairs,
                                   std::vector<std::string> names = {},
                                   OrderCompletion completion =
                                       OrderCompletion::Reflexive);

  /// From a full n*n relation matrix (row-major, leq[a*n+b] = a <= b).
  static OrderedSemigroup from_relation(const FiniteSemigroup& semigroup,
                                        const std::vector<bool>& leq);

  std::size_t size() const noexcept { return semigroup_.size(); }
  Element mul(Element a, Element b) const { return semigroup_.mul(a, b); }
  Element mul(Element a, Element b, Element c) const {
    return mul(mul(a, b), c);
  }
  bool leq(Element a, Element b) const { return leq_[a * size() + b] != 0; }

  /// (a] = {t : t <= a}
  const ElementSet& below(Element a) const { return below_[a]; }
  /// [a) = {t : a <= t}
  const ElementSet& above(Element a) const { return above_[a]; }

  const FiniteSemigroup& semigroup() const noexcept { return semigroup_; }
  const std::vector<std::string>& names() const noexcept {
    return semigroup_.names();
  }
  std::string name(Element a) const;

  /// Non-reflexive order pairs in ascending order.
  std::vector<OrderPair> order_pairs() const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet::full(size()); }
  ElementSet singleton(Element a) const { return ElementSet(size(), {a}); }

  friend bool operator==(const OrderedSemigroup& a, const OrderedSemigroup& b) {
    return a.semigroup_ == b.semigroup_ && a.leq_ == b.leq_;
  }

 private:
  OrderedSemigroup(FiniteSemigroup semigroup, std::vector<char> leq);

  friend OrderedSemigroup dual(const OrderedSemigroup& s);
  friend OrderedSemigroup induced_substructure(const OrderedSemigroup& s,
                                               const ElementSet& subset);

  FiniteSemigroup semigroup_;
  std::vector<char> leq_;
  std::vector<ElementSet> below_;
  std::vector<ElementSet> above_;
};

/// Same order, multiplication reversed: a *' b = b * a. Left notions of the
/// dual are the right notions of the original.
OrderedSemigroup dual(const OrderedSemigroup& s);

/// (X] = {t : t <= h for some h in X}
ElementSet down_closure(const OrderedSemigroup& s, const ElementSet& x);

/// [X) = {t : h <= t for some h in X}
ElementSet up_closure(const OrderedSemigroup& s, const ElementSet& x);

/// A.B = {ab : a in A, b in B}
ElementSet set_product(const OrderedSemigroup& s, const ElementSet& a,
                       const ElementSet& b);

/// The ordered subsemigroup on a product-closed subset. Element i of the
/// result is the i-th smallest member of the subset; names carry over.
/// Throws ValidationError(NotClosed, {a, b}) for the least a, b with ab
/// outside the subset.
OrderedSemigroup induced_substructure(const OrderedSemigroup& s,
                                      const ElementSet& subset);

/// Whether the subset is closed under the product.
bool is_subsemigroup(const OrderedSemigroup& s, const ElementSet& subset);

}  // namespace ordsgp
