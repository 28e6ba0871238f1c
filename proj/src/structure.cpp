#include "ordsgp/structure.hpp"

#include <algorithm>

namespace ordsgp {
namespace {

void check_associative(std::size_t n, const std::vector<Element>& cells) {
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      for (Element k = 0; k < n; ++k) {
        Element left = cells[cells[i * n + j] * n + k];
        Element right = cells[i * n + cells[j * n + k]];
        if (left != right)
          throw ValidationError(ValidationFailure::NotAssociative, {i, j, k});
      }
}

}  // namespace

FiniteSemigroup FiniteSemigroup::from_rows(
    const std::vector<std::vector<Element>>& rows, std::vector<std::string> names) {
  const std::size_t n = rows.size();
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (Element i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw ValidationError(ValidationFailure::IndexOutOfRange, {i});
    cells.insert(cells.end(), rows[i].begin(), rows[i].end());
  }
  return from_cells(n, std::move(cells), std::move(names));
}

FiniteSemigroup FiniteSemigroup::from_cells(std::size_t n, std::vector<Element> cells,
                                            std::vector<std::string> names) {
  if (n == 0 || cells.size() != n * n)
    throw ValidationError(ValidationFailure::IndexOutOfRange, {});
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (cells[c] >= n)
      throw ValidationError(ValidationFailure::IndexOutOfRange,
                            {static_cast<Element>(c / n), static_cast<Element>(c % n)});
  if (!names.empty() && names.size() != n)
    throw ValidationError(ValidationFailure::IndexOutOfRange,
                          {static_cast<Element>(names.size())});
  check_associative(n, cells);
  FiniteSemigroup f;
  f.n_ = n;
  f.cells_ = std::move(cells);
  f.names_ = std::move(names);
  return f;
}

OrderedSemigroup::OrderedSemigroup(FiniteSemigroup semigroup, std::vector<char> leq)
    : semigroup_(std::move(semigroup)), leq_(std::move(leq)) {
  const std::size_t n = semigroup_.size();
  below_.assign(n, ElementSet(n));
  above_.assign(n, ElementSet(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (leq_[a * n + b]) {
        below_[b].insert(a);
        above_[a].insert(b);
      }
}

OrderedSemigroup OrderedSemigroup::validate(const FiniteSemigroup& semigroup,
                                            std::span<const OrderPair> pairs,
                                            OrderCompletion completion) {
  const std::size_t n = semigroup.size();
  std::vector<char> leq(n * n, 0);
  for (Element a = 0; a < n; ++a) leq[a * n + a] = 1;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n)
      throw ValidationError(ValidationFailure::IndexOutOfRange, {a, b});
    leq[a * n + b] = 1;
  }
  if (completion == OrderCompletion::ReflexiveTransitive) {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq[k * n + j]) leq[i * n + j] = 1;
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (leq[a * n + b] && leq[b * n + a])
        throw ValidationError(ValidationFailure::NotAntisymmetric, {a, b});
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      for (Element k = 0; k < n; ++k)
        if (leq[i * n + j] && leq[j * n + k] && !leq[i * n + k])
          throw ValidationError(ValidationFailure::NotTransitive, {i, j, k});
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!leq[a * n + b]) continue;
      for (Element c = 0; c < n; ++c) {
        if (!leq[semigroup.mul(c, a) * n + semigroup.mul(c, b)])
          throw ValidationError(ValidationFailure::NotCompatible, {a, b, c},
                                Side::Left);
        if (!leq[semigroup.mul(a, c) * n + semigroup.mul(b, c)])
          throw ValidationError(ValidationFailure::NotCompatible, {a, b, c},
                                Side::Right);
      }
    }
  return OrderedSemigroup(semigroup, std::move(leq));
}

OrderedSemigroup OrderedSemigroup::validate(
    const std::vector<std::vector<Element>>& rows, std::span<const OrderPair> pairs,
    std::vector<std::string> names, OrderCompletion completion) {
  return validate(FiniteSemigroup::from_rows(rows, std::move(names)), pairs,
                  completion);
}

OrderedSemigroup OrderedSemigroup::from_relation(const FiniteSemigroup& semigroup,
                                                 const std::vector<bool>& leq) {
  const std::size_t n = semigroup.size();
  std::vector<OrderPair> pairs;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (a != b && leq.at(a * n + b)) pairs.emplace_back(a, b);
  return validate(semigroup, pairs);
}

std::string OrderedSemigroup::name(Element a) const {
  const auto& names = semigroup_.names();
  return names.empty() ? std::to_string(a) : names[a];
}

std::vector<OrderPair> OrderedSemigroup::order_pairs() const {
  std::vector<OrderPair> pairs;
  const std::size_t n = size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (a != b && leq(a, b)) pairs.emplace_back(a, b);
  return pairs;
}

OrderedSemigroup dual(const OrderedSemigroup& s) {
  const std::size_t n = s.size();
  std::vector<Element> cells(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) cells[a * n + b] = s.mul(b, a);
  // Reversal preserves associativity and compatibility.
  return OrderedSemigroup(FiniteSemigroup::from_cells(n, std::move(cells), s.names()),
                          s.leq_);
}

ElementSet down_closure(const OrderedSemigroup& s, const ElementSet& x) {
  ElementSet out = s.empty_set();
  for (Element h : x) out |= s.below(h);
  return out;
}

ElementSet up_closure(const OrderedSemigroup& s, const ElementSet& x) {
  ElementSet out = s.empty_set();
  for (Element h : x) out |= s.above(h);
  return out;
}

ElementSet set_product(const OrderedSemigroup& s, const ElementSet& a,
                       const ElementSet& b) {
  ElementSet out = s.empty_set();
  for (Element x : a)
    for (Element y : b) out.insert(s.mul(x, y));
  return out;
}

bool is_subsemigroup(const OrderedSemigroup& s, const ElementSet& subset) {
  for (Element a : subset)
    for (Element b : subset)
      if (!subset.contains(s.mul(a, b))) return false;
  return true;
}

OrderedSemigroup induced_substructure(const OrderedSemigroup& s,
                                      const ElementSet& subset) {
  const auto members = subset.members();
  for (Element a : members)
    for (Element b : members)
      if (!subset.contains(s.mul(a, b)))
        throw ValidationError(ValidationFailure::NotClosed, {a, b});
  const std::size_t m = members.size();
  if (m == 0) throw ValidationError(ValidationFailure::NotClosed, {});
  std::vector<Element> position(s.size(), 0);
  for (Element i = 0; i < m; ++i) position[members[i]] = i;

  std::vector<Element> cells(m * m);
  std::vector<char> leq(m * m);
  std::vector<std::string> names;
  for (Element i = 0; i < m; ++i) {
    if (!s.names().empty()) names.push_back(s.names()[members[i]]);
    for (Element j = 0; j < m; ++j) {
      cells[i * m + j] = position[s.mul(members[i], members[j])];
      leq[i * m + j] = s.leq(members[i], members[j]) ? 1 : 0;
    }
  }
  return OrderedSemigroup(FiniteSemigroup::from_cells(m, std::move(cells), std::move(names)),
                          std::move(leq));
}

}  // namespace ordsgp
