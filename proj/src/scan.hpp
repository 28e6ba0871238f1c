#pragma once

// Quantifier scans shared by the predicate modules. Every scan walks tuples
// in lexicographic order, so the first failure found is the least
// counterexample and the first witness found is the least witness.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ordsgp/structure.hpp"
#include "ordsgp/verdict.hpp"

namespace ordsgp::detail {

using Domain = std::vector<Element>;

inline Domain carrier(std::size_t n) {
  Domain d(n);
  for (Element i = 0; i < n; ++i) d[i] = i;
  return d;
}

inline Domain members(const ElementSet& set) { return set.members(); }

template <typename Pred>
std::optional<Element> least(std::size_t n, Pred&& pred) {
  for (Element x = 0; x < n; ++x)
    if (pred(x)) return x;
  return std::nullopt;
}

template <typename Pred>
std::optional<std::pair<Element, Element>> least_pair(std::size_t n, Pred&& pred) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (pred(x, y)) return std::pair{x, y};
  return std::nullopt;
}

/// Calls visit(tuple) for every tuple of the product of domains in
/// lexicographic order until it returns false. Returns false if stopped.
template <typename Visit>
bool for_each_tuple(const std::vector<Domain>& domains, Visit&& visit) {
  for (const auto& d : domains)
    if (d.empty()) return true;
  const std::size_t k = domains.size();
  std::vector<std::size_t> idx(k, 0);
  Tuple tuple(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) tuple[i] = domains[i][idx[i]];
    if (!visit(static_cast<const Tuple&>(tuple))) return false;
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < domains[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) return true;
    }
    if (k == 0) return true;
  }
}

/// For all tuples, find(tuple) must return a witness tuple. On success the
/// verdict lists tuple ++ witness for every tuple.
template <typename Find>
Verdict forall_exists(const std::vector<Domain>& domains, Find&& find) {
  std::vector<Tuple> witnesses;
  Tuple failure;
  bool ok = for_each_tuple(domains, [&](const Tuple& t) {
    std::optional<Tuple> w = find(t);
    if (!w) {
      failure = t;
      return false;
    }
    Tuple row = t;
    row.insert(row.end(), w->begin(), w->end());
    witnesses.push_back(std::move(row));
    return true;
  });
  return ok ? Verdict::pass(std::move(witnesses)) : Verdict::fail(std::move(failure));
}

/// For all tuples, check(tuple) must hold.
template <typename Check>
Verdict forall(const std::vector<Domain>& domains, Check&& check) {
  Tuple failure;
  bool ok = for_each_tuple(domains, [&](const Tuple& t) {
    if (check(t)) return true;
    failure = t;
    return false;
  });
  return ok ? Verdict::pass() : Verdict::fail(std::move(failure));
}

inline std::optional<Tuple> as_witness(std::optional<Element> x) {
  if (!x) return std::nullopt;
  return Tuple{*x};
}

inline std::optional<Tuple> as_witness(std::optional<std::pair<Element, Element>> p) {
  if (!p) return std::nullopt;
  return Tuple{p->first, p->second};
}

inline Verdict both(Verdict a, const Verdict& b) {
  if (!a.holds()) return a;
  if (!b.holds()) return b;
  a.witnesses.insert(a.witnesses.end(), b.witnesses.begin(), b.witnesses.end());
  return a;
}

inline Verdict from_bool(bool holds) {
  return holds ? Verdict::pass() : Verdict::fail({});
}

}  // namespace ordsgp::detail
