#include "ordsgp/ideals.hpp"

#include <algorithm>

#include "ordsgp/elements.hpp"
#include "ordsgp/limits.hpp"

namespace ordsgp {

ElementSet principal_ideal(const OrderedSemigroup& s, Element a, Side side) {
  const std::size_t n = s.size();
  ElementSet generators = s.singleton(a);
  for (Element x = 0; x < n; ++x) {
    if (side != Side::Right) generators.insert(s.mul(x, a));
    if (side != Side::Left) generators.insert(s.mul(a, x));
    if (side == Side::TwoSided)
      for (Element y = 0; y < n; ++y) generators.insert(s.mul(x, a, y));
  }
  return down_closure(s, generators);
}

IdealCheck is_ideal(const OrderedSemigroup& s, const ElementSet& candidate,
                    Side side) {
  if (candidate.empty())
    throw PreconditionError(PreconditionFailure::EmptySet, {}, "ideal candidate");
  const std::size_t n = s.size();
  if (side != Side::Right) {
    for (Element x = 0; x < n; ++x)
      for (Element i : candidate)
        if (!candidate.contains(s.mul(x, i)))
          return {false, {x, i}, "left absorption"};
  }
  if (side != Side::Left) {
    for (Element i : candidate)
      for (Element x = 0; x < n; ++x)
        if (!candidate.contains(s.mul(i, x)))
          return {false, {i, x}, "right absorption"};
  }
  for (Element t = 0; t < n; ++t) {
    if (candidate.contains(t)) continue;
    for (Element h : candidate)
      if (s.leq(t, h)) return {false, {t, h}, "down closure"};
  }
  return {};
}

std::vector<ElementSet> enumerate_ideals(const OrderedSemigroup& s, Side side) {
  const std::size_t n = s.size();
  if (n > limits().ideal_scan)
    throw SizeLimitError("ideal enumeration", n, limits().ideal_scan);
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet set(n);
    for (Element a = 0; a < n; ++a)
      if (mask >> a & 1u) set.insert(a);
    if (is_ideal(s, set, side)) out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

const char* to_string(GreenKind kind) noexcept {
  switch (kind) {
    case GreenKind::L: return "L";
    case GreenKind::R: return "R";
    case GreenKind::J: return "J";
    case GreenKind::H: return "H";
  }
  return "?";
}

GreenKind parse_green_kind(const std::string& text) {
  if (text == "L") return GreenKind::L;
  if (text == "R") return GreenKind::R;
  if (text == "J") return GreenKind::J;
  if (text == "H") return GreenKind::H;
  throw UnknownNameError("Green relation", text);
}

namespace {

EquivalenceRelation by_principal_ideal(const OrderedSemigroup& s, Side side) {
  std::vector<ElementSet> ideals;
  ideals.reserve(s.size());
  for (Element a = 0; a < s.size(); ++a)
    ideals.push_back(principal_ideal(s, a, side));
  return EquivalenceRelation::from_labels(std::span<const ElementSet>(ideals));
}

}  // namespace

EquivalenceRelation green_relation(const OrderedSemigroup& s, GreenKind kind) {
  switch (kind) {
    case GreenKind::L: return by_principal_ideal(s, Side::Left);
    case GreenKind::R: return by_principal_ideal(s, Side::Right);
    case GreenKind::J: return by_principal_ideal(s, Side::TwoSided);
    case GreenKind::H:
      return by_principal_ideal(s, Side::Left)
          .intersect(by_principal_ideal(s, Side::Right));
  }
  throw Error("unreachable Green kind");
}

ElementSet principal_filter(const OrderedSemigroup& s, Element a) {
  const std::size_t n = s.size();
  ElementSet filter = s.singleton(a);
  for (bool changed = true; changed;) {
    ElementSet next = up_closure(s, filter);
    for (Element x : filter)
      for (Element y : filter) next.insert(s.mul(x, y));
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (filter.contains(s.mul(x, y))) {
          next.insert(x);
          next.insert(y);
        }
    changed = !(next == filter);
    filter = std::move(next);
  }
  return filter;
}

EquivalenceRelation n_relation(const OrderedSemigroup& s) {
  std::vector<ElementSet> filters;
  filters.reserve(s.size());
  for (Element a = 0; a < s.size(); ++a) filters.push_back(principal_filter(s, a));
  return EquivalenceRelation::from_labels(std::span<const ElementSet>(filters));
}

BundleResult lemma_bi13_check(const OrderedSemigroup& s, Element e, Element f) {
  const std::size_t n = s.size();
  for (Element a = 0; a < n; ++a)
    if (!element_regularity(s, a).is_regular())
      throw PreconditionError(PreconditionFailure::NotRegular, {a});
  const ElementSet idempotents = ordered_idempotents(s);
  for (Element x : {e, f})
    if (x >= n || !idempotents.contains(x))
      throw PreconditionError(PreconditionFailure::NotIdempotent, {x});

  const ElementSet all = s.full_set();
  const ElementSet single_e = s.singleton(e);
  const ElementSet single_f = s.singleton(f);
  const ElementSet eS = down_closure(s, set_product(s, single_e, all));
  const ElementSet Se = down_closure(s, set_product(s, all, single_e));

  BundleResult result;
  result.id = "BI13";
  result.statement = "L n (eS] = (eL], R n (Se] = (Re], (Sf] n (eS] = (eSf]";
  result.premise = "S regular, e and f ordered idempotents";
  result.conditions.push_back({"premise", true, {}, "", 0});

  ConditionVerdict left{"L n (eS] = (eL] for every left ideal L", true, {}, "", 0};
  for (const auto& ideal : enumerate_ideals(s, Side::Left)) {
    if (!((ideal & eS) == down_closure(s, set_product(s, single_e, ideal)))) {
      left.holds = false;
      left.counterexample = ideal.members();
      left.note = "left ideal " + ideal.to_string();
      break;
    }
  }
  result.conditions.push_back(std::move(left));

  ConditionVerdict right{"R n (Se] = (Re] for every right ideal R", true, {}, "", 0};
  for (const auto& ideal : enumerate_ideals(s, Side::Right)) {
    if (!((ideal & Se) == down_closure(s, set_product(s, ideal, single_e)))) {
      right.holds = false;
      right.counterexample = ideal.members();
      right.note = "right ideal " + ideal.to_string();
      break;
    }
  }
  result.conditions.push_back(std::move(right));

  const ElementSet Sf = down_closure(s, set_product(s, all, single_f));
  const ElementSet eSf =
      down_closure(s, set_product(s, set_product(s, single_e, all), single_f));
  ConditionVerdict both{"(Sf] n (eS] = (eSf]", (Sf & eS) == eSf, {}, "", 0};
  if (!both.holds) both.counterexample = {e, f};
  result.conditions.push_back(std::move(both));

  settle(result);
  return result;
}

}  // namespace ordsgp
