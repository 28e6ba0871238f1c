#pragma once

#include <string>
#include <vector>

#include "ordsgp/element_set.hpp"
#include "ordsgp/relation.hpp"
#include "ordsgp/structure.hpp"
#include "ordsgp/verdict.hpp"

namespace ordsgp {

/// L(a) = ({a} u Sa], R(a) = ({a} u aS], I(a) = ({a} u Sa u aS u SaS].
/// On a regular structure these reduce to (Sa], (aS] and (SaS].
ElementSet principal_ideal(const OrderedSemigroup& s, Element a, Side side);

struct IdealCheck {
  bool holds = true;
  /// (s, i) with si outside I for left absorption, (i, s) for right
  /// absorption, (t, h) with t <= h for down-closure.
  Tuple counterexample;
  std::string reason;

  explicit operator bool() const noexcept { return holds; }
};

/// Absorption on the given side(s), then (I] subset of I. Throws
/// PreconditionError(EmptySet) for an empty I.
IdealCheck is_ideal(const OrderedSemigroup& s, const ElementSet& candidate,
                    Side side);

/// All ideals of the side, ascending by size then lexicographically. Throws
/// SizeLimitError above limits().ideal_scan.
std::vector<ElementSet> enumerate_ideals(const OrderedSemigroup& s, Side side);

enum class GreenKind { L, R, J, H };

const char* to_string(GreenKind kind) noexcept;
GreenKind parse_green_kind(const std::string& text);

/// Partition by equality of principal ideals; H = L n R.
EquivalenceRelation green_relation(const OrderedSemigroup& s, GreenKind kind);

/// N(a): the least subset containing a that is a subsemigroup, prime
/// (ab in F implies a, b in F) and upward closed.
ElementSet principal_filter(const OrderedSemigroup& s, Element a);

/// a N b iff N(a) = N(b).
EquivalenceRelation n_relation(const OrderedSemigroup& s);

/// Checks, for every left ideal L and right ideal R of a regular structure,
/// L n (eS] = (eL], R n (Se] = (Re] and (Sf] n (eS] = (eSf]. The first
/// condition is the premise, so agree means every identity holds.
/// Throws PreconditionError(NotRegular / NotIdempotent).
BundleResult lemma_bi13_check(const OrderedSemigroup& s, Element e, Element f);

}  // namespace ordsgp
