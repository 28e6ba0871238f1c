#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ordsgp/structure.hpp"
#include "ordsgp/verdict.hpp"

namespace ordsgp {

/// Nonempty subsets of {0..n-1} sorted by size, then lexicographically.
/// This is the carrier order of P_f.
std::vector<std::vector<Element>> power_carrier(std::size_t n);

/// P_f(F): nonempty subsets under the set product, ordered by inclusion.
/// Throws SizeLimitError when |F| exceeds limits().power_base.
OrderedSemigroup power_ordered_semigroup(const FiniteSemigroup& f);

/// Index of the singleton {x} in the P_f carrier (the map l).
Element singleton_index(std::size_t base_size, Element x);

/// Map between carriers; map[i] is the image of element i.
struct SemigroupMorphism {
  std::vector<Element> map;

  Element operator()(Element a) const { return map[a]; }
};

/// Least upper bound of a and b in S's order, if it exists.
std::optional<Element> join(const OrderedSemigroup& s, Element a, Element b);

/// phi : P_f(F) -> S with phi(A) = join of f(a) over a in A. The target must
/// have all pairwise joins (NoJoin otherwise) and multiplication must
/// distribute over them (NotDistributive); f must be a homomorphism
/// (NotMorphism). The result is checked to be an ordered homomorphism with
/// phi({x}) = f(x).
SemigroupMorphism universal_extension(const FiniteSemigroup& f,
                                      const OrderedSemigroup& s,
                                      std::span<const Element> hom);

/// All semigroup homomorphisms F -> S, maps in lexicographic order.
std::vector<SemigroupMorphism> homomorphisms(const FiniteSemigroup& f,
                                             const OrderedSemigroup& s);

/// Textbook properties of unordered semigroups, by brute force on F.
bool is_group(const FiniteSemigroup& f);
bool is_left_group(const FiniteSemigroup& f);
bool is_completely_regular(const FiniteSemigroup& f);

enum class PowerProperty { TSimple, LeftGroupLike, CompletelyRegular };

const char* to_string(PowerProperty property) noexcept;
PowerProperty parse_power_property(std::string_view text);

/// Condition 1: F is a group / left group / completely regular semigroup.
/// Condition 2: P_f(F) is t-simple / left group like / completely regular.
BundleResult power_correspondence_check(const FiniteSemigroup& f,
                                        PowerProperty property);

}  // namespace ordsgp
