#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "ordsgp/classification.hpp"
#include "ordsgp/relation.hpp"
#include "ordsgp/structure.hpp"
#include "ordsgp/verdict.hpp"

namespace ordsgp {

/// Congruence flags of an equivalence on S. Counterexamples:
///   left_congruence      (a, b, c) with a rho b but not ca rho cb
///   right_congruence     (a, b, c) with a rho b but not ac rho bc
///   semilattice          (a) with not a rho a^2, or (a, b) with not ab rho ba
///   complete_semilattice (a, b) with a <= b but not a rho ab
/// semilattice and complete_semilattice include the weaker flags.
struct RelationProperties {
  Verdict left_congruence;
  Verdict right_congruence;
  Verdict congruence;
  Verdict semilattice;
  Verdict complete_semilattice;
};

/// Throws PreconditionError(NotPartition) if rho is over a different carrier.
RelationProperties relation_properties(const OrderedSemigroup& s,
                                       const EquivalenceRelation& rho);

bool is_complete_semilattice_congruence(const OrderedSemigroup& s,
                                        const EquivalenceRelation& rho);

/// The least complete semilattice congruence, computed through principal
/// filters (the relation N).
EquivalenceRelation least_csc(const OrderedSemigroup& s);

/// S as a complete semilattice Y of the classes of rho.
struct Decomposition {
  EquivalenceRelation rho;
  std::size_t quotient_size = 0;
  /// quotient_table[alpha * quotient_size + beta] = alpha beta
  std::vector<std::size_t> quotient_table;
  /// quotient_order[alpha * quotient_size + beta]: alpha precedes beta,
  /// i.e. alpha beta = alpha
  std::vector<bool> quotient_order;
  /// Conditions (1)-(4): disjoint, cover, S_a S_b in S_ab, and
  /// S_b n (S_a] nonempty implies b precedes a.
  std::vector<Verdict> conditions;
  bool order_is_partial = false;
  std::vector<ClassificationReport> class_types;

  std::size_t product(std::size_t alpha, std::size_t beta) const {
    return quotient_table[alpha * quotient_size + beta];
  }
  bool precedes(std::size_t alpha, std::size_t beta) const {
    return quotient_order[alpha * quotient_size + beta];
  }
  bool all_conditions_hold() const;
};

/// Throws PreconditionError(NotCompleteSemilattice) when rho fails the
/// complete semilattice flag and PreconditionError(NotClosedClass) when a
/// class product is not contained in a single class.
Decomposition decompose(const OrderedSemigroup& s,
                        const EquivalenceRelation& rho);

/// Visits every partition of {0..n-1} as a restricted-growth string in
/// lexicographic order. The visitor returns false to stop early. Throws
/// SizeLimitError above limits().partition_scan.
void for_each_partition(
    std::size_t n,
    const std::function<bool(const std::vector<std::size_t>&)>& visit);

/// Every complete semilattice congruence on S, by full partition scan.
std::vector<EquivalenceRelation> complete_semilattice_congruences(
    const OrderedSemigroup& s);

/// Whether some complete semilattice congruence has every class satisfying
/// the named predicate inside its induced substructure (partition scan).
bool is_complete_semilattice_of(const OrderedSemigroup& s,
                                std::string_view class_predicate);

/// Whether every class of rho is a subsemigroup satisfying the named
/// predicate in its induced substructure.
bool classes_satisfy(const OrderedSemigroup& s, const EquivalenceRelation& rho,
                     std::string_view class_predicate);

/// Registered structure theorems:
///   CR-LEASTCSC, CR-CSDECOMP, CR-HCLASS-GL, CL-DECOMP, LCL-LEASTCSC,
///   LCL-DECOMP
const std::vector<std::string_view>& structure_theorem_ids();

/// Throws UnknownNameError.
BundleResult structure_theorem_check(const OrderedSemigroup& s,
                                     std::string_view id);

}  // namespace ordsgp
