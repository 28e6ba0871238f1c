#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordsgp/structure.hpp"
#include "ordsgp/verdict.hpp"

namespace ordsgp {

/// Registered predicate names, in report order:
///   regular, completely_regular, group_like, left_group_like,
///   right_group_like, simple, left_simple, right_simple, t_simple,
///   completely_simple, clifford, left_clifford, right_clifford, inverse,
///   h_commutative
///
/// left_group_like, right_group_like, clifford, left_clifford,
/// right_clifford and inverse are only defined on regular structures and
/// are NotApplicable elsewhere.
const std::vector<std::string_view>& predicate_names();

/// Throws UnknownNameError for an unregistered name.
Verdict predicate(const OrderedSemigroup& s, std::string_view name);

/// A predicate read as a class membership test: NotApplicable (premise of
/// regularity missing) counts as not belonging to the class.
bool satisfies(const OrderedSemigroup& s, std::string_view name);

/// Registered theorem-equivalence bundles:
///   CR-EQ5, GL-CHAR, GL-HREL, INV-COMM, CR-HCOMM, CR-INV, CR-HCLASS,
///   CL-EQ, CL-HCOMM, CL-CRESEF, CL-CRINV, LCL-EQ5, LCL-EQ2
const std::vector<std::string_view>& bundle_ids();

/// Evaluates every condition of the bundle independently. Bundles whose
/// premise fails come back not applicable. Throws UnknownNameError.
BundleResult equivalence_bundle(const OrderedSemigroup& s, std::string_view id);

struct ClassificationReport {
  bool regular = false;
  std::vector<std::pair<std::string, Verdict>> verdicts;
  std::vector<BundleResult> bundles;
  /// Implications that should hold between verdicts but did not, e.g.
  /// "clifford => completely_regular". Empty on every valid input.
  std::vector<std::string> implication_violations;

  const Verdict& verdict(std::string_view name) const;
  bool holds(std::string_view name) const { return verdict(name).holds(); }
};

struct ClassifyOptions {
  bool bundles = true;
};

ClassificationReport classify(const OrderedSemigroup& s,
                              ClassifyOptions options = {});

}  // namespace ordsgp
