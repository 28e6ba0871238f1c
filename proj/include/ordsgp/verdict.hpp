#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ordsgp/error.hpp"

namespace ordsgp {

using Tuple = std::vector<Element>;

enum class Status { Holds, Fails, NotApplicable };

const char* to_string(Status status) noexcept;

/// Outcome of a structure-level predicate.
///
/// On failure `counterexample` is the lexicographically least tuple that
/// violates the defining condition. On success `witnesses` lists, for every
/// quantified tuple, the tuple followed by its least witness (empty for
/// predicates without an existential part).
struct Verdict {
  Status status = Status::Holds;
  Tuple counterexample;
  std::vector<Tuple> witnesses;
  std::string note;

  bool holds() const noexcept { return status == Status::Holds; }
  bool applicable() const noexcept { return status != Status::NotApplicable; }

  static Verdict pass(std::vector<Tuple> witnesses = {});
  static Verdict fail(Tuple counterexample, std::string note = {});
  static Verdict not_applicable(std::string note);
};

/// One side of a theorem's equivalence, evaluated from definitions.
struct ConditionVerdict {
  std::string label;
  bool holds = false;
  Tuple counterexample;
  std::string note;
  /// Conditions with the same clause must agree with each other; a bundle
  /// holding two separate equivalences uses clauses 0 and 1.
  std::size_t clause = 0;
};

/// The conditions of one theorem evaluated independently on one structure.
/// Results whose premise (e.g. "S is regular") fails are not applicable and
/// carry no verdicts: agree is empty rather than vacuously true.
struct BundleResult {
  std::string id;
  std::string statement;
  std::string premise;
  bool applicable = true;
  std::vector<ConditionVerdict> conditions;
  std::optional<bool> agree;

  bool disagrees() const noexcept { return agree.has_value() && !*agree; }
};

/// Computes agree from the condition verdicts (clause-wise equality).
void settle(BundleResult& result);

BundleResult not_applicable_bundle(std::string id, std::string statement,
                                   std::string premise);

ConditionVerdict condition(std::string label, const Verdict& verdict,
                           std::size_t clause = 0);

}  // namespace ordsgp
