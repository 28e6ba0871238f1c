#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ordsgp/classification.hpp"
#include "ordsgp/congruence.hpp"
#include "ordsgp/relation.hpp"
#include "ordsgp/structure.hpp"
#include "ordsgp/verdict.hpp"

namespace ordsgp {

nlohmann::json to_json(const OrderedSemigroup& s);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const BundleResult& b);
nlohmann::json to_json(const EquivalenceRelation& rho);
nlohmann::json to_json(const Decomposition& d);

/// Stable report document with the keys structure, predicates, bundles,
/// decomposition and witnesses. Witness tuples are element indices.
nlohmann::json report_json(const OrderedSemigroup& s, const ClassificationReport& report,
                           const std::optional<Decomposition>& decomposition);

std::string format_structure(const OrderedSemigroup& s);
std::string format_verdict(const Verdict& v);
std::string format_bundle(const BundleResult& b);
std::string format_relation(const OrderedSemigroup& s, const EquivalenceRelation& rho);
std::string format_decomposition(const OrderedSemigroup& s, const Decomposition& d);
std::string format_report(const OrderedSemigroup& s, const ClassificationReport& report,
                          const std::optional<Decomposition>& decomposition);

}  // namespace ordsgp
