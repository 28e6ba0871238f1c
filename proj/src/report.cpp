#include "ordsgp/report.hpp"

#include <iomanip>
#include <sstream>

namespace ordsgp {

using nlohmann::json;

namespace {

std::string tuple_text(const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? ", " : "") + std::to_string(t[i]);
  return out + ")";
}

std::string set_text(const OrderedSemigroup& s, const ElementSet& set) {
  std::string out = "{";
  bool first = true;
  for (Element x : set) {
    out += (first ? "" : " ") + s.name(x);
    first = false;
  }
  return out + "}";
}

}  // namespace

json to_json(const OrderedSemigroup& s) {
  const std::size_t n = s.size();
  json table = json::array();
  for (Element a = 0; a < n; ++a) {
    json row = json::array();
    for (Element b = 0; b < n; ++b) row.push_back(s.mul(a, b));
    table.push_back(std::move(row));
  }
  json order = json::array();
  for (const auto& [a, b] : s.order_pairs()) order.push_back({a, b});
  json out = {{"elements", n}, {"table", std::move(table)}, {"order", std::move(order)}};
  if (!s.names().empty()) out["names"] = s.names();
  return out;
}

json to_json(const Verdict& v) {
  json out = {{"status", to_string(v.status)}};
  if (v.status == Status::Fails) out["counterexample"] = v.counterexample;
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json to_json(const BundleResult& b) {
  json conditions = json::array();
  for (const auto& c : b.conditions) {
    json entry = {{"label", c.label}, {"holds", c.holds}, {"clause", c.clause}};
    if (!c.holds) entry["counterexample"] = c.counterexample;
    if (!c.note.empty()) entry["note"] = c.note;
    conditions.push_back(std::move(entry));
  }
  json out = {{"id", b.id},
              {"statement", b.statement},
              {"applicable", b.applicable},
              {"agree", b.agree ? json(*b.agree) : json(nullptr)},
              {"conditions", std::move(conditions)}};
  if (!b.premise.empty()) out["premise"] = b.premise;
  return out;
}

json to_json(const EquivalenceRelation& rho) {
  json classes = json::array();
  for (const auto& c : rho.classes()) classes.push_back(c.members());
  return {{"labels", rho.labels()}, {"classes", std::move(classes)}};
}

json to_json(const Decomposition& d) {
  const std::size_t y = d.quotient_size;
  json table = json::array(), order = json::array();
  for (std::size_t a = 0; a < y; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < y; ++b) {
      row.push_back(d.product(a, b));
      if (a != b && d.precedes(a, b)) order.push_back({a, b});
    }
    table.push_back(std::move(row));
  }
  json conditions = json::array();
  for (const auto& c : d.conditions) conditions.push_back(to_json(c));
  json types = json::array();
  for (const auto& r : d.class_types) {
    json held = json::array();
    for (const auto& [name, v] : r.verdicts)
      if (v.holds()) held.push_back(name);
    types.push_back(std::move(held));
  }
  return {{"relation", to_json(d.rho)},
          {"quotient_table", std::move(table)},
          {"quotient_order", std::move(order)},
          {"order_is_partial", d.order_is_partial},
          {"conditions", std::move(conditions)},
          {"class_types", std::move(types)}};
}

json report_json(const OrderedSemigroup& s, const ClassificationReport& report,
                 const std::optional<Decomposition>& decomposition) {
  json predicates = json::object(), witnesses = json::object();
  for (const auto& [name, v] : report.verdicts) {
    predicates[name] = to_json(v);
    if (v.holds() && !v.witnesses.empty()) witnesses[name] = v.witnesses;
  }
  json bundles = json::array();
  for (const auto& b : report.bundles) bundles.push_back(to_json(b));
  json out = {{"structure", to_json(s)},
              {"predicates", std::move(predicates)},
              {"bundles", std::move(bundles)},
              {"decomposition", decomposition ? to_json(*decomposition) : json(nullptr)},
              {"witnesses", std::move(witnesses)}};
  if (!report.implication_violations.empty())
    out["implication_violations"] = report.implication_violations;
  return out;
}

std::string format_structure(const OrderedSemigroup& s) {
  std::ostringstream out;
  const std::size_t n = s.size();
  out << "elements: " << n << '\n';
  if (!s.names().empty()) {
    out << "names:";
    for (Element a = 0; a < n; ++a) out << ' ' << a << '=' << s.name(a);
    out << '\n';
  }
  out << "table:\n";
  for (Element a = 0; a < n; ++a) {
    out << ' ';
    for (Element b = 0; b < n; ++b) out << ' ' << s.mul(a, b);
    out << '\n';
  }
  const auto pairs = s.order_pairs();
  out << "order:";
  if (pairs.empty()) out << " discrete";
  for (const auto& [a, b] : pairs) out << ' ' << a << "<=" << b;
  out << '\n';
  return out.str();
}

std::string format_verdict(const Verdict& v) {
  std::string out = to_string(v.status);
  if (v.status == Status::Fails && !v.counterexample.empty())
    out += ", counterexample " + tuple_text(v.counterexample);
  if (!v.note.empty()) out += " (" + v.note + ")";
  return out;
}

std::string format_bundle(const BundleResult& b) {
  std::ostringstream out;
  out << b.id << ": ";
  if (!b.applicable) {
    out << "not applicable (requires " << b.premise << ")\n";
    return out.str();
  }
  out << (b.agree.value_or(false) ? "agree" : "DISAGREE") << "  [" << b.statement << "]\n";
  for (const auto& c : b.conditions) {
    out << "    " << (c.holds ? "holds " : "fails ");
    if (c.clause) out << "#" << c.clause << ' ';
    out << c.label;
    if (!c.holds && !c.counterexample.empty()) out << ", counterexample " << tuple_text(c.counterexample);
    if (!c.note.empty()) out << " (" << c.note << ")";
    out << '\n';
  }
  return out.str();
}

std::string format_relation(const OrderedSemigroup& s, const EquivalenceRelation& rho) {
  std::string out;
  for (const auto& c : rho.classes()) out += (out.empty() ? "" : " ") + set_text(s, c);
  return out;
}

std::string format_decomposition(const OrderedSemigroup& s, const Decomposition& d) {
  std::ostringstream out;
  const std::size_t y = d.quotient_size;
  out << "classes:";
  for (std::size_t a = 0; a < y; ++a) out << "  S" << a << '=' << set_text(s, d.rho.classes()[a]);
  out << "\nquotient table:\n";
  for (std::size_t a = 0; a < y; ++a) {
    out << ' ';
    for (std::size_t b = 0; b < y; ++b) out << ' ' << d.product(a, b);
    out << '\n';
  }
  out << "quotient order:";
  bool any = false;
  for (std::size_t a = 0; a < y; ++a)
    for (std::size_t b = 0; b < y; ++b)
      if (a != b && d.precedes(a, b)) {
        out << ' ' << a << "<=" << b;
        any = true;
      }
  out << (any ? "" : " discrete") << (d.order_is_partial ? "" : " (not a partial order)") << '\n';
  static const char* labels[] = {"distinct classes are disjoint", "classes cover S",
                                 "S_a S_b is contained in S_ab",
                                 "S_b meets (S_a] only if b precedes a"};
  for (std::size_t i = 0; i < d.conditions.size(); ++i)
    out << "  (" << i + 1 << ") " << labels[i] << ": " << format_verdict(d.conditions[i]) << '\n';
  for (std::size_t a = 0; a < d.class_types.size(); ++a) {
    out << "  S" << a << " is:";
    bool none = true;
    for (const auto& [name, v] : d.class_types[a].verdicts)
      if (v.holds()) {
        out << ' ' << name;
        none = false;
      }
    out << (none ? " (no registered type)" : "") << '\n';
  }
  return out.str();
}

std::string format_report(const OrderedSemigroup& s, const ClassificationReport& report,
                          const std::optional<Decomposition>& decomposition) {
  std::ostringstream out;
  out << format_structure(s) << "\npredicates:\n";
  for (const auto& [name, v] : report.verdicts)
    out << "  " << std::left << std::setw(20) << name << format_verdict(v) << '\n';
  if (!report.bundles.empty()) {
    out << "\nbundles:\n";
    for (const auto& b : report.bundles) out << "  " << format_bundle(b);
  }
  if (decomposition) {
    out << "\nleast complete semilattice decomposition:\n" << format_decomposition(s, *decomposition);
  }
  for (const auto& v : report.implication_violations) out << "implication violated: " << v << '\n';
  return out.str();
}

}  // namespace ordsgp
