#include "ordsgp/verdict.hpp"

#include <map>

namespace ordsgp {

const char* to_string(Status status) noexcept {
  switch (status) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::NotApplicable: return "not-applicable";
  }
  return "?";
}

Verdict Verdict::pass(std::vector<Tuple> witnesses) {
  Verdict v;
  v.status = Status::Holds;
  v.witnesses = std::move(witnesses);
  return v;
}

Verdict Verdict::fail(Tuple counterexample, std::string note) {
  Verdict v;
  v.status = Status::Fails;
  v.counterexample = std::move(counterexample);
  v.note = std::move(note);
  return v;
}

Verdict Verdict::not_applicable(std::string note) {
  Verdict v;
  v.status = Status::NotApplicable;
  v.note = std::move(note);
  return v;
}

void settle(BundleResult& result) {
  if (!result.applicable) {
    result.agree.reset();
    return;
  }
  std::map<std::size_t, bool> first;
  bool agree = true;
  for (const auto& c : result.conditions) {
    auto [it, inserted] = first.emplace(c.clause, c.holds);
    if (!inserted && it->second != c.holds) agree = false;
  }
  result.agree = agree;
}

BundleResult not_applicable_bundle(std::string id, std::string statement,
                                   std::string premise) {
  BundleResult r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  r.premise = std::move(premise);
  r.applicable = false;
  return r;
}

ConditionVerdict condition(std::string label, const Verdict& verdict,
                           std::size_t clause) {
  ConditionVerdict c;
  c.label = std::move(label);
  c.holds = verdict.holds();
  c.counterexample = verdict.counterexample;
  c.note = verdict.note;
  c.clause = clause;
  return c;
}

}  // namespace ordsgp
