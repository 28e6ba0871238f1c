#include "ordsgp/classification.hpp"

#include <algorithm>
#include <functional>

#include "ordsgp/elements.hpp"
#include "ordsgp/ideals.hpp"
#include "ordsgp/limits.hpp"
#include "scan.hpp"

namespace ordsgp {

using detail::as_witness;
using detail::both;
using detail::Domain;
using detail::forall;
using detail::forall_exists;
using detail::least;

namespace {

Domain carrier_of(const OrderedSemigroup& s) { return detail::carrier(s.size()); }
Domain idempotents_of(const OrderedSemigroup& s) {
  return ordered_idempotents(s).members();
}

// a <= a x a
Verdict regular_v(const OrderedSemigroup& s) {
  return forall_exists({carrier_of(s)}, [&](const Tuple& t) {
    return as_witness(element_regularity(s, t[0]).regular);
  });
}

// a <= a^2 x a^2
Verdict completely_regular_v(const OrderedSemigroup& s) {
  return forall_exists({carrier_of(s)}, [&](const Tuple& t) {
    return as_witness(element_regularity(s, t[0]).completely_regular);
  });
}

// a <= xb and a <= by
Verdict group_like_v(const OrderedSemigroup& s) {
  const auto all = carrier_of(s);
  const std::size_t n = s.size();
  return forall_exists({all, all}, [&](const Tuple& t) -> std::optional<Tuple> {
    const Element a = t[0], b = t[1];
    auto x = least(n, [&](Element x) { return s.leq(a, s.mul(x, b)); });
    auto y = least(n, [&](Element y) { return s.leq(a, s.mul(b, y)); });
    if (!x || !y) return std::nullopt;
    return Tuple{*x, *y};
  });
}

// a <= xb, without the regularity premise
Verdict left_division_v(const OrderedSemigroup& s) {
  const auto all = carrier_of(s);
  return forall_exists({all, all}, [&](const Tuple& t) {
    const Element a = t[0], b = t[1];
    return as_witness(least(s.size(), [&](Element x) { return s.leq(a, s.mul(x, b)); }));
  });
}

Verdict simple_v(const OrderedSemigroup& s, Side side) {
  return forall({carrier_of(s)}, [&](const Tuple& t) {
    return principal_ideal(s, t[0], side).is_full();
  });
}

// ae <= eua and ea <= ave for every a and ordered idempotent e
Verdict clifford_core_v(const OrderedSemigroup& s) {
  const std::size_t n = s.size();
  return forall_exists({carrier_of(s), idempotents_of(s)},
                       [&](const Tuple& t) -> std::optional<Tuple> {
                         const Element a = t[0], e = t[1];
                         const Element ae = s.mul(a, e), ea = s.mul(e, a);
                         auto u = least(n, [&](Element u) { return s.leq(ae, s.mul(e, u, a)); });
                         auto v = least(n, [&](Element v) { return s.leq(ea, s.mul(a, v, e)); });
                         if (!u || !v) return std::nullopt;
                         return Tuple{*u, *v};
                       });
}

// as <= xa for every a, s: (aS] contained in (Sa]
Verdict left_clifford_core_v(const OrderedSemigroup& s) {
  const auto all = carrier_of(s);
  return forall_exists({all, all}, [&](const Tuple& t) {
    const Element as = s.mul(t[0], t[1]);
    return as_witness(least(s.size(), [&](Element x) { return s.leq(as, s.mul(x, t[0])); }));
  });
}

// a' H a'' for all a and a', a'' in V<=(a)
Verdict inverse_core_v(const OrderedSemigroup& s) {
  const auto h = green_relation(s, GreenKind::H);
  const auto all = carrier_of(s);
  std::vector<ElementSet> inverses;
  for (Element a = 0; a < s.size(); ++a) inverses.push_back(inverses_of(s, a));
  return forall({all, all, all}, [&](const Tuple& t) {
    const auto& v = inverses[t[0]];
    return !v.contains(t[1]) || !v.contains(t[2]) || h.related(t[1], t[2]);
  });
}

// ab <= bxa
Verdict h_commutative_v(const OrderedSemigroup& s) {
  const auto all = carrier_of(s);
  return forall_exists({all, all}, [&](const Tuple& t) {
    return as_witness(h_commute_witness(s, t[0], t[1]));
  });
}

const char* const kNeedsRegular = "defined only on regular ordered semigroups";

Verdict gated(const OrderedSemigroup& s, const std::function<Verdict()>& body) {
  if (!regular_v(s).holds()) return Verdict::not_applicable(kNeedsRegular);
  return body();
}

/// A class-membership condition: a predicate whose regularity premise is
/// missing counts as false.
Verdict by_definition(const Verdict& v) {
  if (v.applicable()) return v;
  return Verdict::fail({}, "not regular");
}

using PredicateFn = Verdict (*)(const OrderedSemigroup&);

struct PredicateEntry {
  std::string_view name;
  PredicateFn fn;
};

Verdict p_regular(const OrderedSemigroup& s) { return regular_v(s); }
Verdict p_completely_regular(const OrderedSemigroup& s) { return completely_regular_v(s); }
Verdict p_group_like(const OrderedSemigroup& s) { return group_like_v(s); }
Verdict p_left_group_like(const OrderedSemigroup& s) {
  return gated(s, [&] { return left_division_v(s); });
}
Verdict p_right_group_like(const OrderedSemigroup& s) {
  return p_left_group_like(dual(s));
}
Verdict p_simple(const OrderedSemigroup& s) { return simple_v(s, Side::TwoSided); }
Verdict p_left_simple(const OrderedSemigroup& s) { return simple_v(s, Side::Left); }
Verdict p_right_simple(const OrderedSemigroup& s) { return simple_v(s, Side::Right); }
Verdict p_t_simple(const OrderedSemigroup& s) {
  return both(simple_v(s, Side::Left), simple_v(s, Side::Right));
}
Verdict p_completely_simple(const OrderedSemigroup& s) {
  return both(simple_v(s, Side::TwoSided), completely_regular_v(s));
}
Verdict p_clifford(const OrderedSemigroup& s) {
  return gated(s, [&] { return clifford_core_v(s); });
}
Verdict p_left_clifford(const OrderedSemigroup& s) {
  return gated(s, [&] { return left_clifford_core_v(s); });
}
Verdict p_right_clifford(const OrderedSemigroup& s) { return p_left_clifford(dual(s)); }
Verdict p_inverse(const OrderedSemigroup& s) {
  return gated(s, [&] { return inverse_core_v(s); });
}
Verdict p_h_commutative(const OrderedSemigroup& s) { return h_commutative_v(s); }

constexpr PredicateEntry kPredicates[] = {
    {"regular", p_regular},
    {"completely_regular", p_completely_regular},
    {"group_like", p_group_like},
    {"left_group_like", p_left_group_like},
    {"right_group_like", p_right_group_like},
    {"simple", p_simple},
    {"left_simple", p_left_simple},
    {"right_simple", p_right_simple},
    {"t_simple", p_t_simple},
    {"completely_simple", p_completely_simple},
    {"clifford", p_clifford},
    {"left_clifford", p_left_clifford},
    {"right_clifford", p_right_clifford},
    {"inverse", p_inverse},
    {"h_commutative", p_h_commutative},
};

// ---------------------------------------------------------------------------
// Bundles

BundleResult start(std::string id, std::string statement) {
  BundleResult r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  return r;
}

BundleResult finish(BundleResult r) {
  settle(r);
  return r;
}

Verdict every_h_class_group_like(const OrderedSemigroup& s) {
  const auto h = green_relation(s, GreenKind::H);
  for (const auto& cls : h.classes()) {
    if (!is_subsemigroup(s, cls))
      return Verdict::fail(cls.members(), "H-class is not a subsemigroup");
    if (!group_like_v(induced_substructure(s, cls)).holds())
      return Verdict::fail(cls.members(), "H-class is not group like");
  }
  return Verdict::pass();
}

// Every element lies in some group like ordered subsemigroup (subset scan).
Verdict union_of_group_like(const OrderedSemigroup& s) {
  const std::size_t n = s.size();
  if (n > limits().ideal_scan)
    throw SizeLimitError("subsemigroup scan", n, limits().ideal_scan);
  std::vector<bool> covered(n, false);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet set(n);
    bool adds = false;
    for (Element a = 0; a < n; ++a)
      if (mask >> a & 1u) {
        set.insert(a);
        adds = adds || !covered[a];
      }
    if (!adds || !is_subsemigroup(s, set)) continue;
    if (!group_like_v(induced_substructure(s, set)).holds()) continue;
    for (Element a : set) covered[a] = true;
  }
  for (Element a = 0; a < n; ++a)
    if (!covered[a]) return Verdict::fail({a}, "no group like subsemigroup contains it");
  return Verdict::pass();
}

Verdict relations_equal(const EquivalenceRelation& x, const EquivalenceRelation& y) {
  const std::size_t n = x.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (x.related(a, b) != y.related(a, b)) return Verdict::fail({a, b});
  return Verdict::pass();
}

Verdict relation_contained(const EquivalenceRelation& x, const EquivalenceRelation& y) {
  const std::size_t n = x.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (x.related(a, b) && !y.related(a, b)) return Verdict::fail({a, b});
  return Verdict::pass();
}

ElementSet right_multiples(const OrderedSemigroup& s, Element a) {  // (aS]
  return down_closure(s, set_product(s, s.singleton(a), s.full_set()));
}
ElementSet left_multiples(const OrderedSemigroup& s, Element a) {  // (Sa]
  return down_closure(s, set_product(s, s.full_set(), s.singleton(a)));
}

BundleResult cr_eq5(const OrderedSemigroup& s) {
  auto r = start("CR-EQ5", "completely regular; a in (a2Sa] n (aSa2]; "
                           "a in (a2Sa] n (Sa2]; a in (aSa2] n (a2S]; "
                           "regular and a in (a2S] n (Sa2]");
  const auto all = carrier_of(s);
  const std::size_t n = s.size();
  // Each existential pair: first(a, x) and second(a, y) must both be solvable.
  auto pairwise = [&](auto first, auto second) {
    return forall_exists({all}, [&](const Tuple& t) -> std::optional<Tuple> {
      const Element a = t[0], a2 = s.mul(a, a);
      auto x = least(n, [&](Element x) { return s.leq(a, first(a, a2, x)); });
      auto y = least(n, [&](Element y) { return s.leq(a, second(a, a2, y)); });
      if (!x || !y) return std::nullopt;
      return Tuple{*x, *y};
    });
  };
  r.conditions.push_back(condition("a in (a2Sa2] for all a", completely_regular_v(s)));
  r.conditions.push_back(condition(
      "a in (a2Sa] n (aSa2]",
      pairwise([&](Element a, Element a2, Element x) { return s.mul(a2, x, a); },
               [&](Element a, Element a2, Element y) { return s.mul(a, y, a2); })));
  r.conditions.push_back(condition(
      "a in (a2Sa] n (Sa2]",
      pairwise([&](Element a, Element a2, Element x) { return s.mul(a2, x, a); },
               [&](Element, Element a2, Element y) { return s.mul(y, a2); })));
  r.conditions.push_back(condition(
      "a in (aSa2] n (a2S]",
      pairwise([&](Element a, Element a2, Element x) { return s.mul(a, x, a2); },
               [&](Element, Element a2, Element y) { return s.mul(a2, y); })));
  r.conditions.push_back(condition(
      "regular and a in (a2S] n (Sa2]",
      both(regular_v(s),
           pairwise([&](Element, Element a2, Element x) { return s.mul(a2, x); },
                    [&](Element, Element a2, Element y) { return s.mul(y, a2); }))));
  return finish(std::move(r));
}

BundleResult gl_char(const OrderedSemigroup& s) {
  auto r = start("GL-CHAR", "group like <=> a in (bSb]; left group like <=> a in (aSb]");
  const auto all = carrier_of(s);
  const std::size_t n = s.size();
  r.conditions.push_back(condition("group like", group_like_v(s), 0));
  r.conditions.push_back(condition(
      "a in (bSb] for all a, b",
      forall_exists({all, all}, [&](const Tuple& t) {
        return as_witness(
            least(n, [&](Element x) { return s.leq(t[0], s.mul(t[1], x, t[1])); }));
      }),
      0));
  r.conditions.push_back(condition(
      "left group like", by_definition(gated(s, [&] { return left_division_v(s); })), 1));
  r.conditions.push_back(condition(
      "a in (aSb] for all a, b",
      forall_exists({all, all}, [&](const Tuple& t) {
        return as_witness(
            least(n, [&](Element x) { return s.leq(t[0], s.mul(t[0], x, t[1])); }));
      }),
      1));
  return finish(std::move(r));
}

BundleResult gl_hrel(const OrderedSemigroup& s) {
  const char* statement = "regular S: group like <=> e H f for all ordered idempotents";
  if (!regular_v(s).holds()) return not_applicable_bundle("GL-HREL", statement, "regular");
  auto r = start("GL-HREL", statement);
  const auto h = green_relation(s, GreenKind::H);
  const auto e = idempotents_of(s);
  r.conditions.push_back(condition("group like", group_like_v(s)));
  r.conditions.push_back(condition(
      "e H f for all e, f in E<=(S)",
      forall({e, e}, [&](const Tuple& t) { return h.related(t[0], t[1]); })));
  return finish(std::move(r));
}

BundleResult inv_comm(const OrderedSemigroup& s) {
  const char* statement =
      "regular S: inverses are H-related <=> ef <= fxe for all ordered idempotents";
  if (!regular_v(s).holds()) return not_applicable_bundle("INV-COMM", statement, "regular");
  auto r = start("INV-COMM", statement);
  const auto e = idempotents_of(s);
  r.conditions.push_back(condition("a' H a'' for all a' , a'' in V<=(a)", inverse_core_v(s)));
  r.conditions.push_back(condition(
      "ef <= fxe for all e, f in E<=(S)",
      forall_exists({e, e}, [&](const Tuple& t) {
        const Element ef = s.mul(t[0], t[1]);
        return as_witness(
            least(s.size(), [&](Element x) { return s.leq(ef, s.mul(t[1], x, t[0])); }));
      })));
  return finish(std::move(r));
}

BundleResult cr_hcomm(const OrderedSemigroup& s) {
  const char* statement = "H-commutative S: regular <=> completely regular";
  if (!h_commutative_v(s).holds())
    return not_applicable_bundle("CR-HCOMM", statement, "H-commutative");
  auto r = start("CR-HCOMM", statement);
  r.conditions.push_back(condition("regular", regular_v(s)));
  r.conditions.push_back(condition("completely regular", completely_regular_v(s)));
  return finish(std::move(r));
}

BundleResult cr_inv(const OrderedSemigroup& s) {
  auto r = start("CR-INV",
                 "completely regular <=> every a has a' in V<=(a) with aa' <= a'ua and "
                 "a'a <= ava'");
  const std::size_t n = s.size();
  r.conditions.push_back(condition("completely regular", completely_regular_v(s)));
  r.conditions.push_back(condition(
      "a' in V<=(a), aa' <= a'ua, a'a <= ava'",
      forall_exists({carrier_of(s)}, [&](const Tuple& t) -> std::optional<Tuple> {
        const Element a = t[0];
        for (Element inv : inverses_of(s, a)) {
          const Element aa = s.mul(a, inv), ia = s.mul(inv, a);
          auto u = least(n, [&](Element u) { return s.leq(aa, s.mul(inv, u, a)); });
          auto v = least(n, [&](Element v) { return s.leq(ia, s.mul(a, v, inv)); });
          if (u && v) return Tuple{inv, *u, *v};
        }
        return std::nullopt;
      })));
  return finish(std::move(r));
}

BundleResult cr_hclass(const OrderedSemigroup& s) {
  auto r = start("CR-HCLASS",
                 "completely regular <=> each H-class group like <=> union of group "
                 "like subsemigroups");
  r.conditions.push_back(condition("completely regular", completely_regular_v(s)));
  r.conditions.push_back(condition("every H-class is group like", every_h_class_group_like(s)));
  r.conditions.push_back(
      condition("union of group like ordered subsemigroups", union_of_group_like(s)));
  return finish(std::move(r));
}

BundleResult cl_eq(const OrderedSemigroup& s) {
  const char* statement = "regular S: Clifford <=> L = R <=> (aS] = (Sa] <=> (eS] = (Se]";
  if (!regular_v(s).holds()) return not_applicable_bundle("CL-EQ", statement, "regular");
  auto r = start("CL-EQ", statement);
  r.conditions.push_back(condition("Clifford", clifford_core_v(s)));
  r.conditions.push_back(condition(
      "L = R", relations_equal(green_relation(s, GreenKind::L), green_relation(s, GreenKind::R))));
  r.conditions.push_back(condition(
      "(aS] = (Sa] for all a", forall({carrier_of(s)}, [&](const Tuple& t) {
        return right_multiples(s, t[0]) == left_multiples(s, t[0]);
      })));
  r.conditions.push_back(condition(
      "(eS] = (Se] for all e in E<=(S)", forall({idempotents_of(s)}, [&](const Tuple& t) {
        return right_multiples(s, t[0]) == left_multiples(s, t[0]);
      })));
  return finish(std::move(r));
}

BundleResult cl_hcomm(const OrderedSemigroup& s) {
  const char* statement = "regular S: Clifford <=> H-commutative";
  if (!regular_v(s).holds()) return not_applicable_bundle("CL-HCOMM", statement, "regular");
  auto r = start("CL-HCOMM", statement);
  r.conditions.push_back(condition("Clifford", clifford_core_v(s)));
  r.conditions.push_back(condition("H-commutative", h_commutative_v(s)));
  return finish(std::move(r));
}

BundleResult cl_cresef(const OrderedSemigroup& s) {
  auto r = start("CL-CRESEF", "Clifford <=> completely regular and eSf in (fSe]");
  const auto e = idempotents_of(s);
  r.conditions.push_back(
      condition("Clifford", by_definition(gated(s, [&] { return clifford_core_v(s); }))));
  r.conditions.push_back(condition(
      "completely regular and eSf in (fSe] for all e, f in E<=(S)",
      both(completely_regular_v(s),
           forall_exists({e, carrier_of(s), e}, [&](const Tuple& t) {
             const Element exf = s.mul(t[0], t[1], t[2]);
             return as_witness(least(
                 s.size(), [&](Element y) { return s.leq(exf, s.mul(t[2], y, t[0])); }));
           }))));
  return finish(std::move(r));
}

BundleResult cl_crinv(const OrderedSemigroup& s) {
  auto r = start("CL-CRINV", "Clifford <=> completely regular and inverse");
  r.conditions.push_back(
      condition("Clifford", by_definition(gated(s, [&] { return clifford_core_v(s); }))));
  r.conditions.push_back(condition("completely regular and inverse",
                                   both(completely_regular_v(s), inverse_core_v(s))));
  return finish(std::move(r));
}

BundleResult lcl_eq5(const OrderedSemigroup& s) {
  const char* statement =
      "regular S: left Clifford <=> (eS] in (Se] <=> ea <= xe <=> ab <= xa <=> R in L";
  if (!regular_v(s).holds()) return not_applicable_bundle("LCL-EQ5", statement, "regular");
  auto r = start("LCL-EQ5", statement);
  const auto all = carrier_of(s);
  const auto e = idempotents_of(s);
  const std::size_t n = s.size();
  r.conditions.push_back(condition(
      "(aS] in (Sa] for all a", forall({all}, [&](const Tuple& t) {
        return right_multiples(s, t[0]).subset_of(left_multiples(s, t[0]));
      })));
  r.conditions.push_back(condition(
      "(eS] in (Se] for all e in E<=(S)", forall({e}, [&](const Tuple& t) {
        return right_multiples(s, t[0]).subset_of(left_multiples(s, t[0]));
      })));
  r.conditions.push_back(condition(
      "ea <= xe for all a, e in E<=(S)", forall_exists({all, e}, [&](const Tuple& t) {
        const Element ea = s.mul(t[1], t[0]);
        return as_witness(least(n, [&](Element x) { return s.leq(ea, s.mul(x, t[1])); }));
      })));
  r.conditions.push_back(condition(
      "ab <= xa for all a, b", forall_exists({all, all}, [&](const Tuple& t) {
        const Element ab = s.mul(t[0], t[1]);
        return as_witness(least(n, [&](Element x) { return s.leq(ab, s.mul(x, t[0])); }));
      })));
  r.conditions.push_back(condition(
      "R in L", relation_contained(green_relation(s, GreenKind::R),
                                   green_relation(s, GreenKind::L))));
  return finish(std::move(r));
}

BundleResult lcl_eq2(const OrderedSemigroup& s) {
  auto r = start("LCL-EQ2", "left Clifford <=> a in (aSa2] and ef in (efSfe]");
  const auto e = idempotents_of(s);
  const std::size_t n = s.size();
  r.conditions.push_back(condition(
      "left Clifford", by_definition(gated(s, [&] { return left_clifford_core_v(s); }))));
  auto first = forall_exists({carrier_of(s)}, [&](const Tuple& t) {
    const Element a = t[0], a2 = s.mul(a, a);
    return as_witness(least(n, [&](Element x) { return s.leq(a, s.mul(a, x, a2)); }));
  });
  auto second = forall_exists({e, e}, [&](const Tuple& t) {
    const Element ef = s.mul(t[0], t[1]), fe = s.mul(t[1], t[0]);
    return as_witness(least(n, [&](Element x) { return s.leq(ef, s.mul(ef, x, fe)); }));
  });
  r.conditions.push_back(
      condition("a in (aSa2] and ef in (efSfe]", both(std::move(first), second)));
  return finish(std::move(r));
}

using BundleFn = BundleResult (*)(const OrderedSemigroup&);

struct BundleEntry {
  std::string_view id;
  BundleFn fn;
};

constexpr BundleEntry kBundles[] = {
    {"CR-EQ5", cr_eq5},     {"GL-CHAR", gl_char},     {"GL-HREL", gl_hrel},
    {"INV-COMM", inv_comm}, {"CR-HCOMM", cr_hcomm},   {"CR-INV", cr_inv},
    {"CR-HCLASS", cr_hclass}, {"CL-EQ", cl_eq},       {"CL-HCOMM", cl_hcomm},
    {"CL-CRESEF", cl_cresef}, {"CL-CRINV", cl_crinv}, {"LCL-EQ5", lcl_eq5},
    {"LCL-EQ2", lcl_eq2},
};

}  // namespace

const std::vector<std::string_view>& predicate_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& p : kPredicates) out.push_back(p.name);
    return out;
  }();
  return names;
}

Verdict predicate(const OrderedSemigroup& s, std::string_view name) {
  for (const auto& p : kPredicates)
    if (p.name == name) return p.fn(s);
  throw UnknownNameError("predicate", std::string(name));
}

bool satisfies(const OrderedSemigroup& s, std::string_view name) {
  return predicate(s, name).holds();
}

const std::vector<std::string_view>& bundle_ids() {
  static const std::vector<std::string_view> ids = [] {
    std::vector<std::string_view> out;
    for (const auto& b : kBundles) out.push_back(b.id);
    return out;
  }();
  return ids;
}

BundleResult equivalence_bundle(const OrderedSemigroup& s, std::string_view id) {
  for (const auto& b : kBundles)
    if (b.id == id) return b.fn(s);
  throw UnknownNameError("bundle", std::string(id));
}

const Verdict& ClassificationReport::verdict(std::string_view name) const {
  for (const auto& [key, v] : verdicts)
    if (key == name) return v;
  throw UnknownNameError("predicate", std::string(name));
}

ClassificationReport classify(const OrderedSemigroup& s, ClassifyOptions options) {
  ClassificationReport report;
  for (const auto& p : kPredicates) report.verdicts.emplace_back(std::string(p.name), p.fn(s));
  report.regular = report.holds("regular");

  auto implies = [&](bool premise, bool conclusion, const char* text) {
    if (premise && !conclusion) report.implication_violations.emplace_back(text);
  };
  const auto h = [&](std::string_view name) { return report.holds(name); };
  implies(h("group_like"), h("t_simple") && h("completely_regular"),
          "group_like => t_simple and completely_regular");
  implies(h("clifford"), h("completely_regular"), "clifford => completely_regular");
  implies(h("clifford"), h("left_clifford"), "clifford => left_clifford");
  implies(h("completely_regular"), h("regular"), "completely_regular => regular");
  implies(h("t_simple"), h("regular"), "t_simple => regular");
  implies(h("group_like"), h("left_group_like") && h("right_group_like"),
          "group_like => left_group_like and right_group_like");
  implies(h("left_group_like") && h("right_group_like"), h("group_like"),
          "left_group_like and right_group_like => group_like");
  implies(h("completely_simple"), h("simple") && h("completely_regular"),
          "completely_simple => simple and completely_regular");
  for (auto name : {"left_group_like", "right_group_like", "clifford", "left_clifford",
                    "right_clifford", "inverse"})
    implies(report.regular != report.verdict(name).applicable(), false,
            "regularity premise gating");

  if (options.bundles)
    for (const auto& b : kBundles) report.bundles.push_back(b.fn(s));
  return report;
}

}  // namespace ordsgp
