#include "ordsgp/congruence.hpp"

#include "ordsgp/ideals.hpp"
#include "ordsgp/limits.hpp"
#include "scan.hpp"

namespace ordsgp {

using detail::both;
using detail::forall;

namespace {

detail::Domain carrier_of(const OrderedSemigroup& s) { return detail::carrier(s.size()); }

}  // namespace

RelationProperties relation_properties(const OrderedSemigroup& s,
                                       const EquivalenceRelation& rho) {
  if (rho.size() != s.size())
    throw PreconditionError(PreconditionFailure::NotPartition, {},
                            "relation is over a carrier of size " +
                                std::to_string(rho.size()));
  const auto all = carrier_of(s);
  RelationProperties p;
  p.left_congruence = forall({all, all, all}, [&](const Tuple& t) {
    return !rho.related(t[0], t[1]) || rho.related(s.mul(t[2], t[0]), s.mul(t[2], t[1]));
  });
  p.right_congruence = forall({all, all, all}, [&](const Tuple& t) {
    return !rho.related(t[0], t[1]) || rho.related(s.mul(t[0], t[2]), s.mul(t[1], t[2]));
  });
  p.congruence = both(p.left_congruence, p.right_congruence);
  auto squares = forall({all}, [&](const Tuple& t) {
    return rho.related(t[0], s.mul(t[0], t[0]));
  });
  auto commutes = forall({all, all}, [&](const Tuple& t) {
    return rho.related(s.mul(t[0], t[1]), s.mul(t[1], t[0]));
  });
  p.semilattice = both(both(p.congruence, squares), commutes);
  auto complete = forall({all, all}, [&](const Tuple& t) {
    return !s.leq(t[0], t[1]) || rho.related(t[0], s.mul(t[0], t[1]));
  });
  p.complete_semilattice = both(p.semilattice, complete);
  return p;
}

bool is_complete_semilattice_congruence(const OrderedSemigroup& s,
                                        const EquivalenceRelation& rho) {
  return relation_properties(s, rho).complete_semilattice.holds();
}

EquivalenceRelation least_csc(const OrderedSemigroup& s) { return n_relation(s); }

bool Decomposition::all_conditions_hold() const {
  for (const auto& c : conditions)
    if (!c.holds()) return false;
  return true;
}

Decomposition decompose(const OrderedSemigroup& s, const EquivalenceRelation& rho) {
  auto props = relation_properties(s, rho);
  if (!props.complete_semilattice.holds())
    throw PreconditionError(PreconditionFailure::NotCompleteSemilattice,
                            props.complete_semilattice.counterexample);

  Decomposition d;
  d.rho = rho;
  const auto& classes = rho.classes();
  const std::size_t y = classes.size();
  d.quotient_size = y;
  d.quotient_table.assign(y * y, 0);
  d.quotient_order.assign(y * y, false);

  for (std::size_t alpha = 0; alpha < y; ++alpha)
    for (std::size_t beta = 0; beta < y; ++beta) {
      const ElementSet product = set_product(s, classes[alpha], classes[beta]);
      const std::size_t target = rho.class_of(product.first());
      if (!product.subset_of(classes[target]))
        throw PreconditionError(PreconditionFailure::NotClosedClass,
                                {static_cast<Element>(alpha), static_cast<Element>(beta)});
      d.quotient_table[alpha * y + beta] = target;
    }
  for (std::size_t alpha = 0; alpha < y; ++alpha)
    for (std::size_t beta = 0; beta < y; ++beta)
      d.quotient_order[alpha * y + beta] = d.product(alpha, beta) == alpha;

  const auto indices = detail::carrier(y);
  // (1) distinct classes are disjoint
  d.conditions.push_back(forall({indices, indices}, [&](const Tuple& t) {
    return t[0] == t[1] || !classes[t[0]].intersects(classes[t[1]]);
  }));
  // (2) the classes cover S
  {
    ElementSet cover = s.empty_set();
    for (const auto& c : classes) cover |= c;
    d.conditions.push_back(cover.is_full() ? Verdict::pass()
                                           : Verdict::fail((s.full_set() - cover).members()));
  }
  // (3) S_a S_b contained in S_ab
  d.conditions.push_back(forall({indices, indices}, [&](const Tuple& t) {
    return set_product(s, classes[t[0]], classes[t[1]])
        .subset_of(classes[d.product(t[0], t[1])]);
  }));
  // (4) S_b n (S_a] nonempty implies b precedes a
  d.conditions.push_back(forall({indices, indices}, [&](const Tuple& t) {
    const std::size_t alpha = t[0], beta = t[1];
    return !classes[beta].intersects(down_closure(s, classes[alpha])) ||
           d.precedes(beta, alpha);
  }));

  bool partial = true;
  for (std::size_t a = 0; a < y; ++a) {
    partial = partial && d.precedes(a, a);
    for (std::size_t b = 0; b < y; ++b) {
      if (a != b && d.precedes(a, b) && d.precedes(b, a)) partial = false;
      for (std::size_t c = 0; c < y; ++c)
        if (d.precedes(a, b) && d.precedes(b, c) && !d.precedes(a, c)) partial = false;
    }
  }
  d.order_is_partial = partial;

  for (const auto& c : classes)
    d.class_types.push_back(
        classify(induced_substructure(s, c), ClassifyOptions{.bundles = false}));
  return d;
}

void for_each_partition(std::size_t n,
                        const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (n > limits().partition_scan)
    throw SizeLimitError("partition enumeration", n, limits().partition_scan);
  if (n == 0) return;
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);  // max of rgs[0..i]
  for (;;) {
    if (!visit(rgs)) return;
    // Increment the rightmost position that can grow.
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<EquivalenceRelation> complete_semilattice_congruences(const OrderedSemigroup& s) {
  std::vector<EquivalenceRelation> out;
  for_each_partition(s.size(), [&](const std::vector<std::size_t>& rgs) {
    auto rho = EquivalenceRelation::from_labels(std::span<const std::size_t>(rgs));
    if (is_complete_semilattice_congruence(s, rho)) out.push_back(std::move(rho));
    return true;
  });
  return out;
}

bool classes_satisfy(const OrderedSemigroup& s, const EquivalenceRelation& rho,
                     std::string_view class_predicate) {
  for (const auto& c : rho.classes()) {
    if (!is_subsemigroup(s, c)) return false;
    if (!satisfies(induced_substructure(s, c), class_predicate)) return false;
  }
  return true;
}

bool is_complete_semilattice_of(const OrderedSemigroup& s, std::string_view class_predicate) {
  bool found = false;
  for_each_partition(s.size(), [&](const std::vector<std::size_t>& rgs) {
    auto rho = EquivalenceRelation::from_labels(std::span<const std::size_t>(rgs));
    if (is_complete_semilattice_congruence(s, rho) && classes_satisfy(s, rho, class_predicate))
      found = true;
    return !found;
  });
  return found;
}

namespace {

Verdict verdict_of(bool holds, std::string note = {}) {
  return holds ? Verdict::pass() : Verdict::fail({}, std::move(note));
}

Verdict csc_with_classes(const OrderedSemigroup& s, std::string_view predicate_name) {
  return verdict_of(is_complete_semilattice_of(s, predicate_name),
                    "no complete semilattice congruence has such classes");
}

Verdict least_csc_classes(const OrderedSemigroup& s, std::string_view predicate_name) {
  return verdict_of(classes_satisfy(s, least_csc(s), predicate_name),
                    "some class of the least complete semilattice congruence fails");
}

Verdict equals_least_csc(const OrderedSemigroup& s, const EquivalenceRelation& rho) {
  auto props = relation_properties(s, rho).complete_semilattice;
  if (!props.holds()) {
    props.note = "not a complete semilattice congruence";
    return props;
  }
  return verdict_of(rho == least_csc(s), "differs from the least complete semilattice congruence");
}

BundleResult make(std::string id, std::string statement) {
  BundleResult r;
  r.id = std::move(id);
  r.statement = std::move(statement);
  return r;
}

BundleResult finish(BundleResult r) {
  settle(r);
  return r;
}

BundleResult cr_leastcsc(const OrderedSemigroup& s) {
  const char* statement = "completely regular S: J is the least complete semilattice congruence";
  if (!satisfies(s, "completely_regular"))
    return not_applicable_bundle("CR-LEASTCSC", statement, "completely regular");
  auto r = make("CR-LEASTCSC", statement);
  const auto j = green_relation(s, GreenKind::J);
  r.conditions.push_back(condition("completely regular (premise)", Verdict::pass()));
  r.conditions.push_back(condition(
      "J is a complete semilattice congruence", relation_properties(s, j).complete_semilattice));
  r.conditions.push_back(condition("J equals the least complete semilattice congruence",
                                   equals_least_csc(s, j)));
  return finish(std::move(r));
}

BundleResult cr_csdecomp(const OrderedSemigroup& s) {
  auto r = make("CR-CSDECOMP",
                "completely regular <=> complete semilattice of completely simple");
  r.conditions.push_back(condition("completely regular", predicate(s, "completely_regular")));
  r.conditions.push_back(condition("complete semilattice of completely simple (scan)",
                                   csc_with_classes(s, "completely_simple")));
  r.conditions.push_back(condition("least complete semilattice congruence classes completely simple",
                                   least_csc_classes(s, "completely_simple")));
  return finish(std::move(r));
}

BundleResult cr_hclass_gl(const OrderedSemigroup& s) {
  auto r = make("CR-HCLASS-GL",
                "completely regular <=> every H-class is a group like ordered subsemigroup");
  const auto h = green_relation(s, GreenKind::H);
  r.conditions.push_back(condition("completely regular", predicate(s, "completely_regular")));
  Verdict classes = Verdict::pass();
  for (const auto& c : h.classes()) {
    if (!is_subsemigroup(s, c)) {
      classes = Verdict::fail(c.members(), "H-class is not a subsemigroup");
      break;
    }
    if (!satisfies(induced_substructure(s, c), "group_like")) {
      classes = Verdict::fail(c.members(), "H-class is not group like");
      break;
    }
  }
  r.conditions.push_back(condition("every H-class is a group like subsemigroup", classes));
  r.conditions.push_back(condition(
      "a <= aha, a <= a2h, a <= ha2 for some h in H(a)",
      detail::forall_exists({carrier_of(s)}, [&](const Tuple& t) -> std::optional<Tuple> {
        const Element a = t[0], a2 = s.mul(a, a);
        for (Element hh : h.class_containing(a))
          if (s.leq(a, s.mul(a, hh, a)) && s.leq(a, s.mul(a2, hh)) && s.leq(a, s.mul(hh, a2)))
            return Tuple{hh};
        return std::nullopt;
      })));
  return finish(std::move(r));
}

BundleResult cl_decomp(const OrderedSemigroup& s) {
  auto r = make("CL-DECOMP", "Clifford <=> complete semilattice of group like");
  Verdict clifford = predicate(s, "clifford");
  if (!clifford.applicable()) clifford = Verdict::fail({}, "not regular");
  r.conditions.push_back(condition("Clifford", clifford));
  r.conditions.push_back(condition("complete semilattice of group like (scan)",
                                   csc_with_classes(s, "group_like")));
  const auto j = green_relation(s, GreenKind::J);
  const auto hh = green_relation(s, GreenKind::H);
  r.conditions.push_back(condition(
      "J = H, J complete semilattice congruence, J-classes group like",
      verdict_of(j == hh && is_complete_semilattice_congruence(s, j) &&
                 classes_satisfy(s, j, "group_like"))));
  r.conditions.push_back(condition("least complete semilattice congruence classes group like",
                                   least_csc_classes(s, "group_like")));
  return finish(std::move(r));
}

BundleResult lcl_leastcsc(const OrderedSemigroup& s) {
  auto r = make("LCL-LEASTCSC", "left Clifford <=> L is the least complete semilattice congruence");
  Verdict left = predicate(s, "left_clifford");
  if (!left.applicable()) left = Verdict::fail({}, "not regular");
  r.conditions.push_back(condition("left Clifford", left));
  r.conditions.push_back(condition("L is the least complete semilattice congruence",
                                   equals_least_csc(s, green_relation(s, GreenKind::L))));
  return finish(std::move(r));
}

BundleResult lcl_decomp(const OrderedSemigroup& s) {
  const char* statement = "regular S: left Clifford <=> complete semilattice of left group like";
  if (!satisfies(s, "regular"))
    return not_applicable_bundle("LCL-DECOMP", statement, "regular");
  auto r = make("LCL-DECOMP", statement);
  r.conditions.push_back(condition("left Clifford", predicate(s, "left_clifford")));
  r.conditions.push_back(condition("complete semilattice of left group like (scan)",
                                   csc_with_classes(s, "left_group_like")));
  r.conditions.push_back(condition("least complete semilattice congruence classes left group like",
                                   least_csc_classes(s, "left_group_like")));
  return finish(std::move(r));
}

using TheoremFn = BundleResult (*)(const OrderedSemigroup&);

struct TheoremEntry {
  std::string_view id;
  TheoremFn fn;
};

constexpr TheoremEntry kTheorems[] = {
    {"CR-LEASTCSC", cr_leastcsc}, {"CR-CSDECOMP", cr_csdecomp},
    {"CR-HCLASS-GL", cr_hclass_gl}, {"CL-DECOMP", cl_decomp},
    {"LCL-LEASTCSC", lcl_leastcsc}, {"LCL-DECOMP", lcl_decomp},
};

}  // namespace

const std::vector<std::string_view>& structure_theorem_ids() {
  static const std::vector<std::string_view> ids = [] {
    std::vector<std::string_view> out;
    for (const auto& t : kTheorems) out.push_back(t.id);
    return out;
  }();
  return ids;
}

BundleResult structure_theorem_check(const OrderedSemigroup& s, std::string_view id) {
  for (const auto& t : kTheorems)
    if (t.id == id) return t.fn(s);
  throw UnknownNameError("structure theorem", std::string(id));
}

}  // namespace ordsgp
