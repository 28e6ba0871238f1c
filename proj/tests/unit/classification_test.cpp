#include <doctest.h>

#include "ordsgp/classification.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ordsgp;

TEST_CASE("predicates on the named fixtures") {
  const auto sl2 = fixtures::sl2();
  CHECK(satisfies(sl2, "clifford"));
  const auto gl = predicate(sl2, "group_like");
  CHECK(gl.status == Status::Fails);
  CHECK(gl.counterexample == Tuple{1, 0});

  const auto lz2 = fixtures::lz2();
  CHECK(satisfies(lz2, "completely_regular"));
  CHECK(satisfies(lz2, "left_group_like"));
  CHECK_FALSE(satisfies(lz2, "clifford"));
  CHECK_FALSE(satisfies(lz2, "inverse"));
  CHECK(satisfies(lz2, "left_clifford"));
  CHECK_FALSE(satisfies(lz2, "right_clifford"));

  const auto pz2 = fixtures::pz2();
  CHECK(satisfies(pz2, "t_simple"));
  CHECK(satisfies(pz2, "group_like"));

  for (auto name : predicate_names()) CHECK(satisfies(fixtures::t1(), name));
  CHECK_THROWS_AS(predicate(sl2, "abelian"), UnknownNameError);
}

TEST_CASE("regularity-gated predicates are not applicable on non-regular structures") {
  const auto null2 = fixtures::null2();
  for (auto name : {"left_group_like", "right_group_like", "clifford", "left_clifford",
                    "right_clifford", "inverse"}) {
    CAPTURE(name);
    CHECK(predicate(null2, name).status == Status::NotApplicable);
    CHECK_FALSE(satisfies(null2, name));
  }
  CHECK(predicate(null2, "regular").status == Status::Fails);
}

TEST_CASE("classify") {
  const auto sl2 = classify(fixtures::sl2());
  CHECK(sl2.regular);
  CHECK(sl2.holds("completely_regular"));
  CHECK(sl2.holds("clifford"));
  CHECK_FALSE(sl2.holds("group_like"));
  CHECK(sl2.bundles.size() == bundle_ids().size());

  const auto lz2 = classify(fixtures::lz2());
  CHECK(lz2.holds("completely_regular"));
  CHECK_FALSE(lz2.holds("clifford"));
  CHECK(lz2.holds("left_clifford"));
  CHECK_FALSE(lz2.holds("inverse"));

  const auto t1 = classify(fixtures::t1());
  for (const auto& [name, v] : t1.verdicts) CHECK(v.holds());
}

TEST_CASE("bundle examples") {
  const auto lz2 = fixtures::lz2();
  const auto cr = equivalence_bundle(lz2, "CR-EQ5");
  CHECK(cr.agree == true);
  for (const auto& c : cr.conditions) CHECK(c.holds);

  const auto cl_sl2 = equivalence_bundle(fixtures::sl2(), "CL-EQ");
  CHECK(cl_sl2.agree == true);
  for (const auto& c : cl_sl2.conditions) CHECK(c.holds);

  const auto cl_lz2 = equivalence_bundle(lz2, "CL-EQ");
  CHECK(cl_lz2.agree == true);
  for (const auto& c : cl_lz2.conditions) CHECK_FALSE(c.holds);

  const auto gl = equivalence_bundle(fixtures::pz2(), "GL-HREL");
  CHECK(gl.agree == true);
  for (const auto& c : gl.conditions) CHECK(c.holds);

  const auto gated = equivalence_bundle(fixtures::null2(), "CL-HCOMM");
  CHECK_FALSE(gated.applicable);
  CHECK_FALSE(gated.agree.has_value());
  CHECK_THROWS_AS(equivalence_bundle(lz2, "CL-NOPE"), UnknownNameError);
}

TEST_CASE("implication lattice holds on every structure up to order 3") {
  for (const auto& s : fixtures::up_to(3)) {
    const auto report = classify(s, ClassifyOptions{.bundles = false});
    REQUIRE(report.implication_violations.empty());
    const bool gl = report.holds("group_like");
    REQUIRE(gl == (report.holds("left_group_like") && report.holds("right_group_like")));
    if (gl) REQUIRE((report.holds("t_simple") && report.holds("completely_regular")));
    if (report.holds("clifford"))
      REQUIRE((report.holds("completely_regular") && report.holds("left_clifford")));
    if (report.holds("completely_regular")) REQUIRE(report.regular);
    if (report.holds("t_simple")) REQUIRE(report.regular);
    REQUIRE(report.holds("completely_simple") ==
            (report.holds("simple") && report.holds("completely_regular")));
  }
}

TEST_CASE("predicate verdicts and counterexamples match the definitions") {
  for (const auto& s : fixtures::up_to(3)) {
    auto expect = [&](std::string_view name, const oracle::Counterexample& c) {
      const auto v = predicate(s, name);
      REQUIRE(v.holds() == !c.has_value());
      if (c) REQUIRE(v.counterexample == *c);
    };
    expect("regular", oracle::regular(s));
    expect("completely_regular", oracle::completely_regular(s));
    expect("group_like", oracle::group_like(s));
    expect("h_commutative", oracle::h_commutative(s));
    expect("left_simple", oracle::left_simple(s));
  }
}

TEST_CASE("right-handed predicates are the left-handed ones of the dual") {
  for (const auto& s : fixtures::up_to(3)) {
    const auto d = dual(s);
    REQUIRE(satisfies(s, "right_simple") == satisfies(d, "left_simple"));
    REQUIRE(satisfies(s, "right_group_like") == satisfies(d, "left_group_like"));
    REQUIRE(satisfies(s, "right_clifford") == satisfies(d, "left_clifford"));
  }
}
