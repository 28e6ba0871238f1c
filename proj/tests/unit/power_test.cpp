#include <algorithm>

#include <doctest.h>

#include "ordsgp/classification.hpp"
#include "ordsgp/enumeration.hpp"
#include "ordsgp/power.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ordsgp;

TEST_CASE("power carrier order") {
  const auto c = power_carrier(3);
  REQUIRE(c.size() == 7);
  CHECK(c[0] == std::vector<Element>{0});
  CHECK(c[3] == std::vector<Element>{0, 1});
  CHECK(c[5] == std::vector<Element>{1, 2});
  CHECK(c[6] == std::vector<Element>{0, 1, 2});
  for (Element x = 0; x < 3; ++x) CHECK(c[singleton_index(3, x)] == std::vector<Element>{x});
}

TEST_CASE("P_f of small semigroups") {
  CHECK(power_ordered_semigroup(fixtures::z2()) == fixtures::pz2());
  CHECK(power_ordered_semigroup(fixtures::t1_plain()) == fixtures::t1());
  const auto plz = power_ordered_semigroup(fixtures::left_zero2());
  CHECK(plz.size() == 3);
  CHECK(satisfies(plz, "left_group_like"));
}

TEST_CASE("joins") {
  const auto pz2 = fixtures::pz2();
  CHECK(join(pz2, 0, 1) == Element{2});
  CHECK(join(pz2, 0, 0) == Element{0});
  CHECK(join(fixtures::sl2(), 0, 1) == Element{1});
  CHECK_FALSE(join(fixtures::lz2(), 0, 1).has_value());
}

TEST_CASE("universal extension examples") {
  const std::vector<Element> l = {0, 1};
  const auto phi = universal_extension(fixtures::z2(), fixtures::pz2(), l);
  CHECK(phi.map == std::vector<Element>{0, 1, 2});

  for (const auto& s : fixtures::join_closed()) {
    for (Element e = 0; e < s.size(); ++e) {
      if (s.mul(e, e) != e) continue;
      const std::vector<Element> f = {e};
      CHECK(universal_extension(fixtures::t1_plain(), s, f).map == std::vector<Element>{e});
    }
  }

  const std::vector<Element> top = {1, 1};
  CHECK(universal_extension(fixtures::z2(), fixtures::sl2(), top).map ==
        std::vector<Element>{1, 1, 1});

  try {
    universal_extension(fixtures::left_zero2(), fixtures::lz2(), std::vector<Element>{0, 1});
    FAIL("expected NoJoin");
  } catch (const PreconditionError& e) {
    CHECK(e.failure() == PreconditionFailure::NoJoin);
    CHECK(e.witness() == std::vector<Element>{0, 1});
  }
  try {
    universal_extension(fixtures::z2(), fixtures::sl2(), std::vector<Element>{0, 1});
    FAIL("expected NotMorphism");
  } catch (const PreconditionError& e) {
    CHECK(e.failure() == PreconditionFailure::NotMorphism);
  }
}

TEST_CASE("products that do not distribute over joins are rejected") {
  // Diamond 0 <= 1, 2 <= 3 with 3*3 = 3 and every other product 0. Joins
  // exist, but 3 * (1 v 2) = 3 while (3*1) v (3*2) = 0.
  const auto s = OrderedSemigroup::validate(
      {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 3}},
      std::vector<OrderPair>{{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  const auto null3 = FiniteSemigroup::from_rows({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  try {
    universal_extension(null3, s, std::vector<Element>{0, 1, 2});
    FAIL("expected NotDistributive");
  } catch (const PreconditionError& e) {
    CHECK(e.failure() == PreconditionFailure::NotDistributive);
    // {1,2} {1,2} = {0}, but phi({1,2}) = 3 and 3 * 3 = 3
    CHECK(e.witness() == std::vector<Element>{5, 5});
  }
}

TEST_CASE("homomorphisms") {
  const auto homs = homomorphisms(fixtures::z2(), fixtures::pz2());
  for (const auto& h : homs)
    for (Element a = 0; a < 2; ++a)
      for (Element b = 0; b < 2; ++b)
        CHECK(h(fixtures::z2().mul(a, b)) == fixtures::pz2().mul(h(a), h(b)));
  CHECK(std::find_if(homs.begin(), homs.end(), [](const SemigroupMorphism& h) {
          return h.map == std::vector<Element>{0, 1};
        }) != homs.end());
}

TEST_CASE("unordered deciders match their textbook definitions") {
  CHECK(is_group(fixtures::z2()));
  CHECK_FALSE(is_group(fixtures::left_zero2()));
  CHECK(is_left_group(fixtures::left_zero2()));
  CHECK_FALSE(is_completely_regular(fixtures::null2_plain()));
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& f : enumerate_semigroups(n)) {
      REQUIRE(is_group(f) == oracle::is_group(f));
      REQUIRE(is_left_group(f) == oracle::is_left_group(f));
      REQUIRE(is_completely_regular(f) == oracle::is_completely_regular(f));
    }
}

TEST_CASE("power correspondence examples") {
  const auto t = power_correspondence_check(fixtures::z2(), PowerProperty::TSimple);
  CHECK(t.agree == true);
  CHECK(t.conditions[0].holds);
  CHECK(t.conditions[1].holds);

  const auto lz = power_correspondence_check(fixtures::left_zero2(), PowerProperty::TSimple);
  CHECK(lz.agree == true);
  CHECK_FALSE(lz.conditions[0].holds);

  const auto null = power_correspondence_check(fixtures::null2_plain(),
                                               PowerProperty::CompletelyRegular);
  CHECK(null.agree == true);
  CHECK_FALSE(null.conditions[0].holds);
  CHECK(parse_power_property("left_group_like") == PowerProperty::LeftGroupLike);
  CHECK_THROWS_AS(parse_power_property("simple"), UnknownNameError);
}

TEST_CASE("P_f always validates") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& f : enumerate_semigroups(n)) {
      const auto p = power_ordered_semigroup(f);
      REQUIRE(p.size() == (std::size_t{1} << n) - 1);
    }
}
