#include <random>

#include <doctest.h>

#include "ordsgp/limits.hpp"
#include "ordsgp/structure.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ordsgp;

namespace {

template <typename Fn>
ValidationError validation_error(Fn&& fn) {
  try {
    fn();
  } catch (const ValidationError& e) {
    return e;
  }
  FAIL("expected ValidationError");
  throw std::logic_error("unreachable");
}

ElementSet random_subset(std::mt19937_64& rng, std::size_t n) {
  ElementSet out(n);
  for (Element a = 0; a < n; ++a)
    if (rng() & 1) out.insert(a);
  return out;
}

}  // namespace

TEST_CASE("valid structures") {
  CHECK(fixtures::t1().size() == 1);
  const auto sl2 = fixtures::sl2();
  CHECK(sl2.leq(0, 1));
  CHECK_FALSE(sl2.leq(1, 0));
  CHECK(sl2.leq(0, 0));
  CHECK(fixtures::sl2_reversed().leq(1, 0));
  // left zeros accept the chain 0 <= 1 on both sides
  CHECK_NOTHROW(OrderedSemigroup::validate({{0, 0}, {1, 1}}, std::vector<OrderPair>{{0, 1}}));
}

TEST_CASE("validation errors carry the least witness") {
  SUBCASE("index out of range") {
    auto e = validation_error([] { FiniteSemigroup::from_rows({{0, 2}, {0, 0}}); });
    CHECK(e.failure() == ValidationFailure::IndexOutOfRange);
  }
  SUBCASE("associativity") {
    // (00)1 = 11 = 0 but 0(01) = 01 = 1
    auto e = validation_error([] { FiniteSemigroup::from_rows({{1, 1}, {1, 0}}); });
    CHECK(e.failure() == ValidationFailure::NotAssociative);
    CHECK(e.witness() == std::vector<Element>{0, 0, 1});
  }
  SUBCASE("antisymmetry") {
    auto e = validation_error([] {
      OrderedSemigroup::validate({{0, 0}, {0, 1}}, std::vector<OrderPair>{{0, 1}, {1, 0}});
    });
    CHECK(e.failure() == ValidationFailure::NotAntisymmetric);
    CHECK(e.witness() == std::vector<Element>{0, 1});
  }
  SUBCASE("transitivity is not completed silently") {
    const std::vector<std::vector<Element>> null3 = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    const std::vector<OrderPair> chain = {{0, 1}, {1, 2}};
    auto e = validation_error([&] { OrderedSemigroup::validate(null3, chain); });
    CHECK(e.failure() == ValidationFailure::NotTransitive);
    CHECK(e.witness() == std::vector<Element>{0, 1, 2});
    const auto closed =
        OrderedSemigroup::validate(null3, chain, {}, OrderCompletion::ReflexiveTransitive);
    CHECK(closed.leq(0, 2));
  }
  SUBCASE("compatibility") {
    // in Z2 with 0 <= 1, multiplying by 1 swaps the pair
    auto e = validation_error([] {
      OrderedSemigroup::validate({{0, 1}, {1, 0}}, std::vector<OrderPair>{{0, 1}});
    });
    CHECK(e.failure() == ValidationFailure::NotCompatible);
    CHECK(e.witness() == std::vector<Element>{0, 1, 1});
  }
}

TEST_CASE("down closure") {
  const auto sl2 = fixtures::sl2();
  CHECK(down_closure(sl2, sl2.singleton(1)) == sl2.full_set());
  CHECK(down_closure(sl2, sl2.empty_set()).empty());
  const auto lz2 = fixtures::lz2();
  CHECK(down_closure(lz2, lz2.singleton(0)) == lz2.singleton(0));
  CHECK(up_closure(sl2, sl2.singleton(0)) == sl2.full_set());
}

TEST_CASE("set product") {
  const auto sl2 = fixtures::sl2();
  CHECK(set_product(sl2, sl2.full_set(), sl2.singleton(1)) == sl2.full_set());
  CHECK(set_product(sl2, sl2.empty_set(), sl2.full_set()).empty());
  const auto lz2 = fixtures::lz2();
  CHECK(set_product(lz2, lz2.singleton(0), lz2.full_set()) == lz2.singleton(0));
}

TEST_CASE("induced substructure") {
  const auto sl2 = fixtures::sl2();
  CHECK(induced_substructure(sl2, sl2.singleton(1)) == fixtures::t1());
  CHECK(induced_substructure(sl2, sl2.full_set()) == sl2);
  const auto lz2 = fixtures::lz2();
  CHECK(induced_substructure(lz2, lz2.full_set()) == lz2);

  const auto pz2 = fixtures::pz2();
  // {B, C}: BB = A leaves the subset
  auto e = validation_error([&] { induced_substructure(pz2, ElementSet(3, {1, 2})); });
  CHECK(e.failure() == ValidationFailure::NotClosed);
  CHECK(e.witness() == std::vector<Element>{1, 1});
  // {A, C} is closed and keeps A <= C as 0 <= 1
  const auto ac = induced_substructure(pz2, ElementSet(3, {0, 2}));
  CHECK(ac.leq(0, 1));
  CHECK(ac.mul(0, 1) == 1);
}

TEST_CASE("dual reverses multiplication") {
  const auto d = dual(fixtures::lz2());
  CHECK(d == fixtures::rz2());
  CHECK(dual(d) == fixtures::lz2());
}

TEST_CASE("closure laws on random subsets") {
  std::mt19937_64 rng(20261016);
  auto structures = fixtures::all();
  for (const auto& s : fixtures::up_to(3)) structures.push_back(s);
  for (const auto& s : structures) {
    const std::size_t n = s.size();
    for (int round = 0; round < 8; ++round) {
      const auto x = random_subset(rng, n);
      const auto y = x | random_subset(rng, n);
      const auto dx = down_closure(s, x);
      CHECK(x.subset_of(dx));
      CHECK(dx.subset_of(down_closure(s, y)));
      CHECK(down_closure(s, dx) == dx);
      CHECK(oracle::to_mask(dx) == oracle::down(s, oracle::to_mask(x)));

      const auto z = random_subset(rng, n);
      CHECK(set_product(s, set_product(s, x, y), z) == set_product(s, x, set_product(s, y, z)));
    }
  }
}

TEST_CASE("validated structures stay compatible") {
  for (const auto& s : fixtures::up_to(3))
    for (Element a = 0; a < s.size(); ++a)
      for (Element b = 0; b < s.size(); ++b)
        if (s.leq(a, b))
          for (Element c = 0; c < s.size(); ++c) {
            REQUIRE(s.leq(s.mul(c, a), s.mul(c, b)));
            REQUIRE(s.leq(s.mul(a, c), s.mul(b, c)));
          }
}

TEST_CASE("limits parsing") {
  const auto l = parse_limits("ideals=14,power=11,semigroups=5");
  CHECK(l.ideal_scan == 14);
  CHECK(l.power_base == 11);
  CHECK(l.semigroup_order == 5);
  CHECK(l.partition_scan == Limits{}.partition_scan);
  CHECK_THROWS_AS(parse_limits("bogus=1"), Error);
  CHECK_THROWS_AS(parse_limits("ideals=x"), Error);
}
