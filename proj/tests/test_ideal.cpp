#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idealpow/construction.hpp"
#include "idealpow/ideal.hpp"
#include "idealpow/random.hpp"
#include "test_support.hpp"

using namespace idealpow;
using test::ideal_of;

namespace {

const auto kExample = [] { return ideal_of({{4, 0}, {3, 2}, {0, 3}}); };
const std::vector<std::vector<Exponent>> kExampleSquare = {{0, 6}, {3, 5}, {4, 3}, {7, 2}, {8, 0}};

}  // namespace

TEST_CASE("minimalize") {
  SUBCASE("drops the redundant square from the example") {
    auto ideal = minimalize({Monomial{8, 0}, Monomial{7, 2}, Monomial{6, 4}, Monomial{4, 3}, Monomial{3, 5},
                             Monomial{0, 6}});
    CHECK(ideal == minimalize(ideal_of(kExampleSquare)));
    CHECK(ideal.size() == 5);
    CHECK(ideal.is_minimal());
  }
  SUBCASE("simple redundancy") {
    CHECK(minimalize({Monomial{2, 0}, Monomial{2, 1}, Monomial{1, 2}}).size() == 2);
  }
  SUBCASE("duplicates are kept once") {
    CHECK(minimalize({Monomial{1, 2}, Monomial{1, 2}, Monomial{2, 1}}).size() == 2);
  }
  SUBCASE("the unit monomial swallows everything") {
    auto ideal = minimalize({Monomial{3, 1}, Monomial{0, 0}});
    REQUIRE(ideal.size() == 1);
    CHECK(ideal.generators()[0] == Monomial{0, 0});
  }
  SUBCASE("errors") {
    CHECK_THROWS_WITH_AS(minimalize(std::vector<Monomial>{}), "empty generating set", ParameterError);
    CHECK_THROWS_AS(minimalize({Monomial{1}, Monomial{1, 1}}), ArityError);
  }
}

TEST_CASE("product") {
  auto square = product(ideal_of({{2, 0}, {0, 2}}), ideal_of({{2, 0}, {0, 2}}));
  CHECK(square == minimalize(ideal_of({{4, 0}, {2, 2}, {0, 4}})));
  CHECK(product(kExample(), kExample()) == minimalize(ideal_of(kExampleSquare)));
  CHECK(equals(product(kExample(), ideal_of({{0, 0}})), kExample()));
  CHECK_THROWS_AS(product(kExample(), ideal_of({{1, 1, 1}})), ArityError);
}

TEST_CASE("power") {
  CHECK(power(kExample(), 2) == minimalize(ideal_of(kExampleSquare)));
  CHECK(power(kExample(), 1) == minimalize(kExample()));

  const auto base = skeleton(2, 1);
  CHECK(power_sizes(base, 6) == std::vector<std::size_t>{4, 9, 13, 17, 21, 25});
  CHECK_THROWS_AS(power(kExample(), 0), ParameterError);
}

TEST_CASE("power_naive") {
  CHECK(power_naive(ideal_of({{2, 0}, {0, 2}}), 3) == minimalize(ideal_of({{6, 0}, {4, 2}, {2, 4}, {0, 6}})));
  CHECK(power_naive(kExample(), 2) == power(kExample(), 2));
  CHECK(power_naive(kExample(), 3) == power(kExample(), 3));
  CHECK(power_naive(kExample(), 1) == minimalize(kExample()));

  CHECK(multiset_count(26, 6) == 736281);
  CHECK_THROWS_AS(power_naive(kExample(), 4, 10), OracleTooLarge);
  CHECK_NOTHROW(power_naive(kExample(), 4, multiset_count(3, 4)));
}

TEST_CASE("membership and containment") {
  const auto base = skeleton(2, 2);  // <x^8, y^8, x^6y^2, x^2y^6>
  CHECK_FALSE(contains_monomial(base, Monomial{5, 5}));
  for (const auto& g : base.generators()) CHECK(contains_monomial(base, g));
  CHECK_FALSE(contains_monomial(base, Monomial{0, 0}));
  CHECK_THROWS_AS(contains_monomial(base, Monomial{1}), ArityError);

  CHECK(contains_ideal(kExample(), kExample()));
  CHECK_FALSE(contains_ideal(ideal_of({{2}}), ideal_of({{1}})));
  CHECK(contains_ideal(ideal_of({{1}}), ideal_of({{2}})));

  const auto j1 = skeleton(2, 1);
  const auto q = MonomialIdeal::generated_by({mu_squared(2, 1)});
  CHECK(contains_ideal(power(j1, 2), product(j1, q)));
}

TEST_CASE("equals compares minimal forms") {
  auto redundant = ideal_of({{4, 0}, {3, 2}, {0, 3}, {7, 2}});
  CHECK(equals(redundant, kExample()));
  CHECK_FALSE(redundant == kExample());
  CHECK_FALSE(equals(ideal_of({{1, 0}}), ideal_of({{0, 1}})));
}

TEST_CASE("properties on random small ideals") {
  random::Rng rng(7);
  for (int sample = 0; sample < 150; ++sample) {
    const auto a = random::random_ideal(rng);
    const auto min_a = minimalize(a);

    // antichain and idempotence
    CHECK(minimalize(min_a) == min_a);
    for (const auto& g : min_a.generators())
      for (const auto& h : min_a.generators())
        if (!(g == h)) CHECK_FALSE(divides(g, h));

    // same generators as the exhaustive oracle
    CHECK(test::exps_of(min_a) == oracle::minimal(test::exps_of(a)));

    // generating-set independence of products
    random::IdealShape shape;
    shape.max_nvars = 3;
    auto b = random::random_ideal(rng, shape);
    while (b.arity() != a.arity()) b = random::random_ideal(rng, shape);
    std::vector<Monomial> padded(a.generators().begin(), a.generators().end());
    padded.push_back(multiply(a.generators()[0], a.generators().back()));
    CHECK(product(MonomialIdeal::generated_by(padded), b) == product(a, b));

    // additivity of exponents
    const int i = 1 + sample % 2;
    const int j = 1 + sample % 3;
    CHECK(power(a, i + j) == product(power(a, i), power(a, j)));

    // oracle equivalence against the test-only enumeration
    CHECK(test::exps_of(power(a, 2)) == oracle::power(test::exps_of(a), 2));

    // mutual containment iff equality
    CHECK((contains_ideal(a, b) && contains_ideal(b, a)) == equals(a, b));
  }
}
