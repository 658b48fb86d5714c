#include "doctest.h"

#include "addcomp/sequence.hpp"

using namespace addcomp;

namespace {

Sequence greedy4() { return Sequence({1, 4, 130, 31591}); }

BigInt big(const char* s) { return parse_bigint(s); }

}  // namespace

TEST_CASE("count follows the definition") {
  const Sequence s = greedy4();
  CHECK(count(s, 4) == 2);
  CHECK(count(s, 130) == 3);
  CHECK(count(s, 3) == 1);
  CHECK(count(s, 1) == 1);
  CHECK(count(s, 31591) == 4);
}

TEST_CASE("count rejects queries outside the stored prefix") {
  const Sequence s = greedy4();
  CHECK_THROWS_AS(count(s, 31592), Error);
  try {
    count(s, 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
}

TEST_CASE("largest_le") {
  const Sequence s({1, 4, 130});
  CHECK(largest_le(s, 10) == 4);
  CHECK(largest_le(s, 130) == 130);
  CHECK(largest_le(s, 129) == 4);
  const Sequence t({3, 100000});
  CHECK_THROWS_AS(largest_le(t, 2), Error);
}

TEST_CASE("count and largest_le agree") {
  const Sequence s = greedy4();
  for (int x = 1; x <= 2000; ++x) {
    CHECK(count(s, largest_le(s, x)) == count(s, x));
    if (x > 1) CHECK(count(s, x - 1) <= count(s, x));
  }
}

TEST_CASE("growth ratios are exact") {
  auto r = growth_ratios(Sequence({1, 4}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].m == 1);
  CHECK(r[0].linear == 4);
  CHECK(r[0].scaled == 4);

  r = growth_ratios(Sequence({1, 4, 130}));
  CHECK(r[1].linear == Rational(130, 8));
  CHECK(r[1].scaled == Rational(130, 64));

  r = growth_ratios(greedy4());
  CHECK(r[2].scaled == Rational(31591, 10530));
  CHECK_THROWS_AS(growth_ratios(Sequence({1})), Error);
}

TEST_CASE("sequence invariants are enforced") {
  CHECK_THROWS_AS(Sequence({1, 1}), Error);
  CHECK_THROWS_AS(Sequence({0, 4}), Error);
  CHECK_THROWS_AS(Sequence({4, 1}), Error);
  // growth: a_3 >= 2 * 2^4 * 4 = 128
  CHECK_THROWS_AS(Sequence({1, 4, 127}), Error);
  CHECK_NOTHROW(Sequence({1, 4, 128}));
  CHECK(Sequence(std::vector<BigInt>{}).empty());
}

TEST_CASE("growth rules") {
  CHECK(parse_growth_rule("linear") == GrowthRule::linear);
  CHECK(parse_growth_rule("quadratic") == GrowthRule::quadratic);
  CHECK(parse_growth_rule("exponential") == GrowthRule::exponential);
  CHECK_THROWS_AS(parse_growth_rule("cubic"), Error);
  CHECK(growth_factor(GrowthRule::linear, 5) == 5);
  CHECK(growth_factor(GrowthRule::quadratic, 5) == 25);
  CHECK(growth_factor(GrowthRule::exponential, 5) == 32);
  CHECK(growth_rule_name(GrowthRule::quadratic) == "quadratic");
}

TEST_CASE("snapshot") {
  const Sequence s = greedy4();
  auto snap = snapshot(s, 129);
  CHECK(snap.a_count == 2);
  REQUIRE(snap.a_star);
  CHECK(*snap.a_star == 4);
  CHECK_FALSE(snap.b_count);
}

TEST_CASE("big values survive") {
  const BigInt a = big("101091231594");
  const BigInt huge = big("123456789012345678901234567890");
  CHECK(to_decimal(huge) == "123456789012345678901234567890");
  CHECK(Sequence({1, 4, 130, 31591, 32349186, a}).back() == a);
  CHECK_THROWS_AS(parse_bigint("12a"), Error);
  CHECK_THROWS_AS(parse_bigint(""), Error);
  CHECK(to_string(Rational(198, 130)) == "99/65");
  CHECK(to_string(Rational(-4)) == "-4");
  CHECK(floor_div(-7, 2) == -4);
  CHECK(mod_floor(-7, 2) == 1);
}
