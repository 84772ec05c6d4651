#include <doctest.h>

#include <random>

#include "hemiring/rational.hpp"

using hemiring::Rat;
using hemiring::rat_max;
using hemiring::rat_min;

TEST_CASE("rationals normalize on construction") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(0, 7) == Rat::zero());
  CHECK(Rat(20, 20) == Rat::one());
  CHECK(Rat(16, 20) == Rat(4, 5));
  CHECK(Rat(3, -6) == Rat(-1, 2));
}

TEST_CASE("comparisons are exact across denominators") {
  CHECK(Rat(1, 3) < Rat(2, 5));
  CHECK(Rat(9, 20) < Rat(1, 2));
  CHECK(Rat(7, 10) > Rat(3, 5));
  CHECK(Rat(1, 2) <= Rat(10, 20));
  CHECK(rat_min(Rat(4, 5), Rat(3, 5)) == Rat(3, 5));
  CHECK(rat_max(Rat(9, 20), Rat(2, 5)) == Rat(9, 20));
}

TEST_CASE("string round trip") {
  for (const char* s : {"0", "1", "1/2", "4/5", "9/20", "7/10"}) {
    const auto r = Rat::parse(s);
    REQUIRE(r.has_value());
    CHECK(r->str() == s);
  }
  CHECK(Rat::parse("2/4")->str() == "1/2");
  CHECK_FALSE(Rat::parse("").has_value());
  CHECK_FALSE(Rat::parse("x").has_value());
  CHECK_FALSE(Rat::parse("1/").has_value());
  CHECK_FALSE(Rat::parse("1/0").has_value());
  CHECK_FALSE(Rat::parse("0.5").has_value());
}

TEST_CASE("ordering is total on random fractions") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Rat a(static_cast<std::int64_t>(rng() % 40), 1 + static_cast<std::int64_t>(rng() % 20));
    const Rat b(static_cast<std::int64_t>(rng() % 40), 1 + static_cast<std::int64_t>(rng() % 20));
    CHECK(((a < b) ? 1 : 0) + ((b < a) ? 1 : 0) + ((a == b) ? 1 : 0) == 1);
    CHECK(rat_min(a, b) <= rat_max(a, b));
  }
}
