#include <doctest.h>

#include <random>

#include "hemiring/fixtures.hpp"
#include "hemiring/fuzzy.hpp"
#include "hemiring/fuzzy_oracle.hpp"
#include "hemiring/generator.hpp"
#include "hemiring/io.hpp"

using namespace hemiring;

namespace {

FuzzySubset from_named(const Hemiring& H,
                       const std::vector<std::pair<std::string, Rat>>& vals) {
  FuzzySubset f = constant_fuzzy(H, Rat::zero());
  for (const auto& [name, r] : vals)
    f.values[static_cast<std::size_t>(*H.element_index(name))] = r;
  return f;
}

std::vector<Hemiring> tiny_corpus() {
  Config cfg;
  std::vector<Hemiring> out{fixtures::three_chain()};
  for (int n = 1; n <= 2; ++n)
    for (auto& h : enumerate_hemirings(n, cfg)) out.push_back(h);
  return out;
}

FuzzySubset random_grid(const Hemiring& H, int d, std::mt19937_64& rng) {
  FuzzySubset f = constant_fuzzy(H, Rat::zero());
  for (auto& v : f.values) v = Rat(static_cast<std::int64_t>(rng() % (d + 1)), d);
  return f;
}

} // namespace

TEST_CASE("level sets slice at the threshold") {
  const Hemiring H = fixtures::four_cyclic();
  const FuzzySubset lambda = from_named(H, fixtures::four_cyclic_lambda());
  CHECK(mask_to_names(H, level_set(lambda, Rat(3, 5))) == "0,c");
  CHECK(level_set(lambda, Rat::zero()) == H.full_mask());
  const FuzzySubset ind = two_valued_indicator(H, parse_subset(H, "0,a"), Rat(9, 10), Rat(1, 10));
  CHECK(level_set(ind, Rat(9, 10)) == parse_subset(H, "0,a"));
}

TEST_CASE("two-valued indicators require s < t") {
  const Hemiring H = fixtures::two_field();
  CHECK_THROWS_AS(two_valued_indicator(H, 1, Rat(1, 2), Rat(1, 2)), hemiring::domain_error);
  CHECK_THROWS_AS(two_valued_indicator(H, 1, Rat(1, 4), Rat(1, 2)), hemiring::domain_error);
}

TEST_CASE("indicators of h-ideals are fuzzy h-ideals and vice versa") {
  Config cfg;
  const Hemiring f = fixtures::two_field();
  const FuzzySubset good = two_valued_indicator(f, parse_subset(f, "0"), Rat(9, 10), Rat(1, 10));
  CHECK(is_fuzzy_ideal_of_kind(good, IdealKind::h).ok);

  const Hemiring c = fixtures::three_chain();
  const FuzzySubset bad = characteristic(c, parse_subset(c, "0,a"));
  CHECK_FALSE(is_fuzzy_ideal_of_kind(bad, IdealKind::h).ok);
}

TEST_CASE("pointwise operations") {
  const Hemiring H = fixtures::four_cyclic();
  const FuzzySubset lambda = from_named(H, fixtures::four_cyclic_lambda());
  const FuzzySubset mu = from_named(H, fixtures::four_cyclic_mu());
  const FuzzySubset meet = pointwise_meet(lambda, mu);
  CHECK(meet.at(*H.element_index("0")) == Rat(3, 5));
  CHECK(meet.at(*H.element_index("a")) == Rat(2, 5));
  CHECK(meet.at(*H.element_index("b")) == Rat(2, 5));
  CHECK(meet.at(*H.element_index("c")) == Rat(3, 5));
  CHECK(pointwise_meet(lambda, lambda) == lambda);
  CHECK(pointwise_leq(meet, lambda));
  CHECK(pointwise_leq(meet, mu));

  // indicator meets mirror intersections when the two levels match
  const Hemiring f = fixtures::two_field();
  for (Mask a = 1; a <= f.full_mask(); ++a)
    for (Mask b = 1; b <= f.full_mask(); ++b) {
      const auto ia = two_valued_indicator(f, a, Rat(3, 4), Rat(1, 4));
      const auto ib = two_valued_indicator(f, b, Rat(3, 4), Rat(1, 4));
      CHECK(pointwise_meet(ia, ib) == two_valued_indicator(f, a & b, Rat(3, 4), Rat(1, 4)));
      CHECK(pointwise_leq(ia, ib) == mask_subset(a, b));
    }
}

TEST_CASE("pointwise operations reject mismatched parents") {
  const Hemiring a = fixtures::two_field();
  const Hemiring b = fixtures::two_bool();
  CHECK_THROWS_AS(pointwise_meet(constant_fuzzy(a, Rat::one()), constant_fuzzy(b, Rat::one())),
                  hemiring::domain_error);
}

TEST_CASE("constants are fuzzy h-ideals; lopsided values on the chain are not") {
  const Hemiring c = fixtures::three_chain();
  CHECK(is_fuzzy_ideal_of_kind(constant_fuzzy(c, Rat(7, 10)), IdealKind::h).ok);

  const FuzzySubset lam = from_named(c, {{"0", Rat::one()}, {"a", {1, 2}}, {"1", {1, 2}}});
  const FuzzyCheck chk = is_fuzzy_ideal_of_kind(lam, IdealKind::h);
  REQUIRE_FALSE(chk.ok);
  CHECK(chk.axiom == "h_condition");
  REQUIRE(chk.elems.size() == 4);
  const int x = chk.elems[0], a = chk.elems[1], b = chk.elems[2], y = chk.elems[3];
  CHECK(c.add(c.add(x, a), y) == c.add(b, y));
  CHECK(lam.at(x) < rat_min(lam.at(a), lam.at(b)));  // witness replays
}

TEST_CASE("the published membership values are rejected over the quarantined tables") {
  const Hemiring H = fixtures::four_cyclic();
  const FuzzySubset lambda = from_named(H, fixtures::four_cyclic_lambda());
  const FuzzyCheck chk = is_fuzzy_ideal_of_kind(lambda, IdealKind::two_sided);
  REQUIRE_FALSE(chk.ok);
  CHECK(chk.axiom == "mul_right");
  REQUIRE(chk.elems.size() == 2);
  CHECK(H.element_name(chk.elems[0]) == "c");
  CHECK(H.element_name(chk.elems[1]) == "b");
  // lambda(c*b) = lambda(b) < lambda(c)
  CHECK(lambda.at(H.mul(chk.elems[0], chk.elems[1])) < lambda.at(chk.elems[0]));
}

TEST_CASE("direct and level-set fuzzy ideal tests agree on small grids") {
  for (const Hemiring& H : tiny_corpus()) {
    const int d = 2;
    std::vector<int> digits(static_cast<std::size_t>(H.order()), 0);
    for (;;) {
      FuzzySubset f = constant_fuzzy(H, Rat::zero());
      for (int i = 0; i < H.order(); ++i)
        f.values[static_cast<std::size_t>(i)] = Rat(digits[static_cast<std::size_t>(i)], d);
      for (IdealKind k : {IdealKind::left, IdealKind::right, IdealKind::two_sided,
                          IdealKind::k, IdealKind::h})
        CHECK(is_fuzzy_ideal_of_kind(f, k, FuzzyMethod::direct).ok ==
              is_fuzzy_ideal_of_kind(f, k, FuzzyMethod::levels).ok);
      int i = 0;
      while (i < H.order() && ++digits[static_cast<std::size_t>(i)] > d)
        digits[static_cast<std::size_t>(i++)] = 0;
      if (i == H.order()) break;
    }
  }
}

TEST_CASE("level chains decompose and reconstruct membership functions") {
  std::mt19937_64 rng(31);
  for (const Hemiring& H : tiny_corpus()) {
    for (int s = 0; s < 60; ++s) {
      const FuzzySubset f = random_grid(H, 6, rng);
      const LevelChain chain = level_chain(f);
      for (std::size_t i = 0; i + 1 < chain.levels.size(); ++i) {
        CHECK(chain.levels[i].first > chain.levels[i + 1].first);
        CHECK(mask_subset(chain.levels[i].second, chain.levels[i + 1].second));
      }
      CHECK(from_level_chain(chain) == f);
    }
  }
}

TEST_CASE("products against the zero function vanish") {
  const Hemiring H = fixtures::three_chain();
  const FuzzySubset z = constant_fuzzy(H, Rat::zero());
  const FuzzySubset l = constant_fuzzy(H, Rat(3, 4));
  for (FuzzyOp op : {FuzzyOp::h_product, FuzzyOp::h_intrinsic, FuzzyOp::h_sum}) {
    CHECK(apply_fuzzy_op(l, z, op) == z);
    CHECK(oracle_product(l, z, op) == z);
  }
}

TEST_CASE("self-products on the two-element field fix the membership chain") {
  const Hemiring H = fixtures::two_field();
  const FuzzySubset lam = from_named(H, {{"0", Rat::one()}, {"e", {1, 2}}});
  CHECK(h_product(lam, lam) == lam);
  CHECK(h_intrinsic_product(lam, lam) == lam);
}

TEST_CASE("characteristic functions reduce the intrinsic product to the crisp one") {
  for (const Hemiring& H : tiny_corpus())
    for (Mask a = 1; a <= H.full_mask(); ++a)
      for (Mask b = 1; b <= H.full_mask(); ++b) {
        const FuzzySubset prod = h_intrinsic_product(characteristic(H, a), characteristic(H, b));
        CHECK(prod == characteristic(H, h_closure(H, product_set(H, a, b))));
        CHECK(pointwise_leq(h_product(characteristic(H, a), characteristic(H, b)), prod));
      }
}

TEST_CASE("h-sums") {
  const Hemiring f = fixtures::two_field();
  const FuzzySubset chi0 = characteristic(f, parse_subset(f, "0"));
  CHECK(h_sum(chi0, chi0) == chi0);

  const Hemiring c = fixtures::three_chain();
  CHECK(h_sum(constant_fuzzy(c, Rat(3, 4)), constant_fuzzy(c, Rat(1, 4))) ==
        constant_fuzzy(c, Rat(1, 4)));

  // sums of family members stay in the family of fuzzy h-ideals
  Config cfg;
  for (const Hemiring& H : tiny_corpus()) {
    const auto fam = enumerate_grid_fuzzy_ideals(H, 3, IdealKind::h, cfg);
    for (const auto& l : fam)
      for (const auto& r : fam)
        CHECK(is_fuzzy_ideal_of_kind(h_sum(l, r), IdealKind::h).ok);
  }
}

TEST_CASE("level-cut products agree with the definition-level oracle") {
  std::mt19937_64 rng(2024);
  for (const Hemiring& H : tiny_corpus()) {
    for (int s = 0; s < 120; ++s) {
      const FuzzySubset l = random_grid(H, 4, rng);
      const FuzzySubset r = random_grid(H, 4, rng);
      for (FuzzyOp op : {FuzzyOp::h_product, FuzzyOp::h_intrinsic, FuzzyOp::h_sum})
        CHECK(apply_fuzzy_op(l, r, op) == oracle_product(l, r, op));
    }
    for (Mask a = 0; a <= H.full_mask(); ++a)
      for (Mask b = 0; b <= H.full_mask(); ++b) {
        const FuzzySubset ca = a ? characteristic(H, a) : constant_fuzzy(H, Rat::zero());
        const FuzzySubset cb = b ? characteristic(H, b) : constant_fuzzy(H, Rat::zero());
        for (FuzzyOp op : {FuzzyOp::h_product, FuzzyOp::h_intrinsic, FuzzyOp::h_sum})
          CHECK(apply_fuzzy_op(ca, cb, op) == oracle_product(ca, cb, op));
      }
  }
}

TEST_CASE("grid fuzzy h-ideal enumeration") {
  Config cfg;
  const Hemiring c = fixtures::three_chain();
  const auto fam10 = enumerate_grid_fuzzy_ideals(c, 10, IdealKind::h, cfg);
  CHECK(fam10.size() == 11);
  for (const auto& f : fam10) CHECK(is_constant(f));

  const Hemiring f2 = fixtures::two_field();
  const auto fam1 = enumerate_grid_fuzzy_ideals(f2, 1, IdealKind::h, cfg);
  REQUIRE(fam1.size() == 3);
  // the zero function, the characteristic of {0}, and the whole carrier
  CHECK(fam1[0] == constant_fuzzy(f2, Rat::zero()));
  bool saw_chi0 = false, saw_one = false;
  for (const auto& f : fam1) {
    saw_chi0 = saw_chi0 || f == characteristic(f2, parse_subset(f2, "0"));
    saw_one = saw_one || f == constant_fuzzy(f2, Rat::one());
  }
  CHECK(saw_chi0);
  CHECK(saw_one);

  const auto famt = enumerate_grid_fuzzy_ideals(fixtures::trivial(), 7, IdealKind::h, cfg);
  CHECK(famt.size() == 8);

  // every member really is a fuzzy h-ideal, and every grid fuzzy h-ideal
  // shows up (cross-check by exhaustive scan at a tiny grid)
  for (const Hemiring& H : tiny_corpus()) {
    const int d = 2;
    const auto fam = enumerate_grid_fuzzy_ideals(H, d, IdealKind::h, cfg);
    for (const auto& f : fam) CHECK(is_fuzzy_ideal_of_kind(f, IdealKind::h).ok);
    long expected = 0;
    std::vector<int> digits(static_cast<std::size_t>(H.order()), 0);
    for (;;) {
      FuzzySubset f = constant_fuzzy(H, Rat::zero());
      for (int i = 0; i < H.order(); ++i)
        f.values[static_cast<std::size_t>(i)] = Rat(digits[static_cast<std::size_t>(i)], d);
      if (is_fuzzy_ideal_of_kind(f, IdealKind::h).ok) ++expected;
      int i = 0;
      while (i < H.order() && ++digits[static_cast<std::size_t>(i)] > d)
        digits[static_cast<std::size_t>(i++)] = 0;
      if (i == H.order()) break;
    }
    CHECK(static_cast<long>(fam.size()) == expected);
  }
}

TEST_CASE("enumeration respects the family budget") {
  Config cfg;
  cfg.fuzzy_family_budget = 5;
  CHECK_THROWS_AS(enumerate_grid_fuzzy_ideals(fixtures::three_chain(), 10, IdealKind::h, cfg),
                  capacity_error);
}

TEST_CASE("fuzzy classification of the zero characteristic") {
  Config cfg;
  cfg.grid_denominator = 10;
  const Hemiring f = fixtures::two_field();
  const auto fam = enumerate_grid_fuzzy_ideals(f, 10, IdealKind::h, cfg);
  const FuzzySubset chi0 = characteristic(f, parse_subset(f, "0"));
  const FuzzyClassification c = classify_fuzzy(chi0, fam, cfg);
  CHECK_FALSE(c.is_constant);
  REQUIRE(c.prime2.has_value());
  CHECK(*c.prime2);
  CHECK(c.prime2_agree);
  REQUIRE(c.h_prime.has_value());
  CHECK(*c.h_prime);
  CHECK(c.idempotent);
  REQUIRE(c.semiprime2.has_value());
  CHECK(*c.semiprime2);
  CHECK(c.semiprime2_agree);
  // two_field is commutative with identity, so the shortcut identities apply
  REQUIRE(c.product_identity_prime.has_value());
  CHECK(c.identity_shortcuts_agree);
}

TEST_CASE("null multiplication breaks second-sense semiprimeness") {
  Config cfg;
  cfg.grid_denominator = 4;
  const Hemiring f = fixtures::two_field_null();
  const auto fam = enumerate_grid_fuzzy_ideals(f, 4, IdealKind::h, cfg);
  const FuzzySubset chi0 = characteristic(f, parse_subset(f, "0"));
  const FuzzyClassification c = classify_fuzzy(chi0, fam, cfg);
  REQUIRE(c.semiprime2.has_value());
  CHECK_FALSE(*c.semiprime2);
  REQUIRE(c.semiprime2_witness.has_value());
  CHECK(f.element_name(*c.semiprime2_witness) == "e");
  CHECK(c.semiprime2_agree);
}

TEST_CASE("constant membership functions cannot be judged prime") {
  Config cfg;
  cfg.grid_denominator = 4;
  const Hemiring f = fixtures::two_field();
  const auto fam = enumerate_grid_fuzzy_ideals(f, 4, IdealKind::h, cfg);
  const FuzzyClassification c = classify_fuzzy(constant_fuzzy(f, Rat(1, 2)), fam, cfg);
  CHECK(c.is_constant);
  CHECK(c.precondition_note == "non-constant required");
  CHECK_FALSE(c.prime2.has_value());
  CHECK_FALSE(c.semiprime2.has_value());
  CHECK_FALSE(c.h_prime.has_value());
}

TEST_CASE("classification requires a fuzzy h-ideal") {
  Config cfg;
  const Hemiring c = fixtures::three_chain();
  const auto fam = enumerate_grid_fuzzy_ideals(c, 4, IdealKind::h, cfg);
  CHECK_THROWS_AS(classify_fuzzy(characteristic(c, parse_subset(c, "0,a")), fam, cfg),
                  hemiring::domain_error);
}

TEST_CASE("classification requires the grid to cover the membership values") {
  Config cfg;
  cfg.grid_denominator = 4;
  const Hemiring c = fixtures::three_chain();
  const auto fam = enumerate_grid_fuzzy_ideals(c, 4, IdealKind::h, cfg);
  CHECK_THROWS_AS(classify_fuzzy(constant_fuzzy(c, Rat(1, 3)), fam, cfg),
                  hemiring::domain_error);
}
