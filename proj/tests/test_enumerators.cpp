#include <doctest.h>

#include <random>

#include "nrt/construct.hpp"
#include "nrt/enumerators.hpp"
#include "oracles.hpp"

using namespace nrt;

TEST_SUITE("enumerators") {
  TEST_CASE("box enumerator of the zero code and the whole space") {
    const Field& f3 = Field::get(3, 1);
    const BoxEnumerator z = box_enumerator(LinearCode::zero(f3, 2, 2));
    CHECK(z.c.size() == 9);
    for (const auto& v : z.c) CHECK(v == 1);
    const BoxEnumerator w = box_enumerator(LinearCode::whole_space(f3, 2, 2));
    for (std::size_t i = 0; i < w.c.size(); ++i) {
      const auto a = w.exponents(i);
      CHECK(w.index(a) == i);
      CHECK(w.c[i] == big_pow(3, static_cast<unsigned>(4 - a[0] - a[1])));
    }
  }

  TEST_CASE("box enumerator counts corner boxes") {
    std::mt19937_64 rng(8);
    for (unsigned q : {2u, 3u}) {
      const Field& f = Field::of_order(q);
      for (int trial = 0; trial < 10; ++trial) {
        const LinearCode c = random_code(f, 2, 2, 1 + static_cast<std::size_t>(trial) % 4, rng);
        const Distribution d = distribution_of(c);
        const BoxEnumerator be = box_enumerator(c);
        for (std::size_t i = 0; i < be.c.size(); ++i) {
          const auto a = be.exponents(i);
          REQUIRE(be.c[i] == BigInt(box_count(d, ElementaryBox{a, std::vector<std::uint64_t>(2, 0)})));
        }
      }
    }
  }

  TEST_CASE("weight enumerator") {
    const Field& f2 = Field::get(2, 1);
    CHECK(weight_enumerator(LinearCode::zero(f2, 1, 3)) == std::vector<BigInt>{1, 0, 0, 0});
    CHECK(weight_enumerator(LinearCode::whole_space(f2, 1, 2)) == std::vector<BigInt>{1, 1, 2});
    const Field& f3 = Field::get(3, 1);
    const LinearCode c = build_mds_code(f3, 2, 2, 2);
    CHECK(weight_enumerator(c) == spectrum_mds_formula(3, 2, 2, 2).w);
  }

  TEST_CASE("box duality") {
    std::mt19937_64 rng(12);
    for (unsigned q : {2u, 3u, 4u}) {
      const Field& f = Field::of_order(q);
      for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 1 + trial % 3, s = 1 + trial % 2;
        const LinearCode c = random_code(f, n, s, static_cast<std::size_t>(trial) % (n * s + 1), rng);
        REQUIRE(box_duality_check(c, dual_code(c)));
      }
    }
    // a wrong partner is detected
    const Field& f2 = Field::get(2, 1);
    const LinearCode c = LinearCode::span_of(f2, 2, 1, {CodeWord::from_rows(f2, {{1}, {0}})});
    CHECK(!box_duality_check(c, c));
  }

  TEST_CASE("n = 1 identities over all subspaces") {
    for (auto [q, s] : std::vector<std::pair<unsigned, std::size_t>>{{2, 2}, {2, 3}, {3, 2}, {4, 2}}) {
      std::size_t seen = 0;
      for_each_subspace(Field::of_order(q), 1, s, [&](const LinearCode& d) {
        REQUIRE(weight_box_relation_check(d));
        REQUIRE(macwilliams_n1_check(d, dual_code(d)));
        ++seen;
      });
      CHECK(seen > 0);
    }
    const Field& f2 = Field::get(2, 1);
    CHECK(macwilliams_n1_check(LinearCode::zero(f2, 1, 3), LinearCode::whole_space(f2, 1, 3)));
  }

  TEST_CASE("MacWilliams check rejects a non-dual pair") {
    const Field& f2 = Field::get(2, 1);
    const LinearCode d = LinearCode::span_of(f2, 1, 3, {CodeWord::from_rows(f2, {{1, 0, 0}})});
    CHECK(!macwilliams_n1_check(d, d));
  }

  TEST_CASE("identities need n = 1") {
    const Field& f2 = Field::get(2, 1);
    const LinearCode c = build_mds_code(f2, 2, 1, 1);
    CHECK_THROWS_WITH(macwilliams_n1_check(c, dual_code(c)), doctest::Contains("identity proven only for n=1"));
    CHECK_THROWS(weight_box_relation_check(c));
  }

  TEST_CASE("character sums") {
    const Field& f2 = Field::get(2, 1);
    const LinearCode d = LinearCode::span_of(f2, 1, 2, {CodeWord::from_rows(f2, {{1, 0}})});
    const CharacterSumReport r = character_sum_check(d);
    CHECK(r.ok);
    CHECK(r.ys_checked == 4);
    CHECK(!r.sampled);
    std::mt19937_64 rng(4);
    for (unsigned q : {3u, 4u, 9u}) {
      const Field& f = Field::of_order(q);
      const LinearCode c = random_code(f, 2, 2, 2, rng);
      CHECK(character_sum_check(c).ok);
    }
    const Field& f3 = Field::get(3, 1);
    const CharacterSumReport sampled = character_sum_check(random_code(f3, 3, 3, 4, rng), 1000, 200, 3);
    CHECK(sampled.ok);
    CHECK(sampled.sampled);
    CHECK(sampled.ys_checked == 200);
  }
}
