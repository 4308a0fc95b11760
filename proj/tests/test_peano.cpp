#include <doctest.h>

#include <random>

#include "nrt/peano.hpp"
#include "oracles.hpp"

using namespace nrt;

namespace {

// Direct interleave: out row j, position i*g + l is entry i of row j*g + l.
CodeWord interleave(const CodeWord& w, std::size_t g) {
  const std::size_t n = w.n() / g, s = w.s();
  CodeWord out(w.field(), n, g * s);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < g; ++l)
      for (std::size_t i = 0; i < s; ++i) out.at(j, i * g + l) = w.at(j * g + l, i);
  return out;
}

}  // namespace

TEST_SUITE("peano") {
  TEST_CASE("interleave examples") {
    const Field& f2 = Field::get(2, 1);
    const CodeWord w = CodeWord::from_rows(f2, {{1, 0}, {1, 1}});
    CHECK(peano_forward(w, 2).flat() == std::vector<Label>{1, 1, 0, 1});
    CHECK(peano_forward(w, 1) == w);
    CHECK(j_involution(w, 1) == w);
    CHECK(j_involution(w, 2) == CodeWord::from_rows(f2, {{1, 1}, {1, 0}}));
    CHECK_THROWS(peano_forward(CodeWord(f2, 3, 2), 2));
  }

  TEST_CASE("maps agree with the direct interleave and invert") {
    std::mt19937_64 rng(6);
    for (unsigned q : {2u, 3u, 4u})
      for (std::size_t g = 1; g <= 3; ++g)
        for (int trial = 0; trial < 20; ++trial) {
          const CodeWord w = oracle::random_word(Field::of_order(q), 2 * g, 2, rng);
          const CodeWord x = peano_forward(w, g);
          REQUIRE(x == interleave(w, g));
          REQUIRE(peano_inverse(x, g) == w);
          REQUIRE(j_involution(j_involution(w, g), g) == w);
          REQUIRE(rho_weight(j_involution(w, g)) == rho_weight(w));
        }
  }

  TEST_CASE("weight transport on a worked example") {
    const Field& f2 = Field::get(2, 1);
    const WeightTransport t = weight_transport(CodeWord::from_rows(f2, {{1, 0}, {1, 1}}), 2);
    CHECK(t.rho_before == 3);
    CHECK(t.rho_after == 4);
    CHECK(t.rho_block_formula == 4);
    CHECK(t.interleaved_formula_holds());
    const WeightTransport z = weight_transport(CodeWord(f2, 2, 2), 2);
    CHECK(z.rho_before + z.rho_after + z.kappa_before + z.kappa_after == 0);
  }

  TEST_CASE("block formula fails when the last nonzero row is not the heaviest") {
    // rows (0,1) and (0,0): interleave gives (0,0,1,0), so rho = 3, while the block
    // formula gives rho(row 1) + 0 = 2.
    const Field& f2 = Field::get(2, 1);
    const CodeWord w = CodeWord::from_rows(f2, {{0, 1}, {0, 0}});
    const WeightTransport t = weight_transport(w, 2);
    CHECK(t.rho_after == 3);
    CHECK(t.rho_block_formula == 2);
    CHECK(!t.block_formula_holds());
    CHECK(t.rho_interleaved_formula == 3);
  }

  TEST_CASE("weight transport, exhaustive on small spaces") {
    for (unsigned q : {2u, 3u})
      for (std::size_t g = 1; g <= 3; ++g)
        for (std::size_t s = 1; s <= 2; ++s) {
          if (std::pow(q, g * s * 2) > 7000) continue;
          oracle::for_each_matrix(Field::of_order(q), g * 2, s, [&](const CodeWord& w) {
            const WeightTransport t = weight_transport(w, g);
            REQUIRE(t.kappa_preserved());
            REQUIRE(t.rho_not_decreased());
            REQUIRE(t.rho_after == oracle::rho(interleave(w, g)));
            REQUIRE(t.interleaved_formula_holds());
          });
        }
  }

  TEST_CASE("adjoint identity") {
    std::mt19937_64 rng(10);
    for (unsigned q : {2u, 3u, 4u})
      for (std::size_t g = 1; g <= 3; ++g)
        for (int trial = 0; trial < 30; ++trial) {
          const Field& f = Field::of_order(q);
          const CodeWord a = oracle::random_word(f, 2 * g, 3, rng), b = oracle::random_word(f, 2 * g, 3, rng);
          REQUIRE(inner_product(peano_forward(a, g), peano_forward(b, g)) == inner_product(j_involution(a, g), b));
        }
  }

  TEST_CASE("dual transport") {
    std::mt19937_64 rng(13);
    const Field& f3 = Field::get(3, 1);
    for (int trial = 0; trial < 10; ++trial) {
      const LinearCode c = random_code(f3, 2, 1, 1, rng);
      CHECK(dual_transport(c, 2).equal);
      CHECK(dual_transport(c, 1).map_then_dual == dual_code(c));
    }
    for (unsigned q : {2u, 4u})
      for (int trial = 0; trial < 10; ++trial) {
        const LinearCode c = random_code(Field::of_order(q), 4, 2, 1 + static_cast<std::size_t>(trial) % 8, rng);
        REQUIRE(dual_transport(c, 2).equal);
      }
  }

  TEST_CASE("composite constructions") {
    const Field& f3 = Field::get(3, 1);
    const CompositeResult r = build_composite(f3, 2, 2, 1, 1);
    REQUIRE(r.t == 1u);
    CHECK(r.mapped.n() == 2);
    CHECK(r.mapped.s() == 2);
    CHECK(r.mapped.k() == 2);
    CHECK(oracle::min_weight(r.mapped, true) == 3);
    CHECK(oracle::min_weight(r.mapped, false) >= 3);
    CHECK(oracle::min_weight(r.mapped_dual, true) == 3);
    CHECK(r.ok());
    CHECK(r.claims.size() == 5);
    CHECK(dual_transport(r.base, 2).equal);
    const CompositeResult plain = build_composite(f3, 1, 2, 2, 2);
    CHECK(plain.mapped == build_mds_code(f3, 2, 2, 2));
    const CompositeResult odd = build_composite(f3, 1, 2, 2, 3);
    CHECK(!odd.t);
    CHECK(odd.claims.empty());
    CHECK_THROWS(build_composite(Field::get(2, 1), 2, 2, 1, 1));
  }

  TEST_CASE("base change weights") {
    const Field& f4 = Field::get(2, 2);
    const BaseChangeWeights b = base_change_weights(CodeWord(f4, 1, 2, {2, 0}));
    CHECK(b.rho_q == 1);
    CHECK(b.rho_p == 2);
    CHECK(b.ok());
    std::mt19937_64 rng(14);
    const Field& f3 = Field::get(3, 1);
    for (int trial = 0; trial < 20; ++trial) {
      const BaseChangeWeights same = base_change_weights(oracle::random_word(f3, 2, 2, rng));
      CHECK(same.rho_p == same.rho_q);
      CHECK(same.kappa_p == same.kappa_q);
      REQUIRE(base_change_weights(oracle::random_word(Field::get(3, 2), 3, 2, rng)).ok());
    }
    const DistributionBaseChange d = base_change_distribution(build_mds_code(f4, 2, 2, 2), 2);
    CHECK(d.ok());
    REQUIRE(d.optimum_bound);
  }

  TEST_CASE("composite weights in base p") {
    const Field& f4 = Field::get(2, 2);
    const CompositeBaseP small = composite_base_p_weights(f4, 1, 2, 1, 1);
    REQUIRE(small.claims.size() == 5);
    // The printed dual Hamming bound teg+1 = 3 is not met: the dual of this [2,1] code
    // contains a word with two nonzero binary digits.
    CHECK(small.claims[3].measured == 2);
    CHECK(!small.claims[3].holds());
    CHECK(small.claims[4].holds());
    for (std::size_t i : {0u, 1u, 2u}) CHECK(small.claims[i].holds());
    const CompositeBaseP big = composite_base_p_weights(f4, 2, 2, 1, 1);
    CHECK(big.composite.ok());
    for (std::size_t i : {0u, 1u, 2u, 4u}) CHECK(big.claims[i].holds());
    const Field& f3 = Field::get(3, 1);
    const CompositeBaseP prime = composite_base_p_weights(f3, 2, 2, 1, 1);
    for (const auto& c : prime.claims) CHECK(c.holds());
  }
}
