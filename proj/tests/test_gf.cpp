#include <doctest.h>

#include <set>

#include "nrt/gf.hpp"
#include "oracles.hpp"

using namespace nrt;

namespace {

const std::vector<unsigned> kSmallOrders{2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

}  // namespace

TEST_SUITE("gf") {
  TEST_CASE("addition examples") {
    CHECK(Field::get(2, 1).add(1, 1) == 0);
    CHECK(Field::get(3, 1).add(2, 2) == 1);
    const Field& f4 = Field::get(2, 2);
    CHECK(f4.spec().modulus == std::vector<unsigned>{1, 1, 1});
    CHECK(f4.elem(2) + f4.elem(3) == f4.elem(1));
  }

  TEST_CASE("multiplication and inverse examples") {
    const Field& f4 = Field::get(2, 2);
    CHECK(f4.mul(2, 2) == 3);
    CHECK(Field::get(3, 1).mul(2, 2) == 1);
    CHECK(f4.inv(2) == 3);
    CHECK(Field::get(5, 1).inv(2) == 3);
    for (unsigned q : kSmallOrders) {
      const Field& f = Field::of_order(q);
      CHECK(f.inv(1) == 1);
      for (Label a = 0; a < q; ++a) CHECK(f.mul(a, 1) == a);
      CHECK_THROWS_WITH_AS(f.inv(0), "division by zero", std::domain_error);
    }
  }

  TEST_CASE("mixing fields is rejected") {
    const FieldElement a = Field::get(2, 1).elem(1), b = Field::get(3, 1).elem(1);
    CHECK_THROWS_WITH(a + b, "field mismatch");
  }

  TEST_CASE("labels and digits") {
    const Field& f8 = Field::get(2, 3);
    const std::vector<unsigned> mu{1, 0, 1};
    CHECK(f8.from_digits(mu) == 5);
    CHECK(f8.digits(5) == mu);
    const Field& f9 = Field::get(3, 2);
    const std::vector<unsigned> mu9{2, 1};
    CHECK(f9.from_digits(mu9) == 5);
    CHECK(f9.elem(0).is_zero());
    CHECK_THROWS(f9.elem(9));
    for (unsigned q : kSmallOrders) {
      const Field& f = Field::of_order(q);
      for (Label m = 0; m < q; ++m) {
        CHECK(int_of(elem_of(f, m)) == m);
        CHECK(f.from_digits(f.digits(m)) == m);
      }
    }
  }

  TEST_CASE("tables agree with schoolbook arithmetic") {
    for (unsigned q : kSmallOrders) {
      const Field& f = Field::of_order(q);
      const oracle::SlowField slow{f.p(), f.e(), f.spec().modulus};
      for (Label a = 0; a < q; ++a)
        for (Label b = 0; b < q; ++b) {
          REQUIRE(f.add(a, b) == slow.add(a, b));
          REQUIRE(f.mul(a, b) == slow.mul(a, b));
        }
    }
  }

  TEST_CASE("field axioms, exhaustive for q <= 16") {
    for (unsigned q : kSmallOrders) {
      const Field& f = Field::of_order(q);
      for (Label a = 0; a < q; ++a) {
        if (a) REQUIRE(f.mul(a, f.inv(a)) == 1);
        REQUIRE(f.add(a, f.neg(a)) == 0);
        for (Label b = 0; b < q; ++b) {
          REQUIRE(f.add(a, b) == f.add(b, a));
          REQUIRE(f.mul(a, b) == f.mul(b, a));
          REQUIRE(f.sub(f.add(a, b), b) == a);
          for (Label c = 0; c < q; ++c) {
            REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          }
        }
      }
    }
  }

  TEST_CASE("trace") {
    const Field& f4 = Field::get(2, 2);
    CHECK(f4.trace(2) == f4.add(2, f4.mul(2, 2)));
    CHECK(f4.trace(2) == 1);
    for (unsigned q : kSmallOrders) {
      const Field& f = Field::of_order(q);
      CHECK(f.trace(0) == 0);
      std::set<Label> image;
      for (Label a = 0; a < q; ++a) {
        if (f.e() == 1) CHECK(f.trace(a) == a);
        REQUIRE(f.trace(a) < f.p());
        image.insert(f.trace(a));
        for (Label b = 0; b < q; ++b) REQUIRE(f.trace(f.add(a, b)) == (f.trace(a) + f.trace(b)) % f.p());
        for (Label c = 0; c < f.p(); ++c) REQUIRE(f.trace(f.mul(c, a)) == (c * f.trace(a)) % f.p());
      }
      CHECK(image.size() == f.p());
    }
  }

  TEST_CASE("Frobenius fixes exactly the prime subfield") {
    for (unsigned q : kSmallOrders) {
      const Field& f = Field::of_order(q);
      std::set<Label> image;
      for (Label a = 0; a < q; ++a) {
        image.insert(f.frobenius(a));
        CHECK((f.frobenius(a) == a) == (a < f.p()));
        for (Label b = 0; b < q; ++b) REQUIRE(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
      }
      CHECK(image.size() == q);
    }
  }

  TEST_CASE("primitive element generates the multiplicative group") {
    for (unsigned q : kSmallOrders) {
      const Field& f = Field::of_order(q);
      std::set<Label> seen;
      Label x = 1;
      for (unsigned i = 0; i + 1 < q; ++i, x = f.mul(x, f.primitive())) seen.insert(x);
      CHECK(seen.size() == q - 1);
    }
  }

  TEST_CASE("field specs") {
    const Field& f = Field::get(3, 2);
    CHECK(FieldSpec::parse(f.spec().to_string()) == f.spec());
    CHECK(&Field::get(f.spec()) == &f);
    CHECK(&Field::of_order(9) == &f);
    CHECK_THROWS(Field::of_order(6));
    CHECK_THROWS(FieldSpec::parse("2 2 1 0"));
    // z^2 + 1 = (z + 1)^2 over F_2
    CHECK_THROWS(Field::get(FieldSpec{2, 2, {1, 0, 1}}));
    CHECK(!prime_power(12));
    CHECK(prime_power(27) == std::make_pair(3u, 3u));
  }

  TEST_CASE("alternative modulus gives a different labelling") {
    // z^2 + 2z + 2 is irreducible over F_3
    const Field& alt = Field::get(FieldSpec{3, 2, {2, 2, 1}});
    const Field& def = Field::get(3, 2);
    CHECK(&alt != &def);
    const oracle::SlowField slow{3, 2, {2, 2, 1}};
    for (Label a = 0; a < 9; ++a)
      for (Label b = 0; b < 9; ++b) REQUIRE(alt.mul(a, b) == slow.mul(a, b));
  }

  TEST_CASE("large field uses schoolbook multiplication") {
    const Field& f = Field::get(2, 13);
    CHECK(!f.uses_log_tables());
    const oracle::SlowField slow{2, 13, f.spec().modulus};
    for (Label a : {1u, 2u, 77u, 4095u, 8191u})
      for (Label b : {3u, 1000u, 5555u}) CHECK(f.mul(a, b) == slow.mul(a, b));
    CHECK(f.mul(1234, f.inv(1234)) == 1);
  }
}
