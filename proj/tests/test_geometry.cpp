#include <doctest.h>

#include <random>

#include "nrt/construct.hpp"
#include "nrt/geometry.hpp"
#include "oracles.hpp"

using namespace nrt;

namespace {

Distribution from_numerators(const Field& f, std::size_t s, const std::vector<std::vector<std::uint64_t>>& pts) {
  Distribution d(f, pts.front().size(), s);
  for (const auto& p : pts) d.add(Point::from_numerators(f, s, p));
  return d;
}

// Rational comparison of each coordinate with the box edges.
std::uint64_t naive_count(const Distribution& d, const ElementaryBox& box) {
  std::uint64_t c = 0;
  for (const auto& x : d.points()) {
    bool in = true;
    for (std::size_t j = 0; j < d.n(); ++j) {
      const Rational side(1, big_pow(d.field().q(), static_cast<unsigned>(box.a[j])));
      const Rational lo = side * static_cast<long long>(box.m[j]);
      in = in && lo <= x.coordinate(j) && x.coordinate(j) < lo + side;
    }
    c += in;
  }
  return c;
}

// All A in [0, cap]^n with the given sum, by odometer.
std::vector<std::vector<std::size_t>> exponent_vectors(std::size_t n, std::size_t total, std::size_t cap) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> a(n, 0);
  while (true) {
    std::size_t sum = 0;
    for (auto x : a) sum += x;
    if (sum == total) out.push_back(a);
    std::size_t i = 0;
    while (i < n && ++a[i] == cap + 1) a[i++] = 0;
    if (i == n) return out;
  }
}

// Every box with the given exponents holds exactly `want` points.
bool naive_regular(const Distribution& d, std::size_t total, std::size_t cap, std::uint64_t want) {
  const unsigned q = d.field().q();
  for (const auto& a : exponent_vectors(d.n(), total, cap)) {
    std::vector<std::uint64_t> m(d.n(), 0), radix(d.n());
    for (std::size_t j = 0; j < d.n(); ++j) radix[j] = checked_power(q, a[j]);
    while (true) {
      if (naive_count(d, ElementaryBox{a, m}) != want) return false;
      std::size_t i = 0;
      while (i < d.n() && ++m[i] == radix[i]) m[i++] = 0;
      if (i == d.n()) break;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("box counts") {
    const Field& f2 = Field::get(2, 1);
    const Distribution d = from_numerators(f2, 1, {{0, 0}, {1, 1}});
    CHECK(box_count(d, ElementaryBox{{0, 0}, {0, 0}}) == 2);
    CHECK(box_count(d, ElementaryBox{{1, 0}, {1, 0}}) == 1);
    const Distribution origin = from_numerators(f2, 2, {{0, 0}});
    for (std::size_t a1 = 0; a1 <= 2; ++a1)
      for (std::size_t a2 = 0; a2 <= 2; ++a2) CHECK(box_count(origin, ElementaryBox{{a1, a2}, {0, 0}}) == 1);
    ElementaryBox b{{1, 2}, {1, 3}};
    CHECK(b.volume(2) == Rational(1, 8));
    CHECK(b.total_exponent() == 3);
  }

  TEST_CASE("box counts agree with rational comparison") {
    std::mt19937_64 rng(9);
    const Field& f3 = Field::get(3, 1);
    Distribution d(f3, 2, 2);
    for (int i = 0; i < 20; ++i) d.add(Point(oracle::random_word(f3, 2, 2, rng)));
    for (std::size_t a1 = 0; a1 <= 3; ++a1)
      for (std::size_t a2 = 0; a2 <= 2; ++a2)
        for (std::uint64_t m1 = 0; m1 < checked_power(3, a1); ++m1)
          for (std::uint64_t m2 = 0; m2 < checked_power(3, a2); ++m2) {
            const ElementaryBox box{{a1, a2}, {m1, m2}};
            REQUIRE(box_count(d, box) == naive_count(d, box));
          }
  }

  TEST_CASE("compositions in colex order") {
    std::vector<std::vector<std::size_t>> seen;
    for_each_composition(3, 2, 2, [&](const std::vector<std::size_t>& a) { seen.push_back(a); });
    CHECK(seen.size() == 6);
    CHECK(seen.front() == std::vector<std::size_t>{2, 0, 0});
    CHECK(seen.back() == std::vector<std::size_t>{0, 0, 2});
    std::size_t count = 0;
    for_each_composition(2, 3, 1, [&](const std::vector<std::size_t>&) { ++count; });
    CHECK(count == 0);
  }

  TEST_CASE("net examples") {
    const Field& f2 = Field::get(2, 1);
    CHECK(is_net(from_numerators(f2, 1, {{0, 0}, {1, 1}}), 0));
    const Distribution bad = from_numerators(f2, 1, {{0, 0}, {0, 1}});
    CHECK(!is_net(bad, 0));
    const BoxReport r = check_net(bad, 0, 1);
    REQUIRE(r.violation);
    CHECK(r.violation->count != r.violation->expected);
    CHECK(is_net(bad, 1));
    CHECK_THROWS_WITH(check_net(from_numerators(f2, 1, {{0, 0}}), 0, 1), doctest::Contains("not q^s points"));
  }

  TEST_CASE("optimum examples") {
    const Field& f2 = Field::get(2, 1);
    Distribution all(f2, 2, 2);
    oracle::for_each_matrix(f2, 2, 2, [&](const CodeWord& w) { all.add(Point(w)); });
    CHECK(is_optimum(all, 4));
    const Field& f3 = Field::get(3, 1);
    const Distribution d = build_optimum_distribution(f3, 2, 2, 2);
    CHECK(is_optimum(d, 2));
    CHECK(naive_regular(d, 2, 2, 1));
    CHECK(naive_regular(d, 1, 2, 3));
    CHECK(check_counts(d, 2).ok);
    CHECK(check_box_regularity(d, 0, 9).ok);
    CHECK(check_box_regularity(d, 1, 3).ok);
    std::vector<Point> pts = d.points();
    pts[1] = pts[0];
    const Distribution dup(f3, 2, 2, pts);
    const BoxReport r = check_optimum(dup, 2);
    CHECK(!r.ok);
    REQUIRE(r.violation);
    CHECK(!check_counts(dup, 2).ok);
  }

  TEST_CASE("optimum check agrees with the naive box scan") {
    std::mt19937_64 rng(21);
    const Field& f2 = Field::get(2, 1);
    for (int trial = 0; trial < 60; ++trial) {
      Distribution d(f2, 2, 2);
      std::vector<CodeWord> all;
      oracle::for_each_matrix(f2, 2, 2, [&](const CodeWord& w) { all.push_back(w); });
      std::shuffle(all.begin(), all.end(), rng);
      for (int i = 0; i < 4; ++i) d.add(Point(all[static_cast<std::size_t>(i)]));
      const bool expect = naive_regular(d, 2, 2, 1);
      REQUIRE(is_optimum(d, 2) == expect);
      REQUIRE(is_net(d, 0) == naive_regular(d, 2, 2, 1));
    }
    // random subsets are rarely optimum; a constructed one must be
    const Distribution good = build_optimum_distribution(f2, 2, 2, 2);
    CHECK(is_optimum(good, 2));
    CHECK(naive_regular(good, 2, 2, 1));
  }

  TEST_CASE("nets from optimum distributions") {
    const Field& f3 = Field::get(3, 1);
    const NetParams p0 = net_from_optimum(build_optimum_distribution(f3, 2, 2, 2), 2);
    CHECK(p0.delta == 0);
    const Distribution d3 = build_optimum_distribution(f3, 2, 2, 3);
    const NetParams p1 = net_from_optimum(d3, 3);
    CHECK(p1.delta == 1);
    CHECK(p1.s == 3);
    CHECK(is_net(d3, 1, 3));
    CHECK(naive_regular(d3, 2, 3, 3));
    const Field& f2 = Field::get(2, 1);
    const NetParams full = net_from_optimum(build_optimum_distribution(f2, 2, 2, 4), 4);
    CHECK(full.delta == 2);
    CHECK_THROWS(net_from_optimum(build_optimum_distribution(f3, 2, 2, 1), 1));
  }

  TEST_CASE("base reduction of nets") {
    const Field& f3 = Field::get(3, 1);
    const BaseReduction same = base_reduce_net(build_optimum_distribution(f3, 2, 1, 1), 0);
    CHECK(same.delta_prime == 0);
    CHECK(same.report.ok);
    const Field& f4 = Field::get(2, 2);
    const Distribution d = build_optimum_distribution(f4, 2, 1, 1);
    REQUIRE(is_net(d, 0));
    const BaseReduction r = base_reduce_net(d, 0);
    CHECK(r.delta_prime == 1);
    CHECK(r.s_prime == 2);
    CHECK(r.reduced.field().q() == 2);
    CHECK(r.report.ok);
    CHECK(naive_regular(r.reduced, 1, 2, 2));
  }

  TEST_CASE("star discrepancy examples") {
    const Field& f2 = Field::get(2, 1);
    CHECK(star_discrepancy(from_numerators(f2, 1, {{0}, {1}})) == Rational(1, 2));
    CHECK(star_discrepancy(from_numerators(f2, 1, {{0}})) == 1);
    const Field& f3 = Field::get(3, 1);
    Distribution all(f3, 1, 2);
    for (std::uint64_t m = 0; m < 9; ++m) all.add(Point::from_numerators(f3, 2, std::vector<std::uint64_t>{m}));
    CHECK(star_discrepancy(all) == Rational(1, 9));
    CHECK(discrepancy_count_form(all) == 1);
  }

  TEST_CASE("star discrepancy agrees with the full-grid scan") {
    std::mt19937_64 rng(31);
    for (unsigned q : {2u, 3u}) {
      const Field& f = Field::of_order(q);
      for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + trial % 2, N = 1 + static_cast<std::size_t>(trial);
        Distribution d(f, n, 2);
        for (std::size_t i = 0; i < N; ++i) d.add(Point(oracle::random_word(f, n, 2, rng)));
        REQUIRE(star_discrepancy(d) == oracle::star_discrepancy(d));
      }
    }
  }

  TEST_CASE("discrepancy bound") {
    const Field& f2 = Field::get(2, 1);
    const Distribution d = build_optimum_distribution(f2, 2, 2, 2);
    CHECK_THROWS_AS(star_discrepancy(d, 10), std::length_error);
  }

  TEST_CASE("distribution rejects mismatched points") {
    const Field& f2 = Field::get(2, 1);
    Distribution d(f2, 2, 2);
    CHECK_THROWS(d.add(Point(CodeWord(f2, 2, 3))));
    CHECK_THROWS(d.add(Point(CodeWord(Field::get(3, 1), 2, 2))));
  }
}
