#include <doctest.h>

#include <sstream>

#include "nrt/construct.hpp"
#include "nrt/io.hpp"

using namespace nrt;

TEST_SUITE("io") {
  TEST_CASE("point files round trip") {
    for (unsigned q : {2u, 3u, 4u, 9u, 11u}) {
      const Field& f = Field::of_order(q);
      const Distribution d = build_optimum_distribution(f, 2, 2, 2);
      std::stringstream ss;
      write_points(ss, d, {"nodes 0,1"});
      const PointFile back = read_points(ss);
      CHECK(&back.dist.field() == &f);
      CHECK(back.dist.points() == d.points());
      CHECK(back.meta.kind == FileKind::points);
      CHECK(back.meta.nodes == "0,1");
    }
  }

  TEST_CASE("digit strings are most significant first") {
    const Field& f3 = Field::get(3, 1);
    const Point x = Point::from_numerators(f3, 2, std::vector<std::uint64_t>{5});
    CHECK(format_digits(x, 0) == "12");
    const Field& f11 = Field::get(11, 1);
    CHECK(format_digits(Point::from_numerators(f11, 2, std::vector<std::uint64_t>{10 * 11 + 3}), 0) == "10.3");
  }

  TEST_CASE("code files round trip") {
    const Field& f4 = Field::get(2, 2);
    const LinearCode c = build_mds_code(f4, 3, 2, 3);
    std::stringstream ss;
    write_code(ss, c);
    const std::string text = ss.str();
    CHECK(text.find("2 2 1 1 1\n4 3 2 3\n") != std::string::npos);
    CHECK(read_code(ss).code == c);
    CHECK(detect_kind(text) == FileKind::code);
  }

  TEST_CASE("kind detection") {
    CHECK(detect_kind("3 2 2 1\n00 12\n") == FileKind::points);
    CHECK(detect_kind("3 2 2 1\n0 0 1 2\n") == FileKind::code);
    CHECK(!detect_kind("2 2 1 1\n0 1\n"));
    CHECK(detect_kind("# kind code\n2 2 1 1\n0 1\n") == FileKind::code);
  }

  TEST_CASE("parse errors carry line numbers") {
    auto point_error = [](const std::string& text) {
      std::istringstream is(text);
      try {
        read_points(is);
      } catch (const ParseError& e) {
        return e.line();
      }
      return std::size_t{0};
    };
    CHECK_THROWS_AS([] { std::istringstream is(""); read_points(is); }(), ParseError);
    CHECK(point_error("# c\n3 2 2 2\n00 11\n0x 11\n") == 4);
    CHECK(point_error("3 2 2 2\n00 11\n") == 2);
    CHECK(point_error("3 2 2 1\n00 13\n") == 2);
    CHECK(point_error("6 2 2 1\n00 11\n") == 1);
    CHECK(point_error("3 2 2 1\n00 11\n00 00\n") == 3);
    CHECK(point_error("2 2 1 1 1\n3 1 1 0\n") == 2);
    std::istringstream dep("2 1 2 2\n1 0\n1 0\n");
    CHECK_THROWS_WITH_AS(read_code(dep), doctest::Contains("linearly dependent"), ParseError);
  }
}
