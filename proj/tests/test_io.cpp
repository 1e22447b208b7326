#include <doctest.h>

#include <string>

#include "omkit/catalog.hpp"
#include "omkit/errors.hpp"
#include "omkit/io.hpp"

using namespace omkit;

namespace {

int line_of(auto&& f) {
  try {
    f();
  } catch (const parse_error& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("arrangement round trip") {
    for (const auto& e : catalog()) {
      CAPTURE(e.name);
      const auto text = format_arrangement(e.arrangement);
      CHECK(parse_arrangement(text) == e.arrangement);
    }
    const auto a = parse_arrangement("# two lines\nd=2\n\n1/2 0 | -3/4\n0 1 | 0  # y = 0\n");
    CHECK(a.size() == 2);
    CHECK(a[0].offset == Rational(-3, 4));
  }

  TEST_CASE("covector and chirotope round trips") {
    const auto v = CovectorSet(2, {SignVector::parse("00"), SignVector::parse("+-"), SignVector::parse("-+")});
    CHECK(parse_covectors(format_covectors(v)) == v);
    const auto chi = cone_chirotope(find_entry("fig3-class5")->arrangement);
    CHECK(parse_chirotope(format_chirotope(chi)) == chi);
    CHECK(parse_chirotope("m=4 r=2\n# comment\n++++++\n").str() == "++++++");
  }

  TEST_CASE("errors carry line numbers") {
    CHECK(line_of([] { parse_arrangement("d=2\n1 0 | 0\n1 0 0 | 1\n"); }) == 3);
    CHECK(line_of([] { parse_arrangement("d=2\n1 0 | 0\n1 x | 1\n"); }) == 3);
    CHECK(line_of([] { parse_arrangement("# c\nd=2\n1 0 | 0\n2 0 | 0\n"); }) == 4);
    CHECK(line_of([] { parse_arrangement("x=2\n"); }) == 1);
    CHECK(line_of([] { parse_covectors("n=3\n+-0\n+-\n"); }) == 3);
    CHECK(line_of([] { parse_covectors("n=2\n+*\n"); }) == 2);
    CHECK(line_of([] { parse_chirotope("m=4 r=2\n+++\n"); }) == 2);
    try {
      parse_arrangement("d=2\n1 0 | 0\n1 0 0 | 1\n");
    } catch (const parse_error& e) {
      CHECK(std::string(e.what()).rfind("line 3: ", 0) == 0);
    }
  }

  TEST_CASE("exports") {
    const auto svg = export_svg(find_entry("fig3-class3")->arrangement);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<line") != std::string::npos);
    const auto obj = export_scene(find_entry("fig6-tetrahedron")->arrangement);
    int objects = 0;
    for (std::size_t p = obj.find("\no plane"); p != std::string::npos; p = obj.find("\no plane", p + 1)) ++objects;
    if (obj.rfind("o plane", 0) == 0) ++objects;
    CHECK(objects == 4);
    CHECK_THROWS_AS(export_svg(find_entry("fig6-tetrahedron")->arrangement), dimension_error);
    CHECK_THROWS_AS(export_scene(find_entry("fig2")->arrangement), dimension_error);
  }
}
