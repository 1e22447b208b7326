#include <doctest.h>

#include <set>

#include "omkit/catalog.hpp"

using namespace omkit;

TEST_SUITE("catalog") {
  TEST_CASE("names are unique and lookups work") {
    std::set<std::string> names;
    for (const auto& e : catalog()) names.insert(e.name);
    CHECK(names.size() == catalog().size());
    CHECK(find_entry("pappus") != nullptr);
    CHECK(find_entry("no-such-entry") == nullptr);
    CHECK(entries_with_prefix("fig3-class").size() == 8);
    CHECK(entries_with_prefix("fig9-").size() == 4);
    CHECK(entries_with_prefix("fig10-right").size() == 7);
  }

  TEST_CASE("verification passes") {
    const auto report = catalog_verify();
    INFO(report.str());
    CHECK(report.ok());
    std::set<std::string> names;
    for (const auto& c : report.checks) names.insert(c.name);
    for (const char* group : {"fig1", "fig3", "fig5-fig6", "fig9", "fig10", "fig11", "fig12", "fig13",
                              "rank3-five-planes", "five-planes-total", "pappus", "gp8"})
      CHECK(names.count(group) == 1);
  }
}
