#include "omkit/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "catalog_data.hpp"
#include "omkit/enumeration.hpp"
#include "omkit/io.hpp"
#include "omkit/isomorphism.hpp"

namespace omkit {

namespace {

RationalArrangement compact(int d, const std::string& text) {
  std::string t = "d=" + std::to_string(d) + "\n";
  for (char c : text) t += c == ';' ? '\n' : c;
  return parse_arrangement(t);
}

using Shapes = std::vector<std::string>;

ExpectedFacts shapes(Shapes s) {
  std::sort(s.begin(), s.end());
  ExpectedFacts f;
  f.bounded_chambers = static_cast<int>(s.size());
  f.bounded_shapes = std::move(s);
  return f;
}

ExpectedFacts with_points(ExpectedFacts f, int points) {
  f.points = points;
  return f;
}

ExpectedFacts with_rays(ExpectedFacts f, int rays) {
  f.rays = rays;
  return f;
}

ExpectedFacts counts(int points, int chambers) {
  ExpectedFacts f;
  f.points = points;
  f.chambers = chambers;
  return f;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, std::string figure, std::string description, RationalArrangement a,
                 ExpectedFacts facts = {}) {
    out.push_back({std::move(name), std::move(figure), std::move(description), std::move(a), std::move(facts)});
  };
  auto lines = [](const std::string& text) { return compact(2, text); };
  auto planes = [](const std::string& text) { return compact(3, text); };
  const std::string two_parallel = "0 1 | 0; 0 1 | 1; 1 0 | 0";
  const std::string pencil = "1 0 | 0; 0 1 | 0; 1 -1 | 0";
  const std::string triangle = "1 0 | 0; 0 1 | 0; 1 1 | 1";
  const auto& four = detail::four_line_classes();

  add("fig1-parallel", "Fig. 1", "three parallel planes", trivial_arrangement(3, 3),
      counts(0, 4));
  add("fig1-two-parallel", "Fig. 1", "two parallel planes cut by a third", product_with_axis(lines(two_parallel)));
  add("fig1-pencil", "Fig. 1", "three planes through a line", product_with_axis(lines(pencil)));
  add("fig1-prism", "Fig. 1", "three planes meeting pairwise in parallel lines",
      product_with_axis(lines(triangle)));
  add("fig1-general", "Fig. 1", "three coordinate planes", planes("1 0 0 | 0; 0 1 0 | 0; 0 0 1 | 0"),
      counts(1, 8));

  add("fig2", "Fig. 2", "two crossing lines", lines("1 0 | 0; 0 1 | 0"), counts(1, 4));

  const char* four_descriptions[] = {
      "two parallel lines, two transversals crossing between them",
      "two parallel lines, two transversals crossing outside the strip",
      "four lines in general position",
      "four concurrent lines",
      "two pairs of parallel lines",
      "three parallel lines and a transversal",
      "three concurrent lines and a fourth crossing all three",
      "three concurrent lines and a fourth parallel to one of them",
  };
  const ExpectedFacts four_facts[] = {
      shapes({"triangle", "triangle"}), shapes({"triangle", "quadrilateral"}), counts(6, 11), {}, {},
      {}, {}, {},
  };
  for (std::size_t k = 0; k < four.size(); ++k) {
    add("fig3-class" + std::to_string(k + 1), "Fig. 3", four_descriptions[k], lines(four[k]), four_facts[k]);
  }

  add("fig4", "Fig. 4", "four lines whose cone is the five-plane arrangement of the worked example",
      lines("1 0 | 0; 0 1 | 0; 1 1 | -1; 2 -1 | -8"));

  add("fig5-trivial", "Fig. 5", "four parallel planes", trivial_arrangement(4, 3), counts(0, 5));
  for (std::size_t k = 0; k < four.size(); ++k) {
    add("fig5-product" + std::to_string(k + 1), "Fig. 5",
        std::string("product of the line arrangement fig3-class") + std::to_string(k + 1),
        product_with_axis(lines(four[k])));
  }

  add("fig6-bisected1", "Fig. 6", "bisected product of two parallel lines and a transversal",
      bisect(product_with_axis(lines(two_parallel))));
  add("fig6-bisected2", "Fig. 6", "bisected product of a triangle", bisect(product_with_axis(lines(triangle))));
  add("fig6-tetrahedron", "Fig. 6", "four planes bounding a tetrahedron",
      planes("1 0 0 | 0; 0 1 0 | 0; 0 0 1 | 0; 1 1 1 | 1"), shapes({"tetrahedron"}));
  add("fig6-cone1", "Fig. 6", "cone of a triangle", cone(lines(triangle)));
  add("fig6-cone2", "Fig. 6", "cone of two parallel lines and a transversal", cone(lines(two_parallel)));

  add("fig9-rays16", "Fig. 9", "cone of fig3-class1: one triple line", cone(lines(four[0])), with_rays({}, 16));
  add("fig9-rays20", "Fig. 9", "cone of fig3-class3: no triple lines", cone(lines(four[2])), with_rays({}, 20));
  add("fig9-rays12", "Fig. 9", "cone of fig3-class5: two triple lines sharing a plane", cone(lines(four[4])),
      with_rays({}, 12));
  add("fig9-rays10", "Fig. 9", "cone of fig3-class4: four planes through a line", cone(lines(four[3])),
      with_rays({}, 10));

  add("fig10-left", "Fig. 10", "product of three concurrent lines cut by two parallel planes",
      planes("1 0 0 | 0; 0 1 0 | 0; 1 1 0 | 0; 0 0 1 | 0; 0 0 1 | 1"),
      [] {
        auto f = shapes({});
        f.bounded_edges = 1;
        return f;
      }());
  int right = 0;
  for (std::size_t k = 0; k < four.size(); ++k) {
    const auto base = lines(four[k]);
    if (base.is_central()) continue;
    add("fig10-right" + std::to_string(++right), "Fig. 10",
        "bisected product of fig3-class" + std::to_string(k + 1), bisect(product_with_axis(base)),
        shapes({}));
  }

  const std::map<std::string, ExpectedFacts> bounded_facts = {
      {"fig11-tetrahedron-rays18", with_rays(shapes({"tetrahedron"}), 18)},
      {"fig11-tetrahedron-rays16", with_rays(shapes({"tetrahedron"}), 16)},
      {"fig11-square-pyramid", shapes({"square pyramid"})},
      {"fig11-prism", shapes({"triangular prism"})},
      {"fig12-two-tetrahedra-points6", with_points(shapes({"tetrahedron", "tetrahedron"}), 6)},
      {"fig12-two-tetrahedra-points7", with_points(shapes({"tetrahedron", "tetrahedron"}), 7)},
      {"fig12-two-tetrahedra-points5", with_points(shapes({"tetrahedron", "tetrahedron"}), 5)},
      {"fig12-tetrahedron-prism-points8", with_points(shapes({"tetrahedron", "triangular prism"}), 8)},
      {"fig12-tetrahedron-prism-points7", with_points(shapes({"tetrahedron", "triangular prism"}), 7)},
      {"fig12-pyramid-tetrahedron", shapes({"square pyramid", "tetrahedron"})},
      {"fig12-two-prisms", shapes({"triangular prism", "triangular prism"})},
      {"fig13-two-tetrahedra-prism", shapes({"tetrahedron", "tetrahedron", "triangular prism"})},
      {"fig13-two-tetrahedra-pyramid", shapes({"tetrahedron", "tetrahedron", "square pyramid"})},
      {"fig13-two-prisms-tetrahedron", shapes({"triangular prism", "triangular prism", "tetrahedron"})},
  };
  for (const auto& [name, text] : detail::bounded_five_plane_classes()) {
    const std::string figure = "Fig. " + name.substr(3, 2);
    std::string description = name.substr(6);
    std::replace(description.begin(), description.end(), '-', ' ');
    add(name, figure, description, planes(text), bounded_facts.at(name));
  }
  add("general-position-5", "Fig. 13", "five planes in general position", general_position(5, 3),
      [] {
        auto f = counts(10, 26);
        f.bounded_chambers = 4;
        return f;
      }());

  add("five-trivial", "", "five parallel planes", trivial_arrangement(5, 3), counts(0, 6));
  const auto& five = detail::five_line_classes();
  for (std::size_t k = 0; k < five.size(); ++k) {
    std::string index = std::to_string(k + 1);
    if (index.size() < 2) index = "0" + index;
    add("five-product" + index, "", "product of a five-line arrangement", product_with_axis(lines(five[k])));
  }

  add("pappus", "", "nine lines of the Pappus configuration", pappus().arrangement);
  add("gp8", "", "eight planes of the Goodman-Pollack construction", goodman_pollack8().arrangement);
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

std::vector<std::string> bounded_shape_names(const Fingerprint& fp) {
  std::vector<std::string> out;
  for (const auto& c : fp.chambers) {
    if (c.bounded) out.push_back(shape_name(c, fp.dimension));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Compares the stated facts with the computed fingerprint; empty when all hold.
std::string fact_mismatches(const ExpectedFacts& want, const Fingerprint& fp) {
  std::ostringstream out;
  auto check = [&](const char* what, const std::optional<int>& expected, int got) {
    if (expected && *expected != got) out << what << ' ' << got << " (expected " << *expected << ") ";
  };
  check("points", want.points, fp.points());
  check("rays", want.rays, fp.rays());
  check("chambers", want.chambers, fp.faces_by_dimension.back());
  check("bounded chambers", want.bounded_chambers, fp.bounded_chambers());
  check("bounded edges", want.bounded_edges, fp.bounded_by_dimension.size() > 1 ? fp.bounded_by_dimension[1] : 0);
  if (want.bounded_shapes && *want.bounded_shapes != bounded_shape_names(fp)) out << "bounded chamber shapes differ ";
  std::string s = out.str();
  if (!s.empty()) s.pop_back();
  return s;
}

std::string counted(int n, const std::string& noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

std::string fact_summary(const ExpectedFacts& f) {
  std::vector<std::string> parts;
  if (f.points) parts.push_back(counted(*f.points, "point"));
  if (f.rays) parts.push_back(counted(*f.rays, "ray"));
  if (f.chambers) parts.push_back(counted(*f.chambers, "chamber"));
  if (f.bounded_shapes) {
    std::string s;
    for (const auto& name : *f.bounded_shapes) s += (s.empty() ? "" : ", ") + name;
    parts.push_back(s.empty() ? "no bounded chambers" : "bounded: " + s);
  } else if (f.bounded_chambers) {
    parts.push_back(counted(*f.bounded_chambers, "bounded chamber"));
  }
  if (f.bounded_edges) parts.push_back(counted(*f.bounded_edges, "bounded edge"));
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

class Verifier {
 public:
  Verifier() {
    for (const auto& e : catalog()) {
      fingerprints_.emplace(e.name, fingerprint(faces(e.arrangement), e.arrangement.dimension()));
    }
  }

  const Fingerprint& fp(const std::string& name) const { return fingerprints_.at(name); }

  const std::string& key(const CatalogEntry& e) {
    auto it = keys_.find(e.name);
    if (it == keys_.end()) it = keys_.emplace(e.name, affine_class_key(e.arrangement)).first;
    return it->second;
  }

  std::set<std::string> keys(const std::vector<const CatalogEntry*>& es) {
    std::set<std::string> out;
    for (const auto* e : es) out.insert(key(*e));
    return out;
  }

  void add(std::string name, bool pass, std::string detail) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  }

  CatalogReport report;

 private:
  std::map<std::string, Fingerprint> fingerprints_;
  std::map<std::string, std::string> keys_;
};

std::vector<const CatalogEntry*> concat(std::vector<const CatalogEntry*> a, const std::vector<const CatalogEntry*>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::vector<const CatalogEntry*> entries_with_prefix(std::string_view prefix) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog()) {
    if (std::string_view(e.name).substr(0, prefix.size()) == prefix) out.push_back(&e);
  }
  return out;
}

std::string affine_class_key(const RationalArrangement& a) {
  return canonicalize_chirotope(cone_chirotope(a), a.size()).key();
}

bool CatalogReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CatalogCheck& c) { return c.pass; });
}

std::string CatalogReport::str() const {
  std::string out;
  for (const auto& c : checks) out += (c.pass ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
  return out;
}

CatalogReport catalog_verify() {
  Verifier v;

  for (const auto& e : catalog()) {
    const auto summary = fact_summary(e.expected);
    if (summary.empty()) continue;
    const auto bad = fact_mismatches(e.expected, v.fp(e.name));
    v.add(e.name, bad.empty(), bad.empty() ? summary : bad);
  }

  {
    const auto fig1 = entries_with_prefix("fig1-");
    std::vector<int> ranks;
    for (const auto* e : fig1) ranks.push_back(e->arrangement.rank());
    const std::size_t classes = v.keys(fig1).size();
    v.add("fig1", classes == 5 && ranks == std::vector<int>{1, 2, 2, 2, 3},
          std::to_string(classes) + " classes of three planes, ranks " + join(ranks));
  }

  {
    const auto fig3 = entries_with_prefix("fig3-");
    bool rank2 = std::all_of(fig3.begin(), fig3.end(), [](const CatalogEntry* e) { return e->arrangement.rank() == 2; });
    const std::size_t classes = v.keys(fig3).size();
    v.add("fig3", fig3.size() == 8 && classes == 8 && rank2,
          std::to_string(classes) + " pairwise inequivalent nontrivial classes of four lines");
  }

  {
    const auto four_planes = concat(entries_with_prefix("fig5-"), entries_with_prefix("fig6-"));
    std::vector<int> by_rank(4, 0);
    for (const auto* e : four_planes) ++by_rank[static_cast<std::size_t>(e->arrangement.rank())];
    const std::size_t classes = v.keys(four_planes).size();
    v.add("fig5-fig6", four_planes.size() == 14 && classes == 14 && by_rank == std::vector<int>{0, 1, 8, 5},
          std::to_string(classes) + " pairwise inequivalent classes of four planes, " + std::to_string(by_rank[1]) +
              " + " + std::to_string(by_rank[2]) + " + " + std::to_string(by_rank[3]) + " by rank");
  }

  const auto fig9 = entries_with_prefix("fig9-");
  {
    std::vector<int> rays;
    bool central = true;
    for (const auto* e : fig9) {
      rays.push_back(v.fp(e->name).rays());
      central = central && e->arrangement.is_central() && e->arrangement.rank() == 3;
    }
    const std::size_t classes = v.keys(fig9).size();
    v.add("fig9", classes == 4 && central && rays == std::vector<int>{16, 20, 12, 10},
          std::to_string(classes) + " central essential classes of five planes, rays " + join(rays));
  }

  {
    // The cone of fig4, marked at its added plane, against every marking of
    // every fig9 class.
    const Chirotope cone4 = cone_chirotope(find_entry("fig4")->arrangement);
    const auto target = canonicalize_chirotope(cone4, cone4.ground_size() - 1).key();
    std::vector<std::string> matches;
    for (const auto* e : fig9) {
      const Chirotope chi = chirotope_from_vectors(normal_configuration(e->arrangement));
      for (int g = 0; g < chi.ground_size(); ++g) {
        if (canonicalize_chirotope(chi, g).key() == target) {
          matches.push_back(e->name);
          break;
        }
      }
    }
    std::string detail = "cone of fig4 marked at plane 5 matches " + std::to_string(matches.size()) + " fig9 class";
    if (!matches.empty()) detail += " (" + matches.front() + ")";
    v.add("fig4-in-fig9", matches.size() == 1, detail);
  }

  const auto fig10_right = entries_with_prefix("fig10-right");
  const auto rank3 = concat(concat(concat(fig9, entries_with_prefix("fig10-")), entries_with_prefix("fig11-")),
                            concat(concat(entries_with_prefix("fig12-"), entries_with_prefix("fig13-")),
                                   {find_entry("general-position-5")}));
  {
    int one_edge = 0;
    for (const auto* e : rank3) {
      const auto& fp = v.fp(e->name);
      if (fp.bounded_by_dimension[1] == 1 && fp.bounded_chambers() == 0) ++one_edge;
    }
    const bool left_ok = v.fp("fig10-left").bounded_by_dimension[1] == 1;
    const std::size_t classes = v.keys(fig10_right).size();
    bool none_central = std::none_of(fig10_right.begin(), fig10_right.end(),
                                     [](const CatalogEntry* e) { return e->arrangement.is_central(); });
    v.add("fig10", left_ok && one_edge == 1 && classes == 7 && none_central,
          "left is the only rank-3 class with one bounded edge (" + std::to_string(one_edge) + " found); right: " +
              std::to_string(classes) + " bisected products of non-central four-line arrangements");
  }

  for (const auto& [prefix, count, bounded] : std::vector<std::tuple<std::string, int, int>>{
           {"fig11-", 4, 1}, {"fig12-", 7, 2}, {"fig13-", 3, 3}}) {
    const auto group = entries_with_prefix(prefix);
    bool ok = static_cast<int>(group.size()) == count && static_cast<int>(v.keys(group).size()) == count;
    for (const auto* e : group) ok = ok && v.fp(e->name).bounded_chambers() == bounded;
    v.add(prefix.substr(0, prefix.size() - 1), ok,
          std::to_string(v.keys(group).size()) + " classes with " + counted(bounded, "bounded chamber"));
  }

  {
    const auto keys = v.keys(rank3);
    std::set<std::string> enumerated;
    for (const auto& c : enumerate_affine(5, 3)) enumerated.insert(c.key);
    v.add("rank3-five-planes", rank3.size() == 27 && keys.size() == 27 && keys == enumerated,
          std::to_string(keys.size()) + " pairwise inequivalent classes; " +
              (keys == enumerated ? "identical to" : "different from") + " the " + std::to_string(enumerated.size()) +
              " enumerated classes");
  }

  const auto products = entries_with_prefix("five-product");
  {
    const auto keys = v.keys(products);
    std::set<std::string> enumerated;
    for (const auto& c : enumerate_affine(5, 2)) enumerated.insert(c.key);
    v.add("products-five-planes", products.size() == 46 && keys.size() == 46 && keys == enumerated,
          std::to_string(keys.size()) + " pairwise inequivalent products; " +
              (keys == enumerated ? "identical to" : "different from") + " the " + std::to_string(enumerated.size()) +
              " enumerated rank-2 classes");
  }

  {
    const auto all = concat(concat(products, rank3), {find_entry("five-trivial")});
    const std::size_t classes = v.keys(all).size();
    const auto want = table1_count(5, 0);
    v.add("five-planes-total", want && classes == *want,
          "1 + " + std::to_string(v.keys(products).size()) + " + " + std::to_string(v.keys(rank3).size()) + " = " +
              std::to_string(classes) + " classes of five planes");
  }

  {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
      const auto fp = fingerprint(faces(trivial_arrangement(n, 3)), 3);
      ok = ok && fp.faces_by_dimension[3] == n + 1 && fp.points() == 0;
    }
    v.add("trivial", ok, "n parallel planes give n + 1 chambers and no points, n = 1..6");
  }

  {
    const auto p = pappus();
    v.add("pappus", p.collinearity_determinant == 0 && p.on_ninth_line,
          "collinearity determinant " + p.collinearity_determinant.get_str() +
              (p.on_ninth_line ? ", all three points on the ninth line" : ", not on the ninth line"));
  }
  {
    const auto g = goodman_pollack8();
    v.add("gp8", g.coplanarity_determinant == 0,
          "O, P, Q, R coplanarity determinant " + g.coplanarity_determinant.get_str());
  }
  return std::move(v.report);
}

}  // namespace omkit
