#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "omkit/arrangement.hpp"
#include "omkit/catalog.hpp"
#include "omkit/errors.hpp"
#include "omkit/isomorphism.hpp"
#include "support.hpp"

using namespace omkit;

namespace {

const RationalArrangement& entry(const std::string& name) { return find_entry(name)->arrangement; }

CovectorSet face_set(const RationalArrangement& a) { return CovectorSet(a.size(), face_covectors(faces(a))); }

CovectorSet moved(const CovectorSet& v, const SignedPermutation& g) {
  std::vector<SignVector> out;
  for (const auto& x : v.vectors()) out.push_back(g.apply(x));
  return CovectorSet(v.ground_size(), std::move(out));
}

SignedPermutation random_element(int n, std::mt19937& gen) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
  std::shuffle(image.begin(), image.end(), gen);
  return SignedPermutation(image, static_cast<std::uint32_t>(gen()) & ((1U << n) - 1U));
}

}  // namespace

TEST_SUITE("isomorphism") {
  TEST_CASE("canonical forms are constant on orbits") {
    std::mt19937 gen(7);
    for (const char* name : {"fig3-class1", "fig3-class6", "fig6-tetrahedron", "fig9-rays16", "fig10-left"}) {
      CAPTURE(name);
      const auto v = face_set(cone(entry(name)));
      const auto c = canonicalize(v);
      for (int t = 0; t < 4; ++t) {
        const auto g = random_element(v.ground_size(), gen);
        CHECK(canonicalize(moved(v, g)) == c);
      }
      // The certificate maps the input onto the canonical list.
      CHECK(moved(v, c.certificate).vectors() == c.vectors);
    }
  }

  TEST_CASE("full cube is fixed by every element") {
    std::vector<SignVector> all;
    for (int code = 0; code < 9; ++code)
      all.push_back(SignVector(2).with(0, code % 3 == 0 ? Sign::Zero : code % 3 == 1 ? Sign::Plus : Sign::Minus)
                        .with(1, code / 3 == 0 ? Sign::Zero : code / 3 == 1 ? Sign::Plus : Sign::Minus));
    const CovectorSet cube(2, all);
    for (const auto& g : all_signed_permutations(2)) CHECK(moved(cube, g) == cube);
    CHECK(canonicalize(cube).vectors == cube.vectors());
    CHECK(canonicalize_affine(AffineOrientedMatroid(cube, 0)) == canonicalize_affine(AffineOrientedMatroid(cube, 1)));
  }

  TEST_CASE("mirror images of five lines through the origin") {
    std::vector<Hyperplane> hs, mirror;
    for (auto [a, b] : {std::pair{1, 0}, {0, 1}, {1, 1}, {1, -2}, {3, 1}}) {
      hs.push_back(Hyperplane{{Rational(a), Rational(b)}, Rational(0)});
      mirror.push_back(Hyperplane{{Rational(-a), Rational(b)}, Rational(0)});
    }
    const auto v = face_set(RationalArrangement(2, hs));
    const auto w = face_set(RationalArrangement(2, mirror));
    CHECK(canonicalize(v) == canonicalize(w));
    CHECK(are_equivalent(v, w).equivalent);
  }

  TEST_CASE("affine markings") {
    // Marking the added plane of fig9-rays16 against marking another plane.
    const auto v = face_set(cone(entry("fig3-class1")));
    std::set<std::string> keys;
    for (int g = 0; g < v.ground_size(); ++g) keys.insert(canonicalize_affine(AffineOrientedMatroid(v, g)).key());
    CHECK(keys.size() > 1);

    // The cone of the Fig. 4 lines, marked at its last plane, matches
    // exactly one marking class among the four central five-plane classes.
    const auto target = canonicalize_affine(AffineOrientedMatroid(face_set(cone(entry("fig4"))), 4));
    std::set<std::string> hits;
    for (const auto* e : entries_with_prefix("fig9-")) {
      const auto w = face_set(e->arrangement);
      for (int g = 0; g < w.ground_size(); ++g)
        if (canonicalize_affine(AffineOrientedMatroid(w, g)) == target) hits.insert(e->name);
    }
    CHECK(hits == std::set<std::string>{"fig9-rays20"});
  }

  TEST_CASE("chirotope forms agree with covector forms") {
    std::vector<std::string> names;
    for (const auto& e : catalog())
      if (e.arrangement.dimension() <= 3 && e.arrangement.size() <= 5 && e.name.rfind("five-", 0) != 0)
        names.push_back(e.name);
    std::map<std::string, std::string> by_cov, by_chi;
    std::set<std::pair<std::string, std::string>> pairs_cov, pairs_chi;
    for (const auto& n : names) {
      const auto c = cone(entry(n));
      by_cov[n] = canonicalize_affine(AffineOrientedMatroid(face_set(c), c.size() - 1)).key();
      by_chi[n] = affine_class_key(entry(n));
    }
    for (const auto& a : names)
      for (const auto& b : names) CHECK((by_cov[a] == by_cov[b]) == (by_chi[a] == by_chi[b]));
  }

  TEST_CASE("fingerprint examples") {
    std::vector<int> rays;
    for (const char* n : {"fig9-rays16", "fig9-rays20", "fig9-rays12", "fig9-rays10"})
      rays.push_back(fingerprint(faces(entry(n)), 3).rays());
    CHECK(rays == std::vector<int>{16, 20, 12, 10});
    CHECK(fingerprint(faces(entry("fig11-tetrahedron-rays18")), 3).rays() == 18);
    CHECK(fingerprint(faces(entry("fig11-tetrahedron-rays16")), 3).rays() == 16);
    std::vector<int> points;
    for (const char* n : {"fig12-two-tetrahedra-points6", "fig12-two-tetrahedra-points7", "fig12-two-tetrahedra-points5"})
      points.push_back(fingerprint(faces(entry(n)), 3).points());
    CHECK(points == std::vector<int>{6, 7, 5});

    const auto shapes = chamber_shapes(faces(entry("fig3-class2")), 2);
    int quads = 0;
    for (const auto& s : shapes)
      if (s.bounded && shape_name(s, 2) == "quadrilateral") ++quads;
    CHECK(quads == 1);
  }

  TEST_CASE("equivalence examples") {
    const auto r = are_equivalent(entry("fig3-class1"), entry("fig3-class2"));
    CHECK_FALSE(r.equivalent);
    CHECK(r.reason == "bounded quadrilateral count differs");

    std::set<std::string> keys;
    for (int k = 1; k <= 8; ++k) {
      keys.insert(affine_class_key(entry("fig3-class" + std::to_string(k))));
      for (int j = k + 1; j <= 8; ++j)
        CHECK_FALSE(are_equivalent(entry("fig3-class" + std::to_string(k)), entry("fig3-class" + std::to_string(j))).equivalent);
    }
    CHECK(keys.size() == 8);

    CHECK_FALSE(are_equivalent(entry("fig2"), entry("fig1-general")).equivalent);
  }

  TEST_CASE("transformed copies are equivalent and share fingerprints") {
    std::mt19937 gen(11);
    for (const char* name : {"fig3-class3", "fig3-class8", "fig6-bisected2", "fig10-right3", "fig12-two-prisms",
                             "fig13-two-tetrahedra-prism"}) {
      CAPTURE(name);
      const auto& a = entry(name);
      const auto b = testing::transformed_copy(a, gen);
      CHECK(are_equivalent(a, b).equivalent);
      CHECK(fingerprint(faces(a), a.dimension()) == fingerprint(faces(b), b.dimension()));
      CHECK(testing::posets_isomorphic(face_covectors(faces(a)), face_covectors(faces(b))));
    }
  }

  TEST_CASE("the poset oracle separates what it should") {
    CHECK_FALSE(testing::posets_isomorphic(face_covectors(faces(entry("fig3-class1"))),
                                           face_covectors(faces(entry("fig3-class2")))));
    CHECK(testing::posets_isomorphic(face_covectors(faces(entry("fig3-class1"))),
                                     face_covectors(faces(entry("fig3-class1")))));
  }

  TEST_CASE("size bound") {
    CHECK_THROWS_AS(canonicalize(face_set(trivial_arrangement(9, 1))), resource_error);
  }
}
