#include <doctest.h>

#include <algorithm>

#include "omkit/arrangement.hpp"
#include "omkit/catalog.hpp"
#include "omkit/chirotope.hpp"
#include "omkit/errors.hpp"

using namespace omkit;

namespace {

RationalVector vec(std::initializer_list<int> xs) {
  RationalVector v;
  for (int x : xs) v.push_back(x);
  return v;
}

Chirotope from(int r, std::initializer_list<RationalVector> vs) {
  return chirotope_from_vectors(VectorConfiguration{r, std::vector<RationalVector>(vs)});
}

}  // namespace

TEST_SUITE("chirotope") {
  TEST_CASE("from vectors") {
    const auto basis = from(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
    CHECK(basis.str() == "+");

    // det(e1,e2,e3)=+, det(e1,e2,s)=+, det(e1,e3,s)=-, det(e2,e3,s)=+ for s = e1+e2+e3.
    const auto four = from(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({1, 1, 1})});
    CHECK(four.str() == "++-+");
    const std::vector<int> t{1, 0, 2};
    CHECK(four(t) == Sign::Minus);
    CHECK(four(std::vector<int>{0, 0, 1}) == Sign::Zero);
    CHECK(check_chirotope(four).ok);

    CHECK_THROWS_AS(from(2, {vec({1, 1}), vec({2, 2})}), rank_deficient_error);
    CHECK_THROWS_AS(from(2, {vec({1, 1}), vec({0, 0})}), std::invalid_argument);
  }

  TEST_CASE("axioms") {
    const auto line = from(2, {vec({1, 1}), vec({1, 2}), vec({1, 3}), vec({1, 4})});
    CHECK(line.str() == "++++++");
    CHECK(check_chirotope(line).ok);
    auto signs = line.signs();
    // Tuple 13: the three-term relation on 1234 then has all products positive.
    signs[1] = Sign::Minus;
    const auto broken = check_chirotope(Chirotope(4, 2, signs));
    CHECK_FALSE(broken.ok);
    CHECK(broken.x.size() == 2);
    CHECK(broken.y.size() == 2);

    const std::vector<Sign> ones(3, Sign::Plus);
    CHECK(check_chirotope(Chirotope(3, 1, ones)).ok);
    const std::vector<Sign> zeros(3, Sign::Zero);
    CHECK_FALSE(check_chirotope(Chirotope(3, 2, zeros)).ok);
  }

  TEST_CASE("cocircuits") {
    const auto three = from(2, {vec({1, 0}), vec({1, 1}), vec({0, 1})});
    const auto cs = cocircuits(three);
    CHECK(cs.size() == 6);
    for (const auto& c : cs) CHECK(c.zero_count() == 1);

    const std::vector<Sign> plus{Sign::Plus};
    const auto one = cocircuits(Chirotope(1, 1, plus));
    CHECK(one == std::vector<SignVector>{SignVector::parse("+"), SignVector::parse("-")});

    // Rays of the cone of two crossing lines.
    const auto a = cone(find_entry("fig2")->arrangement);
    std::vector<SignVector> rays;
    for (const auto& f : faces(a))
      if (f.dimension == 1) rays.push_back(f.covector);
    std::sort(rays.begin(), rays.end());
    CHECK(cocircuits(chirotope_from_vectors(normal_configuration(a))) == rays);
  }

  TEST_CASE("covectors") {
    const auto two = covectors(from(2, {vec({1, 0}), vec({0, 1})}));
    CHECK(two.size() == 9);
    const auto three = covectors(from(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}));
    CHECK(three.size() == 27);
  }

  TEST_CASE("catalog: realizable chirotopes pass, covectors pass, geometry agrees") {
    for (const auto& e : catalog()) {
      if (e.arrangement.dimension() >= RationalArrangement::kMaxDimension) continue;
      const auto c = cone(e.arrangement);
      if (c.size() > 8) continue;
      CAPTURE(e.name);
      const Chirotope chi = chirotope_from_vectors(normal_configuration(c));
      CHECK(check_chirotope(chi).ok);
      const auto v = covectors(chi);
      CHECK(check_axioms(v).ok());
      CHECK(v.vectors() == face_covectors(faces(c)));
      CHECK(covectors(chi.negated()) == v);
    }
  }

  TEST_CASE("equivariance") {
    const auto a = cone(find_entry("fig3-class1")->arrangement);
    const auto config = normal_configuration(a);
    const Chirotope chi = chirotope_from_vectors(config);
    const auto v = covectors(chi);
    for (const auto& g : {SignedPermutation({2, 0, 4, 1, 3}, 0b00101), SignedPermutation({4, 3, 2, 1, 0}, 0b10000),
                          SignedPermutation({0, 1, 2, 3, 4}, 0b11111)}) {
      CAPTURE(g.str());
      // Move and reorient the vectors themselves.
      VectorConfiguration moved{config.rank, std::vector<RationalVector>(config.vectors.size())};
      for (int i = 0; i < g.size(); ++i) {
        auto x = config.vectors[static_cast<std::size_t>(i)];
        if (g.reorients(i))
          for (auto& q : x) q = -q;
        moved.vectors[static_cast<std::size_t>(g.image(i))] = x;
      }
      const Chirotope expected = chirotope_from_vectors(moved);
      const Chirotope got = chi.transformed(g);
      CHECK(got == expected);
      std::vector<SignVector> image;
      for (const auto& x : v.vectors()) image.push_back(g.apply(x));
      std::sort(image.begin(), image.end());
      CHECK(covectors(got).vectors() == image);
    }
  }
}
