// Samples small-integer arrangements and prints one representative per
// affine class, preferring small coefficients. Used to produce the frozen
// coordinates in src/catalog_data.cpp.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "omkit/arrangement.hpp"
#include "omkit/isomorphism.hpp"

namespace {

struct Found {
  int weight = 0;
  std::string text;
  omkit::RationalArrangement arrangement;
};

std::string compact(const omkit::RationalArrangement& a) {
  std::string out;
  for (int i = 0; i < a.size(); ++i) {
    if (i) out += "; ";
    for (const auto& q : a[i].normal) out += q.get_str() + " ";
    out += "| " + a[i].offset.get_str();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"search small-integer arrangements for affine class representatives"};
  int d = 2;
  int n = 4;
  int coef = 2;
  int offset = 2;
  long tries = 200000;
  unsigned seed = 1;
  int rank = 0;
  app.add_option("--dim", d, "ambient dimension (2 or 3)");
  app.add_option("-n", n, "number of hyperplanes");
  app.add_option("--coef", coef, "normal coefficients range over [-coef, coef]");
  app.add_option("--offset", offset, "offsets range over [-offset, offset]");
  app.add_option("--tries", tries, "number of samples");
  app.add_option("--seed", seed, "generator seed");
  app.add_option("--rank", rank, "keep only this rank (0 keeps all)");
  CLI11_PARSE(app, argc, argv);

  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> c(-coef, coef);
  std::uniform_int_distribution<int> b(-offset, offset);
  std::map<std::string, Found> classes;
  for (long t = 0; t < tries; ++t) {
    std::vector<omkit::Hyperplane> hs;
    int weight = 0;
    while (static_cast<int>(hs.size()) < n) {
      std::vector<int> v(static_cast<std::size_t>(d));
      for (auto& x : v) x = c(gen);
      const int o = b(gen);
      // Primitive integer data with a positive leading coefficient.
      int g = std::abs(o);
      for (int x : v) g = std::gcd(g, std::abs(x));
      const auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
      if (g != 1 || lead == v.end() || *lead < 0) continue;
      omkit::Hyperplane h;
      for (int x : v) {
        h.normal.push_back(x);
        weight += std::abs(x);
      }
      h.offset = o;
      weight += std::abs(o);
      hs.push_back(std::move(h));
    }
    try {
      omkit::RationalArrangement a(d, std::move(hs));
      if (rank != 0 && a.rank() != rank) continue;
      const auto key = omkit::canonicalize_chirotope(omkit::cone_chirotope(a), a.size()).key();
      const std::string text = compact(a);
      auto it = classes.find(key);
      if (it == classes.end()) {
        classes.emplace(key, Found{weight, text, a});
      } else if (weight < it->second.weight || (weight == it->second.weight && text < it->second.text)) {
        it->second = Found{weight, text, a};
      }
    } catch (const std::invalid_argument&) {
      // zero normal or repeated hyperplane
    }
  }

  std::multimap<std::string, const Found*> ordered;
  for (const auto& [key, found] : classes) {
    const auto fp = omkit::fingerprint(omkit::faces(found.arrangement), d);
    ordered.emplace(std::to_string(found.arrangement.rank()) + " " + fp.str(), &found);
  }
  std::cout << "# " << classes.size() << " classes\n";
  for (const auto& [label, found] : ordered) {
    std::cout << "# " << label << "\n" << found->text << "\n";
  }
}
