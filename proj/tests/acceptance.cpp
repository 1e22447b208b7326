// One line per acceptance criterion: "PASS|FAIL <n> <title> [tolerance]: detail".
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "omkit/arrangement.hpp"
#include "omkit/catalog.hpp"
#include "omkit/enumeration.hpp"
#include "omkit/isomorphism.hpp"
#include "omkit/oriented_matroid.hpp"
#include "omkit/parallel.hpp"
#include "support.hpp"

using namespace omkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

SignVector sv(const char* s) { return SignVector::parse(s); }

std::set<std::string> strings(const std::vector<SignVector>& vs) {
  std::set<std::string> out;
  for (const auto& v : vs) out.insert(v.str());
  return out;
}

std::set<std::string> strings(const std::vector<GeometricFace>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) out.insert(f.covector.str());
  return out;
}

const RationalArrangement& entry(const char* name) { return find_entry(name)->arrangement; }

CovectorSet face_set(const RationalArrangement& a) { return CovectorSet(a.size(), face_covectors(faces(a))); }

// 1 and 2: census against the table, within a time budget.
Outcome census_criterion(int n, double budget, std::vector<std::pair<int, int>> cells) {
  const auto t0 = Clock::now();
  const Census c = census_table(n);
  const double took = seconds_since(t0);
  bool ok = true;
  std::ostringstream out;
  for (auto [m, r] : cells) {
    const auto got = r == 0 ? c.total(m) : c.count(m, r);
    const auto want = table1_count(m, r);
    ok = ok && got && want && *got == *want;
  }
  if (n == 5) {
    out << "totals";
    for (int m = 1; m <= 5; ++m) out << ' ' << c.total(m).value_or(0);
  } else {
    out << "n=" << n << " r2 " << c.count(n, 2).value_or(0) << ", r3 " << c.count(n, 3).value_or(0) << ", total "
        << c.total(n).value_or(0);
  }
  out << "; " << c.mismatches().size() << " mismatched cells; " << fixed(took) << " (budget " << budget << "s)";
  return {ok && c.mismatches().empty() && took < budget, out.str()};
}

Outcome worked_examples() {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  // Abstract operations.
  expect(compose(sv("0-"), sv("-+")) == sv("--"), "R o X");
  expect(compose(sv("-+00+"), sv("---++")) == sv("-+-++"), "W o Y");
  expect(compose(sv("---++"), sv("-+00+")) == sv("---++"), "Y o W");
  expect(strings(restriction(sv("--"), sv("+-"))) == std::set<std::string>{"0-"}, "Z_Y");
  expect(strings(restriction(sv("+++++"), sv("-+00+"))) == std::set<std::string>{"0++++"}, "X_W");
  const auto xy = restriction(sv("+++++"), sv("---++"));
  expect(strings(xy) == std::set<std::string>{"0++++", "+0+++", "++0++", "00+++", "0+0++", "+00++", "000++"}, "X_Y");
  expect(strings(restriction(sv("+-"), sv("-+"))) == std::set<std::string>{"0-", "+0", "00"}, "Y_X");
  expect(strings(restriction(sv("+0"), sv("-0"))) == std::set<std::string>{"00"}, "P_S");

  // Geometric oracles on the catalog coordinates.
  const auto& two = entry("fig2");
  auto f2 = [&](const char* s) { return face_of(two, sv(s)); };
  expect(geometric_compose(two, f2("+0"), f2("0+")).covector == sv("++"), "geometric P o Q = W");
  expect(geometric_compose(two, f2("0-"), f2("-+")).covector == sv("--"), "geometric R o X");
  expect(strings(geometric_restrict(two, f2("+-"), f2("-+"))) == std::set<std::string>{"+0", "00", "0-"},
         "geometric Y_X");
  expect(strings(geometric_restrict(two, f2("+0"), f2("-0"))) == std::set<std::string>{"00"}, "geometric P_S");

  const auto five = cone(entry("fig4"));
  auto f5 = [&](const char* s) { return face_of(five, sv(s)); };
  expect(sign_feasible(five, sv("-+00+")), "W is a face");
  expect(geometric_compose(five, f5("-+00+"), f5("---++")).covector == sv("-+-++"), "geometric W o Y");
  expect(geometric_compose(five, f5("---++"), f5("-+00+")).covector == sv("---++"), "geometric Y o W");
  expect(geometric_compose(five, f5("-+00+"), f5("+++++")).covector == sv("-++++"), "geometric W o X");
  expect(strings(geometric_restrict(five, f5("+++++"), f5("-+00+"))) == std::set<std::string>{"0++++"},
         "geometric X_W");
  const auto seen = geometric_restrict(five, f5("+++++"), f5("---++"));
  expect(seen.size() == 3 && strings(seen) == std::set<std::string>{"0++++", "+0+++", "00+++"}, "seen part of X_Y");
  for (const auto& f : seen)
    expect(std::binary_search(xy.begin(), xy.end(), f.covector), "seen faces lie in X_Y");

  std::ostringstream out;
  out << "abstract X_Y has " << xy.size() << " members, " << seen.size() << " realized";
  for (const auto& f : failures) out << "; mismatch: " << f;
  return {failures.empty(), out.str()};
}

std::vector<SignVector> universe(int n) {
  std::vector<SignVector> out;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    SignVector x(n);
    for (int i = 0, c = code; i < n; ++i, c /= 3) x = x.with(i, c % 3 == 0 ? Sign::Zero : c % 3 == 1 ? Sign::Plus : Sign::Minus);
    out.push_back(x);
  }
  return out;
}

bool algebra_laws(int n) {
  const auto all = universe(n);
  const auto group = all_signed_permutations(n);
  for (const auto& x : all) {
    if (negate(negate(x)) != x || compose(x, x) != x) return false;
    for (const auto& y : all) {
      if (!leq(x, compose(x, y))) return false;
      if (leq(x, y) && leq(y, x) && x != y) return false;
      for (const auto& z : all) {
        if (compose(compose(x, y), z) != compose(x, compose(y, z))) return false;
        if (leq(x, y) && leq(y, z) && !leq(x, z)) return false;
      }
    }
  }
  for (const auto& g : group) {
    for (const auto& x : all) {
      if (g.apply(negate(x)) != negate(g.apply(x))) return false;
      for (const auto& h : group)
        if (compose(g, h).apply(x) != g.apply(h.apply(x))) return false;
      for (const auto& y : all) {
        if (g.apply(compose(x, y)) != compose(g.apply(x), g.apply(y))) return false;
        if (leq(x, y) != leq(g.apply(x), g.apply(y))) return false;
        auto moved = restriction(x, y);
        for (auto& z : moved) z = g.apply(z);
        std::sort(moved.begin(), moved.end());
        if (moved != restriction(g.apply(x), g.apply(y))) return false;
      }
    }
  }
  return true;
}

Outcome axiom_suite() {
  const auto t0 = Clock::now();
  int coned = 0, coned_ok = 0, raw = 0, raw_ok = 0;
  std::vector<std::string> failures;
  for (const auto& e : catalog()) {
    if (e.arrangement.dimension() < RationalArrangement::kMaxDimension) {
      ++coned;
      if (check_axioms(face_set(cone(e.arrangement))).ok())
        ++coned_ok;
      else
        failures.push_back("cone of " + e.name);
    }
    if (!e.arrangement.is_central()) {
      ++raw;
      const auto r = check_axioms(face_set(e.arrangement));
      if (!r.sv0.pass && !r.sv1.pass)
        ++raw_ok;
      else
        failures.push_back("raw faces of " + e.name);
    }
  }
  bool laws = true;
  for (int n = 1; n <= 3; ++n) laws = laws && algebra_laws(n);
  std::ostringstream out;
  out << coned_ok << "/" << coned << " cones pass SV0-SV3, " << raw_ok << "/" << raw
      << " non-central face sets fail SV0 and SV1, algebra laws n<=3 " << (laws ? "hold" : "FAIL") << "; "
      << fixed(seconds_since(t0));
  for (const auto& f : failures) out << "; " << f;
  return {failures.empty() && laws && coned > 0 && raw > 0, out.str()};
}

Outcome catalog_criterion() {
  const auto t0 = Clock::now();
  const auto report = catalog_verify();
  const double took = seconds_since(t0);
  int passed = 0;
  std::string first_failure;
  for (const auto& c : report.checks) {
    if (c.pass)
      ++passed;
    else if (first_failure.empty())
      first_failure = c.name + ": " + c.detail;
  }
  std::ostringstream out;
  out << passed << "/" << report.checks.size() << " checks; " << fixed(took) << " (budget 120s)";
  if (!first_failure.empty()) out << "; first failure " << first_failure;
  return {report.ok() && took < 120, out.str()};
}

Outcome formulas() {
  std::vector<std::string> failures;
  auto counts = [](const RationalArrangement& a) {
    int chambers = 0, points = 0;
    for (const auto& f : faces(a)) {
      if (f.dimension == a.dimension()) ++chambers;
      if (f.dimension == 0) ++points;
    }
    return std::pair{chambers, points};
  };
  if (max_chambers(5, 3) != 26) failures.push_back("maxChambers(5,3)");
  if (counts(general_position(5, 3)).first != 26) failures.push_back("generalPosition(5,3) chambers");
  for (auto [n, d] : {std::pair{4, 2}, {5, 3}, {6, 3}}) {
    const auto a = general_position(n, d);
    const auto [c, p] = counts(a);
    if (static_cast<std::uint64_t>(p) != max_vertices(n, d) || max_vertices(n, d) != binomial(n, d) ||
        static_cast<std::uint64_t>(c) != max_chambers(n, d) || !testing::in_general_position(a))
      failures.push_back("generalPosition(" + std::to_string(n) + "," + std::to_string(d) + ")");
  }
  int general = 0, below = 0;
  for (const auto& e : catalog()) {
    const auto& a = e.arrangement;
    const auto [c, p] = counts(a);
    const auto mc = max_chambers(a.size(), a.dimension());
    const auto mv = max_vertices(a.size(), a.dimension());
    if (testing::in_general_position(a)) {
      ++general;
      if (static_cast<std::uint64_t>(c) != mc || static_cast<std::uint64_t>(p) != mv)
        failures.push_back(e.name + " is in general position but misses the maximum");
    } else {
      ++below;
      if (static_cast<std::uint64_t>(c) >= mc || static_cast<std::uint64_t>(p) >= mv)
        failures.push_back(e.name + " reaches a maximum without general position");
    }
  }
  std::ostringstream out;
  out << "maxChambers(5,3)=" << max_chambers(5, 3) << "; vertices C(4,2)=" << max_vertices(4, 2)
      << ", C(5,3)=" << max_vertices(5, 3) << ", C(6,3)=" << max_vertices(6, 3) << " realized; " << general
      << " catalog entries in general position attain both maxima, " << below << " others fall strictly below";
  for (const auto& f : failures) out << "; " << f;
  return {failures.empty(), out.str()};
}

Outcome counterexamples() {
  const auto p = pappus();
  bool on_line = p.middle_points.size() == 3;
  for (const auto& m : p.middle_points) on_line = on_line && p.arrangement[8].side(m) == Sign::Zero;
  const auto g = goodman_pollack8();
  RationalMatrix m;
  for (int i = 1; i < 4; ++i) {
    RationalVector row;
    for (int j = 0; j < 3; ++j) row.push_back(g.points[static_cast<std::size_t>(i)][j] - g.points[0][j]);
    m.push_back(row);
  }
  const Rational recomputed = determinant(m);
  const bool axioms = check_axioms(face_set(cone(p.arrangement))).ok() && check_axioms(face_set(cone(g.arrangement))).ok();
  std::ostringstream out;
  out << "Pappus determinant " << p.collinearity_determinant.get_str() << ", middle points on line 9: "
      << (on_line && p.on_ninth_line ? "yes" : "no") << "; GP8 determinant " << g.coplanarity_determinant.get_str()
      << " (recomputed " << recomputed.get_str() << "); coned axioms " << (axioms ? "pass" : "fail");
  return {p.collinearity_determinant == 0 && on_line && p.on_ninth_line && g.coplanarity_determinant == 0 &&
              recomputed == 0 && axioms,
          out.str()};
}

Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  struct Item {
    const CatalogEntry* e;
    std::vector<SignVector> covectors;
  };
  std::vector<Item> items;
  for (const auto& e : catalog()) {
    const auto fs = faces(e.arrangement);
    if (fs.size() <= 200) items.push_back({&e, face_covectors(fs)});
  }
  int pairs = 0, agree = 0, equivalent_pairs = 0, copies = 0, copies_ok = 0;
  std::vector<std::string> failures;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      const auto& a = items[i];
      const auto& b = items[j];
      if (a.e->arrangement.dimension() != b.e->arrangement.dimension()) continue;
      ++pairs;
      const bool lib = are_equivalent(a.e->arrangement, b.e->arrangement).equivalent;
      const bool oracle = testing::posets_isomorphic(a.covectors, b.covectors);
      if (lib == oracle)
        ++agree;
      else
        failures.push_back(a.e->name + " vs " + b.e->name);
      if (lib) ++equivalent_pairs;
    }
  }
  std::mt19937 gen(20261019);
  for (const auto& it : items) {
    ++copies;
    const auto copy = testing::transformed_copy(it.e->arrangement, gen);
    const bool lib = are_equivalent(it.e->arrangement, copy).equivalent;
    const bool oracle = testing::posets_isomorphic(it.covectors, face_covectors(faces(copy)));
    if (lib && oracle)
      ++copies_ok;
    else
      failures.push_back(it.e->name + " vs transformed copy");
  }
  int central = 0, central_ok = 0;
  for (const auto& e : catalog()) {
    std::vector<RationalArrangement> cases;
    if (e.arrangement.is_central()) cases.push_back(e.arrangement);
    if (e.arrangement.dimension() < RationalArrangement::kMaxDimension && e.arrangement.size() < 9)
      cases.push_back(cone(e.arrangement));
    for (const auto& a : cases) {
      ++central;
      const auto geometric = face_covectors(faces(a));
      const auto combinatorial = covectors(chirotope_from_vectors(normal_configuration(a)));
      if (combinatorial.vectors() == geometric)
        ++central_ok;
      else
        failures.push_back("chirotope covectors of " + e.name);
    }
  }
  std::ostringstream out;
  out << agree << "/" << pairs << " same-dimension pairs agree (" << equivalent_pairs << " equivalent), " << copies_ok
      << "/" << copies << " transformed copies matched, " << central_ok << "/" << central
      << " central arrangements match their chirotope covectors; " << fixed(seconds_since(t0));
  for (std::size_t k = 0; k < failures.size() && k < 5; ++k) out << "; " << failures[k];
  return {failures.empty(), out.str()};
}

std::string canon_text() {
  std::ostringstream out;
  for (const auto& e : catalog()) {
    if (e.arrangement.dimension() >= RationalArrangement::kMaxDimension || e.arrangement.size() > 7) continue;
    const auto c = cone(e.arrangement);
    const auto form = canonicalize_affine(AffineOrientedMatroid(face_set(c), c.size() - 1));
    const auto chi = canonicalize_chirotope(cone_chirotope(e.arrangement), e.arrangement.size());
    out << e.name << ' ' << form.key() << ' ' << form.certificate.str() << ' ' << chi.key() << ' '
        << chi.certificate.str() << (chi.negated ? " negated" : "") << '\n';
  }
  return out.str();
}

Outcome determinism() {
  std::vector<std::string> census, canon;
  for (int w : {1, 4, 8}) {
    set_worker_count(w);
    census.push_back(census_table(5).str());
    canon.push_back(canon_text());
  }
  set_worker_count(0);
  const bool same_census = census[0] == census[1] && census[1] == census[2];
  const bool same_canon = canon[0] == canon[1] && canon[1] == canon[2];
  std::ostringstream out;
  out << "census " << (same_census ? "identical" : "DIFFERS") << " (" << census[0].size() << " bytes), canon "
      << (same_canon ? "identical" : "DIFFERS") << " (" << canon[0].size() << " bytes) across 1, 4, 8 workers";
  return {same_census && same_canon, out.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    const char* tolerance;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "census n=5 reproduces the table", "exact integers",
       [] {
         std::vector<std::pair<int, int>> cells;
         for (int n = 1; n <= 5; ++n)
           for (int r = 0; r <= 3; ++r) cells.push_back({n, r});
         return census_criterion(5, 300, cells);
       }},
      {2, "census n=6 totals 790 / 1063 / 1854", "exact integers",
       [] { return census_criterion(6, 3600, {{6, 2}, {6, 3}, {6, 0}}); }},
      {3, "worked examples, abstract and geometric", "exact", worked_examples},
      {4, "axiom property suite", "exact", axiom_suite},
      {5, "catalog verification", "exact counts", catalog_criterion},
      {6, "chamber and vertex formulas", "exact integers", formulas},
      {7, "Pappus and eight-plane determinants", "exactly zero", counterexamples},
      {8, "oracle equivalence", "exact agreement", oracle_equivalence},
      {9, "determinism across 1, 4, 8 workers", "byte-identical", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << c.id << ' ' << c.title << " [" << c.tolerance
              << "]: " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
