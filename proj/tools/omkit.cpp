// Command-line front end. Exit status: 0 success, 1 a failed check, a
// census mismatch or inequivalent inputs, 2 bad usage or unreadable input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "omkit/arrangement.hpp"
#include "omkit/catalog.hpp"
#include "omkit/chirotope.hpp"
#include "omkit/enumeration.hpp"
#include "omkit/errors.hpp"
#include "omkit/io.hpp"
#include "omkit/isomorphism.hpp"
#include "omkit/oriented_matroid.hpp"
#include "omkit/parallel.hpp"

namespace {

using namespace omkit;

using Input = std::variant<RationalArrangement, CovectorSet, Chirotope>;

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A path, or else the name of a catalog entry.
std::string load_text(const std::string& source) {
  if (std::filesystem::exists(source)) return read_file(source);
  if (const auto* entry = find_entry(source)) return format_arrangement(entry->arrangement);
  throw usage_error("no such file or catalog entry: " + source);
}

Input load(const std::string& source) {
  const std::string text = load_text(source);
  try {
    // The header decides the format.
    std::size_t pos = 0;
    while (pos < text.size()) {
      const auto end = std::min(text.find('\n', pos), text.size());
      const auto line = text.substr(pos, end - pos);
      const auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] != '#') {
        switch (line[first]) {
          case 'd':
            return parse_arrangement(text);
          case 'n':
            return parse_covectors(text);
          case 'm':
            return parse_chirotope(text);
          default:
            throw parse_error("unrecognized header '" + line.substr(first) + "'");
        }
      }
      pos = end + 1;
    }
    throw parse_error("empty input");
  } catch (const parse_error& e) {
    throw usage_error(source + ": " + e.what());
  }
}

RationalArrangement load_arrangement(const std::string& source) {
  auto input = load(source);
  if (auto* a = std::get_if<RationalArrangement>(&input)) return std::move(*a);
  throw usage_error(source + ": expected an arrangement file");
}

// Covector set of the input: the face set of an arrangement (its cone's with
// `coned`), the covectors of a chirotope, or the file itself.
CovectorSet covector_set(const Input& input, bool coned) {
  if (const auto* a = std::get_if<RationalArrangement>(&input)) {
    const RationalArrangement& arr = coned ? cone(*a) : *a;
    return CovectorSet(arr.size(), face_covectors(faces(arr)));
  }
  if (const auto* chi = std::get_if<Chirotope>(&input)) return covectors(*chi);
  return std::get<CovectorSet>(input);
}

void print_axiom(const char* name, const AxiomResult& r) {
  std::cout << name << (r.pass ? " pass" : " fail");
  if (!r.pass) {
    std::cout << " witness";
    for (const auto& x : r.witness) std::cout << ' ' << x.str();
  }
  std::cout << '\n';
}

int cmd_faces(const std::string& source) {
  const auto a = load_arrangement(source);
  for (const auto& f : faces(a)) {
    std::cout << f.covector.str() << ' ' << f.dimension << ' ' << (f.bounded ? "bounded" : "unbounded") << '\n';
  }
  return 0;
}

int cmd_check_om(const std::string& source, bool coned) {
  const CovectorSet v = covector_set(load(source), coned);
  const AxiomReport report = check_axioms(v);
  std::cout << v.size() << " vectors on " << v.ground_size() << " elements\n";
  print_axiom("SV0", report.sv0);
  print_axiom("SV1", report.sv1);
  print_axiom("SV2", report.sv2);
  print_axiom("SV3", report.sv3);
  if (report.ok()) {
    std::cout << "rank " << rank(v) << ", loops " << loops(v).size() << ", parallel pairs " << parallel_pairs(v).size()
              << '\n';
  }
  return report.ok() ? 0 : 1;
}

int cmd_canon(const std::string& source, std::optional<int> marked) {
  const Input input = load(source);
  if (marked && *marked < 1) throw usage_error("--affine takes a 1-based element index");
  if (const auto* chi = std::get_if<Chirotope>(&input)) {
    const auto form = canonicalize_chirotope(*chi, marked ? std::optional<int>(*marked - 1) : std::nullopt);
    std::cout << format_chirotope(form.chirotope());
    std::cout << "# certificate: " << form.certificate.str() << (form.negated ? " negated" : "") << '\n';
    return 0;
  }
  CanonicalForm form;
  if (const auto* a = std::get_if<RationalArrangement>(&input)) {
    if (marked) throw usage_error("--affine applies to covector and chirotope files");
    if (a->is_central()) {
      form = canonicalize(covector_set(input, false));
    } else {
      form = canonicalize_affine(AffineOrientedMatroid(covector_set(input, true), a->size()));
    }
  } else if (marked) {
    form = canonicalize_affine(AffineOrientedMatroid(std::get<CovectorSet>(input), *marked - 1));
  } else {
    form = canonicalize(std::get<CovectorSet>(input));
  }
  std::cout << "n=" << form.ground_size << '\n';
  if (form.marked >= 0) std::cout << "# marked element " << form.marked + 1 << '\n';
  for (const auto& x : form.vectors) std::cout << x.str() << '\n';
  std::cout << "# certificate: " << form.certificate.str() << '\n';
  return 0;
}

int cmd_iso(const std::string& first, const std::string& second, bool affine) {
  const Input a = load(first);
  const Input b = load(second);
  Equivalence eq;
  const auto* ra = std::get_if<RationalArrangement>(&a);
  const auto* rb = std::get_if<RationalArrangement>(&b);
  if (ra && rb) {
    eq = are_equivalent(*ra, *rb, affine || !ra->is_central() || !rb->is_central());
  } else {
    eq = are_equivalent(covector_set(a, false), covector_set(b, false));
  }
  std::cout << (eq.equivalent ? "equivalent" : "not equivalent") << ": " << eq.reason << '\n';
  return eq.equivalent ? 0 : 1;
}

int cmd_stats(const std::string& source) {
  const auto a = load_arrangement(source);
  const auto fs = faces(a);
  const auto fp = fingerprint(fs, a.dimension());
  auto list = [](const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
  };
  std::cout << "dimension: " << a.dimension() << '\n';
  std::cout << "hyperplanes: " << a.size() << '\n';
  std::cout << "rank: " << fp.rank << '\n';
  std::cout << "central: " << (a.is_central() ? "yes" : "no") << '\n';
  std::cout << "faces: " << fs.size() << '\n';
  std::cout << "faces by dimension: " << list(fp.faces_by_dimension) << '\n';
  std::cout << "bounded by dimension: " << list(fp.bounded_by_dimension) << '\n';
  std::cout << "points: " << fp.points() << '\n';
  std::cout << "rays: " << fp.rays() << '\n';
  std::cout << "chambers: " << fp.faces_by_dimension.back() << '\n';
  std::cout << "bounded chambers: " << fp.bounded_chambers() << '\n';
  for (const auto& c : fp.chambers) {
    if (c.bounded) std::cout << "bounded chamber: " << shape_name(c, a.dimension()) << '\n';
  }
  std::cout << "fingerprint: " << fp.str() << '\n';
  return 0;
}

int cmd_construct(const std::string& family, const std::vector<std::string>& args, int n, int d) {
  auto one_file = [&]() -> RationalArrangement {
    if (args.size() != 1) throw usage_error("construct " + family + " takes one arrangement");
    return load_arrangement(args.front());
  };
  std::optional<RationalArrangement> out;
  if (family == "trivial") {
    out = trivial_arrangement(n, d);
  } else if (family == "general-position") {
    out = general_position(n, d);
  } else if (family == "product") {
    out = product_with_axis(one_file());
  } else if (family == "cone") {
    out = cone(one_file());
  } else if (family == "bisect") {
    out = bisect(one_file());
  } else if (family == "pappus") {
    out = pappus().arrangement;
  } else if (family == "gp8") {
    out = goodman_pollack8().arrangement;
  } else {
    throw usage_error("unknown family '" + family + "'");
  }
  std::cout << format_arrangement(*out);
  return 0;
}

int cmd_enumerate(int n, int r, bool affine, const std::string& dir) {
  std::vector<std::pair<std::string, Chirotope>> classes;
  if (affine) {
    for (auto& c : enumerate_affine(n, r)) classes.emplace_back(c.key, c.chirotope);
  } else {
    for (auto& c : enumerate_oms(n, r)) classes.emplace_back(c.key, c.chirotope);
  }
  std::cout << classes.size() << " classes\n";
  for (const auto& [key, chi] : classes) std::cout << key << '\n';
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      std::string index = std::to_string(i + 1);
      index.insert(0, 5 - std::min<std::size_t>(5, index.size()), '0');
      std::ofstream file(std::filesystem::path(dir) / ("class" + index + ".chi"));
      file << "# " << classes[i].first << '\n' << format_chirotope(classes[i].second);
      if (!file) throw std::runtime_error("cannot write to " + dir);
    }
  }
  return 0;
}

int cmd_census(int n) {
  const Census census = census_table(n);
  std::cout << census.str();
  return census.mismatches().empty() ? 0 : 1;
}

int cmd_catalog(const std::string& action, const std::string& name) {
  if (action == "verify") {
    const auto report = catalog_verify();
    std::cout << report.str() << (report.ok() ? "catalog verified\n" : "catalog verification failed\n");
    return report.ok() ? 0 : 1;
  }
  if (action == "list") {
    for (const auto& e : catalog()) {
      std::cout << e.name << '\t' << (e.figure.empty() ? "-" : e.figure) << '\t' << e.description << '\n';
    }
    return 0;
  }
  if (action == "show") {
    const auto* e = find_entry(name);
    if (e == nullptr) throw usage_error("no catalog entry named '" + name + "'");
    std::cout << "# " << e->name << ": " << e->description << '\n' << format_arrangement(e->arrangement);
    return 0;
  }
  throw usage_error("catalog action must be verify, list or show");
}

int cmd_export(const std::string& source, bool svg, const std::string& out) {
  const auto a = load_arrangement(source);
  const std::string text = svg ? export_svg(a) : export_scene(a);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out);
    file << text;
    if (!file) throw std::runtime_error("cannot write " + out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oriented matroids and hyperplane arrangements"};
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers, "worker threads (default: OMKIT_WORKERS or all cores)")
      ->check(CLI::NonNegativeNumber);

  std::string file;
  std::string file2;
  std::optional<int> marked;
  bool affine = false;
  bool coned = false;
  std::string family;
  std::vector<std::string> family_args;
  int n = 3;
  int d = 2;
  int r = 2;
  std::string dir;
  std::string action;
  std::string name;
  std::string out;

  auto* faces_cmd = app.add_subcommand("faces", "list faces: covector, dimension, boundedness");
  faces_cmd->add_option("file", file, "arrangement file or catalog name")->required();

  auto* check_cmd = app.add_subcommand("check-om", "check the covector axioms");
  check_cmd->add_option("file", file, "covector, chirotope or arrangement file")->required();
  check_cmd->add_flag("--cone", coned, "check the cone of an arrangement instead of its faces");

  auto* canon_cmd = app.add_subcommand("canon", "canonical form and certifying signed permutation");
  canon_cmd->add_option("file", file, "covector, chirotope or arrangement file")->required();
  canon_cmd->add_option("--affine", marked, "marked element (1-based)");

  auto* iso_cmd = app.add_subcommand("iso", "decide face-combinatorial equivalence");
  iso_cmd->add_option("first", file, "first input")->required();
  iso_cmd->add_option("second", file2, "second input")->required();
  iso_cmd->add_flag("--affine", affine, "compare central arrangements as affine ones too");

  auto* construct_cmd = app.add_subcommand("construct", "emit an arrangement of a construction family");
  construct_cmd->add_option("family", family, "trivial | product | cone | bisect | general-position | pappus | gp8")
      ->required();
  construct_cmd->add_option("input", family_args, "arrangement for product, cone and bisect");
  construct_cmd->add_option("-n", n, "number of hyperplanes (trivial, general-position)");
  construct_cmd->add_option("-d", d, "dimension (trivial, general-position)");

  auto* stats_cmd = app.add_subcommand("stats", "fingerprint and counts");
  stats_cmd->add_option("file", file, "arrangement file or catalog name")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "classes of simple oriented matroids");
  enumerate_cmd->add_option("-n", n, "elements (affine: hyperplanes)")->required();
  enumerate_cmd->add_option("-r", r, "rank (affine: affine rank)")->required();
  enumerate_cmd->add_flag("--affine", affine, "affine classes by marking");
  enumerate_cmd->add_option("--out", dir, "directory for one chirotope file per class");

  auto* census_cmd = app.add_subcommand("census", "class counts by rank, compared with the reference counts");
  census_cmd->add_option("--n", n, "largest n (at most 7)")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "figure catalog");
  catalog_cmd->add_option("action", action, "verify | list | show")->required();
  catalog_cmd->add_option("name", name, "entry for show");

  auto* svg_cmd = app.add_subcommand("export-svg", "draw a line arrangement as SVG");
  svg_cmd->add_option("file", file, "arrangement file or catalog name")->required();
  svg_cmd->add_option("-o", out, "output path (default stdout)");

  auto* scene_cmd = app.add_subcommand("export-scene", "plane arrangement as a Wavefront OBJ scene");
  scene_cmd->add_option("file", file, "arrangement file or catalog name")->required();
  scene_cmd->add_option("-o", out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (workers > 0) set_worker_count(workers);

  try {
    if (*faces_cmd) return cmd_faces(file);
    if (*check_cmd) return cmd_check_om(file, coned);
    if (*canon_cmd) return cmd_canon(file, marked);
    if (*iso_cmd) return cmd_iso(file, file2, affine);
    if (*construct_cmd) return cmd_construct(family, family_args, n, d);
    if (*stats_cmd) return cmd_stats(file);
    if (*enumerate_cmd) return cmd_enumerate(n, r, affine, dir);
    if (*census_cmd) return cmd_census(n);
    if (*catalog_cmd) return cmd_catalog(action, name);
    if (*svg_cmd) return cmd_export(file, true, out);
    if (*scene_cmd) return cmd_export(file, false, out);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
