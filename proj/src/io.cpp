#include "omkit/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "omkit/errors.hpp"

namespace omkit {

namespace {

struct Line {
  int number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    raw = raw.substr(0, raw.find('#'));
    std::string line = trim(raw);
    if (!line.empty()) out.push_back({number, std::move(line)});
    pos = end + 1;
  }
  return out;
}

int header_int(const std::string& token, const std::string& name, int line) {
  const std::string prefix = name + "=";
  if (token.rfind(prefix, 0) != 0) throw parse_error("expected '" + prefix + "<int>'", line);
  const std::string digits = token.substr(prefix.size());
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw parse_error("malformed integer in '" + token + "'", line);
  }
  return std::stoi(digits);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

const Line& header(const std::vector<Line>& lines, const char* what) {
  if (lines.empty()) throw parse_error(std::string("empty ") + what + " file", 1);
  return lines.front();
}

// ---- display helpers (doubles) -------------------------------------------

using Point = std::vector<double>;

struct Box {
  Point lo;
  Point hi;
};

std::vector<double> to_doubles(const RationalVector& v) {
  std::vector<double> out;
  for (const auto& q : v) out.push_back(q.get_d());
  return out;
}

Point foot(const Hyperplane& h) {
  double nn = 0;
  for (const auto& q : h.normal) nn += q.get_d() * q.get_d();
  Point p;
  for (const auto& q : h.normal) p.push_back(q.get_d() * h.offset.get_d() / nn);
  return p;
}

// Points where d hyperplanes meet in a single point, plus the foot of each
// hyperplane, frame the drawing.
Box frame(const RationalArrangement& a) {
  const int d = a.dimension();
  std::vector<Point> pts;
  for (const auto& h : a.hyperplanes()) pts.push_back(foot(h));
  const int n = a.size();
  auto solve = [&](const std::vector<int>& idx) {
    RationalMatrix rows;
    RationalVector rhs;
    for (int i : idx) {
      rows.push_back(a[i].normal);
      rhs.push_back(a[i].offset);
    }
    const Rational det = determinant(rows);
    if (det == 0) return;
    Point p;
    for (int j = 0; j < d; ++j) {
      RationalMatrix m = rows;
      for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rhs[static_cast<std::size_t>(i)];
      p.push_back(Rational(determinant(m) / det).get_d());
    }
    pts.push_back(std::move(p));
  };
  if (d == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) solve({i, j});
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) solve({i, j, k});
  }
  Box box{Point(static_cast<std::size_t>(d), 0.0), Point(static_cast<std::size_t>(d), 0.0)};
  for (const auto& p : pts) {
    for (int j = 0; j < d; ++j) {
      box.lo[static_cast<std::size_t>(j)] = std::min(box.lo[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(j)]);
      box.hi[static_cast<std::size_t>(j)] = std::max(box.hi[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(j)]);
    }
  }
  double extent = 0;
  for (int j = 0; j < d; ++j) extent = std::max(extent, box.hi[static_cast<std::size_t>(j)] - box.lo[static_cast<std::size_t>(j)]);
  const double pad = std::max(1.0, 0.25 * extent);
  for (int j = 0; j < d; ++j) {
    box.lo[static_cast<std::size_t>(j)] -= pad;
    box.hi[static_cast<std::size_t>(j)] += pad;
  }
  return box;
}

std::string num(double x) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << (std::abs(x) < 5e-5 ? 0.0 : x);
  return out.str();
}

}  // namespace

RationalArrangement parse_arrangement(std::string_view text) {
  const auto lines = content_lines(text);
  const Line& head = header(lines, "arrangement");
  const int d = header_int(head.text, "d", head.number);
  if (d < 1 || d > RationalArrangement::kMaxDimension) {
    throw parse_error("dimension must be in [1, 4], got " + std::to_string(d), head.number);
  }
  std::vector<Hyperplane> planes;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const auto bar = line.text.find('|');
    if (bar == std::string::npos) throw parse_error("expected '<a1> ... <ad> | <b>'", line.number);
    const auto lhs = tokens(line.text.substr(0, bar));
    const auto rhs = tokens(line.text.substr(bar + 1));
    if (static_cast<int>(lhs.size()) != d) {
      throw parse_error("expected " + std::to_string(d) + " coefficients, got " + std::to_string(lhs.size()),
                        line.number);
    }
    if (rhs.size() != 1) throw parse_error("expected one offset after '|'", line.number);
    Hyperplane h;
    try {
      for (const auto& t : lhs) h.normal.push_back(parse_rational(t));
      h.offset = parse_rational(rhs.front());
    } catch (const parse_error& e) {
      throw parse_error(e.what(), line.number);
    }
    planes.push_back(std::move(h));
    try {
      RationalArrangement check(d, planes);
    } catch (const std::exception& e) {
      throw parse_error(e.what(), line.number);
    }
  }
  if (planes.empty()) throw parse_error("arrangement has no hyperplanes", head.number);
  return RationalArrangement(d, std::move(planes));
}

std::string format_arrangement(const RationalArrangement& a) {
  std::string out = "d=" + std::to_string(a.dimension()) + "\n";
  for (const auto& h : a.hyperplanes()) {
    for (const auto& q : h.normal) out += format_rational(q) + " ";
    out += "| " + format_rational(h.offset) + "\n";
  }
  return out;
}

CovectorSet parse_covectors(std::string_view text) {
  const auto lines = content_lines(text);
  const Line& head = header(lines, "covector");
  const int n = header_int(head.text, "n", head.number);
  if (n < 1 || n > SignVector::kMaxSize) throw parse_error("n must be in [1, 32]", head.number);
  std::vector<SignVector> vectors;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (static_cast<int>(line.text.size()) != n) {
      throw parse_error("sign vector '" + line.text + "' does not have length " + std::to_string(n), line.number);
    }
    try {
      vectors.push_back(SignVector::parse(line.text));
    } catch (const parse_error& e) {
      throw parse_error(e.what(), line.number);
    }
  }
  return CovectorSet(n, std::move(vectors));
}

std::string format_covectors(const CovectorSet& v) {
  std::string out = "n=" + std::to_string(v.ground_size()) + "\n";
  for (const auto& x : v.vectors()) out += x.str() + "\n";
  return out;
}

Chirotope parse_chirotope(std::string_view text) {
  const auto lines = content_lines(text);
  const Line& head = header(lines, "chirotope");
  const auto fields = tokens(head.text);
  if (fields.size() != 2) throw parse_error("expected 'm=<int> r=<int>'", head.number);
  const int m = header_int(fields[0], "m", head.number);
  const int r = header_int(fields[1], "r", head.number);
  if (m < 1 || m > Chirotope::kMaxGround || r < 1 || r > m) {
    throw parse_error("need 1 <= r <= m <= " + std::to_string(Chirotope::kMaxGround), head.number);
  }
  if (lines.size() != 2) {
    throw parse_error("expected exactly one line of signs", lines.size() < 2 ? head.number : lines[2].number);
  }
  const Line& body = lines[1];
  const std::size_t expected = binomial(m, r);
  if (body.text.size() != expected) {
    throw parse_error("expected " + std::to_string(expected) + " signs, got " + std::to_string(body.text.size()),
                      body.number);
  }
  try {
    std::vector<Sign> signs;
    for (char c : body.text) signs.push_back(sign_from_char(c));
    return Chirotope(m, r, signs);
  } catch (const std::exception& e) {
    throw parse_error(e.what(), body.number);
  }
}

std::string format_chirotope(const Chirotope& chi) {
  return "m=" + std::to_string(chi.ground_size()) + " r=" + std::to_string(chi.rank()) + "\n" + chi.str() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string export_svg(const RationalArrangement& a) {
  if (a.dimension() != 2) throw dimension_error("SVG export needs a line arrangement");
  const Box box = frame(a);
  const double scale = 400.0 / std::max(box.hi[0] - box.lo[0], box.hi[1] - box.lo[1]);
  const double w = (box.hi[0] - box.lo[0]) * scale;
  const double h = (box.hi[1] - box.lo[1]) * scale;
  auto sx = [&](double x) { return (x - box.lo[0]) * scale; };
  auto sy = [&](double y) { return (box.hi[1] - y) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int i = 0; i < a.size(); ++i) {
    const Point p = foot(a[i]);
    const Point dir{-a[i].normal[1].get_d(), a[i].normal[0].get_d()};
    // Clip p + t dir to the box.
    double t0 = -1e300;
    double t1 = 1e300;
    for (int j = 0; j < 2; ++j) {
      const auto J = static_cast<std::size_t>(j);
      if (dir[J] == 0) continue;
      double u = (box.lo[J] - p[J]) / dir[J];
      double v = (box.hi[J] - p[J]) / dir[J];
      if (u > v) std::swap(u, v);
      t0 = std::max(t0, u);
      t1 = std::min(t1, v);
    }
    if (t0 > t1) continue;
    out << "<line x1=\"" << num(sx(p[0] + t0 * dir[0])) << "\" y1=\"" << num(sy(p[1] + t0 * dir[1])) << "\" x2=\""
        << num(sx(p[0] + t1 * dir[0])) << "\" y2=\"" << num(sy(p[1] + t1 * dir[1]))
        << "\" stroke=\"black\" stroke-width=\"2\"><title>" << i + 1 << "</title></line>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string export_scene(const RationalArrangement& a) {
  if (a.dimension() != 3) throw dimension_error("scene export needs a plane arrangement");
  const Box box = frame(a);
  std::ostringstream out;
  out << "# " << a.size() << " planes\n";
  int base = 1;
  for (int i = 0; i < a.size(); ++i) {
    const Point nrm = to_doubles(a[i].normal);
    const double b = a[i].offset.get_d();
    auto value = [&](const Point& p) { return nrm[0] * p[0] + nrm[1] * p[1] + nrm[2] * p[2] - b; };
    std::vector<Point> poly;
    // Crossings of the plane with the twelve box edges.
    for (int axis = 0; axis < 3; ++axis) {
      for (int corner = 0; corner < 4; ++corner) {
        Point p(3);
        Point q(3);
        int bit = 0;
        for (int j = 0; j < 3; ++j) {
          const auto J = static_cast<std::size_t>(j);
          if (j == axis) {
            p[J] = box.lo[J];
            q[J] = box.hi[J];
          } else {
            p[J] = q[J] = ((corner >> bit++) & 1) ? box.hi[J] : box.lo[J];
          }
        }
        const double fp = value(p);
        const double fq = value(q);
        if ((fp > 0 && fq > 0) || (fp < 0 && fq < 0) || fp == fq) continue;
        const double t = fp / (fp - fq);
        Point x(3);
        for (std::size_t j = 0; j < 3; ++j) x[j] = p[j] + t * (q[j] - p[j]);
        const bool dup = std::any_of(poly.begin(), poly.end(), [&](const Point& y) {
          return std::abs(y[0] - x[0]) + std::abs(y[1] - x[1]) + std::abs(y[2] - x[2]) < 1e-9;
        });
        if (!dup) poly.push_back(std::move(x));
      }
    }
    if (poly.size() < 3) continue;
    Point c(3, 0.0);
    for (const auto& p : poly)
      for (std::size_t j = 0; j < 3; ++j) c[j] += p[j] / static_cast<double>(poly.size());
    // Order around the centroid in a basis of the plane.
    Point u{poly[0][0] - c[0], poly[0][1] - c[1], poly[0][2] - c[2]};
    const Point v{nrm[1] * u[2] - nrm[2] * u[1], nrm[2] * u[0] - nrm[0] * u[2], nrm[0] * u[1] - nrm[1] * u[0]};
    auto angle = [&](const Point& p) {
      const double x = (p[0] - c[0]) * u[0] + (p[1] - c[1]) * u[1] + (p[2] - c[2]) * u[2];
      const double y = (p[0] - c[0]) * v[0] + (p[1] - c[1]) * v[1] + (p[2] - c[2]) * v[2];
      return std::atan2(y, x);
    };
    std::sort(poly.begin(), poly.end(), [&](const Point& p, const Point& q) { return angle(p) < angle(q); });
    out << "o plane" << i + 1 << "\n";
    for (const auto& p : poly) out << "v " << num(p[0]) << ' ' << num(p[1]) << ' ' << num(p[2]) << "\n";
    out << "f";
    for (std::size_t k = 0; k < poly.size(); ++k) out << ' ' << base + static_cast<int>(k);
    out << "\n";
    base += static_cast<int>(poly.size());
  }
  return out.str();
}

}  // namespace omkit
