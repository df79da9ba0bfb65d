#ifndef QRANGE_IO_HPP
#define QRANGE_IO_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qrange/geometry.hpp"

// Shared matrix/tuple JSON format, cloud CSV/JSON/SVG writers. All file
// writes go through a temp file plus atomic rename.
namespace qrange {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Cplx json_to_complex(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw FormatError("complex entries must be two-element arrays [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline nlohmann::json complex_to_json(Cplx z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

// {"n": int, "d": int, "matrices": [d row-major n x n arrays of [re, im]]}
inline OperatorTuple tuple_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("d") || !j.contains("matrices"))
    throw FormatError("tuple JSON requires fields n, d, matrices");
  const int n = j["n"].get<int>();
  const int d = j["d"].get<int>();
  if (n < 1 || d < 1) throw FormatError("tuple JSON: n and d must be >= 1");
  const auto& ms = j["matrices"];
  if (!ms.is_array() || static_cast<int>(ms.size()) != d)
    throw FormatError("tuple JSON: matrices must hold exactly d entries");
  std::vector<Mat> parts;
  for (const auto& mj : ms) {
    if (!mj.is_array() || static_cast<int>(mj.size()) != n)
      throw FormatError("tuple JSON: each matrix needs n rows");
    Mat m(n, n);
    for (int r = 0; r < n; ++r) {
      if (!mj[r].is_array() || static_cast<int>(mj[r].size()) != n)
        throw FormatError("tuple JSON: ragged row rejected");
      for (int c = 0; c < n; ++c) m(r, c) = json_to_complex(mj[r][c]);
    }
    parts.push_back(std::move(m));
  }
  return OperatorTuple(std::move(parts));
}

inline nlohmann::json tuple_to_json(const OperatorTuple& t) {
  nlohmann::json ms = nlohmann::json::array();
  for (const Mat& m : t.parts) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < t.n(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < t.n(); ++c) row.push_back(complex_to_json(m(r, c)));
      rows.push_back(std::move(row));
    }
    ms.push_back(std::move(rows));
  }
  return {{"n", t.n()}, {"d", t.d()}, {"matrices", std::move(ms)}};
}

inline OperatorTuple load_tuple(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("malformed JSON in " + path + ": " + e.what());
  }
  return tuple_from_json(j);
}

inline Mat load_matrix(const std::string& path) {
  const OperatorTuple t = load_tuple(path);
  if (t.d() != 1) throw FormatError(path + ": expected a single matrix (d = 1)");
  return t.parts.front();
}

inline void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// CSV with header re_1,im_1,...,re_d,im_d, one row per point.
inline std::string cloud_to_csv(const PointCloud& c) {
  std::ostringstream os;
  for (int i = 0; i < c.d; ++i)
    os << (i ? "," : "") << "re_" << (i + 1) << ",im_" << (i + 1);
  os << "\n";
  for (const Vec& p : c.points) {
    for (int i = 0; i < c.d; ++i)
      os << (i ? "," : "") << format_double(p(i).real()) << ','
         << format_double(p(i).imag());
    os << "\n";
  }
  return os.str();
}

inline PointCloud cloud_from_csv(const std::string& csv, CloudMeta meta = {}) {
  std::istringstream is(csv);
  std::string line;
  if (!std::getline(is, line)) throw FormatError("empty CSV");
  const int d = static_cast<int>(std::count(line.begin(), line.end(), ',') + 1) / 2;
  PointCloud c;
  c.d = d;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Vec p(d);
    for (int i = 0; i < d; ++i) {
      double re, im;
      char comma;
      ls >> re >> comma >> im;
      if (i + 1 < d) ls >> comma;
      p(i) = Cplx(re, im);
    }
    c.points.push_back(std::move(p));
  }
  c.meta = std::move(meta);
  c.meta.count = static_cast<long>(c.points.size());
  return c;
}

inline nlohmann::json cloud_meta_to_json(const PointCloud& c) {
  return {{"n", c.meta.n},           {"d", c.d},
          {"q", complex_to_json(c.meta.q)}, {"seed", c.meta.seed},
          {"count", c.meta.count},   {"generator", c.meta.generator}};
}

// Scatter plot with hull overlay, d = 1 only: one circle per point plus one
// hull path.
inline std::string cloud_to_svg(const PointCloud& c) {
  if (c.d != 1) throw std::invalid_argument("cloud_to_svg: d = 1 required");
  const auto pts = cloud_to_plane(c);
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& p : pts) {
    xmin = std::min(xmin, p.x()); xmax = std::max(xmax, p.x());
    ymin = std::min(ymin, p.y()); ymax = std::max(ymax, p.y());
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double pad = 0.05 * span;
  auto sx = [&](double x) { return 600.0 * (x - xmin + pad) / (span + 2 * pad); };
  auto sy = [&](double y) { return 600.0 - 600.0 * (y - ymin + pad) / (span + 2 * pad); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
        "viewBox=\"0 0 600 600\">\n";
  const Polygon2D hull = hull_2d(pts);
  os << "<path d=\"";
  for (std::size_t i = 0; i < hull.vertices.size(); ++i)
    os << (i ? "L" : "M") << sx(hull.vertices[i].x()) << ' ' << sy(hull.vertices[i].y());
  os << "Z\" fill=\"none\" stroke=\"#c33\" stroke-width=\"1.5\"/>\n";
  for (const auto& p : pts)
    os << "<circle cx=\"" << sx(p.x()) << "\" cy=\"" << sy(p.y())
       << "\" r=\"2\" fill=\"#268bd2\" fill-opacity=\"0.5\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace qrange

#endif
