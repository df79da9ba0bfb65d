#ifndef QRANGE_GEOMETRY_HPP
#define QRANGE_GEOMETRY_HPP

#include <random>

#include "qrange/engine.hpp"

// Planar and 2d-dimensional set geometry on sampled clouds. Distances in C^d
// use the Euclidean metric of R^(2d).
namespace qrange {

struct Polygon2D {
  std::vector<Eigen::Vector2d> vertices;  // counterclockwise, convex
};

namespace detail {

inline double cross2(const Eigen::Vector2d& o, const Eigen::Vector2d& a,
                     const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

}  // namespace detail

// Monotone-chain convex hull; degenerate inputs yield point/segment polygons.
inline Polygon2D hull_2d(std::vector<Eigen::Vector2d> pts) {
  if (pts.empty()) throw std::invalid_argument("hull_2d: need at least one point");
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const auto& a, const auto& b) { return a == b; }),
            pts.end());
  const int n = static_cast<int>(pts.size());
  if (n <= 2) return Polygon2D{pts};
  std::vector<Eigen::Vector2d> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && detail::cross2(hull[k - 2], hull[k - 1], pts[i]) <= 1e-12) --k;
    hull[k++] = pts[i];
  }
  const int lower = k + 1;
  for (int i = n - 2; i >= 0; --i) {
    while (k >= lower && detail::cross2(hull[k - 2], hull[k - 1], pts[i]) <= 1e-12) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return Polygon2D{std::move(hull)};
}

inline std::vector<Eigen::Vector2d> cloud_to_plane(const PointCloud& c) {
  if (c.d != 1) throw std::invalid_argument("cloud_to_plane: d = 1 required");
  std::vector<Eigen::Vector2d> out;
  out.reserve(c.points.size());
  for (const Vec& p : c.points) out.emplace_back(p(0).real(), p(0).imag());
  return out;
}

namespace detail {

// Flattened 2d x N real view of a cloud for vectorized distance queries.
inline Eigen::MatrixXd flatten(const PointCloud& c) {
  Eigen::MatrixXd m(2 * c.d, c.points.size());
  for (std::size_t j = 0; j < c.points.size(); ++j)
    for (int i = 0; i < c.d; ++i) {
      m(2 * i, j) = c.points[j](i).real();
      m(2 * i + 1, j) = c.points[j](i).imag();
    }
  return m;
}

inline Eigen::VectorXd flatten_point(const Vec& p) {
  Eigen::VectorXd v(2 * p.size());
  for (int i = 0; i < p.size(); ++i) {
    v(2 * i) = p(i).real();
    v(2 * i + 1) = p(i).imag();
  }
  return v;
}

inline double min_distance_flat(const Eigen::MatrixXd& cloud, const Eigen::VectorXd& p) {
  return std::sqrt((cloud.colwise() - p).colwise().squaredNorm().minCoeff());
}

}  // namespace detail

inline double min_distance(const PointCloud& cloud, const Vec& p) {
  if (cloud.points.empty()) throw std::invalid_argument("min_distance: empty cloud");
  if (p.size() != cloud.d) throw std::invalid_argument("min_distance: dimension mismatch");
  return detail::min_distance_flat(detail::flatten(cloud), detail::flatten_point(p));
}

// Symmetric Hausdorff distance between the finite point sets.
inline double hausdorff(const PointCloud& a, const PointCloud& b) {
  if (a.points.empty() || b.points.empty())
    throw std::invalid_argument("hausdorff: empty cloud");
  if (a.d != b.d) throw std::invalid_argument("hausdorff: d mismatch");
  const Eigen::MatrixXd fa = detail::flatten(a), fb = detail::flatten(b);
  double h = 0.0;
  for (int j = 0; j < fa.cols(); ++j)
    h = std::max(h, detail::min_distance_flat(fb, fa.col(j)));
  for (int j = 0; j < fb.cols(); ++j)
    h = std::max(h, detail::min_distance_flat(fa, fb.col(j)));
  return h;
}

inline double cloud_diameter(const Eigen::MatrixXd& f) {
  // max pairwise distance via the bounding-box heuristic is not enough for
  // the defect normalization; do the exact O(N^2) scan on the flat view.
  double d2 = 0.0;
  for (int i = 0; i < f.cols(); ++i)
    d2 = std::max(d2, (f.colwise() - static_cast<Eigen::VectorXd>(f.col(i)))
                          .colwise()
                          .squaredNorm()
                          .maxCoeff());
  return std::sqrt(d2);
}

// Worst distance from sampled midpoints back to the cloud, normalized by the
// cloud diameter. A statistical proxy for convexity of the underlying set.
inline double convexity_defect(const PointCloud& cloud, int pair_count, std::uint64_t seed) {
  if (cloud.points.size() < 2)
    throw std::invalid_argument("convexity_defect: need at least two points");
  const Eigen::MatrixXd f = detail::flatten(cloud);
  const double diam = cloud_diameter(f);
  if (diam < 1e-300) return 0.0;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(cloud.points.size()) - 1);
  double worst = 0.0;
  for (int k = 0; k < pair_count; ++k) {
    const int i = pick(rng), j = pick(rng);
    const Eigen::VectorXd mid = (f.col(i) + f.col(j)) / 2.0;
    worst = std::max(worst, detail::min_distance_flat(f, mid));
  }
  return worst / diam;
}

}  // namespace qrange

#endif
