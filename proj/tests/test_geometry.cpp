#include <catch2/catch_amalgamated.hpp>
#include <qrange/geometry.hpp>

using namespace qrange;

namespace {

PointCloud cloud1d(std::initializer_list<Cplx> values) {
  PointCloud c;
  c.d = 1;
  for (Cplx v : values) {
    Vec p(1);
    p(0) = v;
    c.points.push_back(std::move(p));
  }
  return c;
}

}  // namespace

TEST_CASE("hull of a square with interior points") {
  std::vector<Eigen::Vector2d> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1},
                                   {0.5, 0.5}, {0.2, 0.7}, {0.5, 0.0}};
  const Polygon2D hull = hull_2d(pts);
  REQUIRE(hull.vertices.size() == 4);
  // idempotence: the hull of the vertices is the same vertex set
  const Polygon2D again = hull_2d(hull.vertices);
  REQUIRE(again.vertices.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK((again.vertices[i] - hull.vertices[i]).norm() < 1e-15);
}

TEST_CASE("degenerate hulls") {
  CHECK(hull_2d({{1, 2}}).vertices.size() == 1);
  CHECK(hull_2d({{0, 0}, {1, 1}, {0.5, 0.5}}).vertices.size() == 2);
  CHECK_THROWS_AS(hull_2d({}), std::invalid_argument);
}

TEST_CASE("hausdorff distance basics") {
  const PointCloud a = cloud1d({Cplx(0, 0), Cplx(1, 0)});
  const PointCloud b = cloud1d({Cplx(0, 0), Cplx(1, 0), Cplx(0.5, 0)});
  CHECK(hausdorff(a, a) == 0.0);
  CHECK(hausdorff(a, b) == Catch::Approx(0.5));
  CHECK(hausdorff(a, b) == hausdorff(b, a));
  // triangle inequality on random 1d clouds
  std::mt19937_64 rng(6);
  std::normal_distribution<double> g(0, 1);
  auto rand_cloud = [&](int k) {
    PointCloud c;
    c.d = 1;
    for (int i = 0; i < k; ++i) {
      Vec p(1);
      p(0) = Cplx(g(rng), g(rng));
      c.points.push_back(std::move(p));
    }
    return c;
  };
  for (int trial = 0; trial < 10; ++trial) {
    const PointCloud x = rand_cloud(20), y = rand_cloud(15), z = rand_cloud(25);
    CHECK(hausdorff(x, z) <= hausdorff(x, y) + hausdorff(y, z) + 1e-12);
  }
}

TEST_CASE("min distance and diameter") {
  const PointCloud a = cloud1d({Cplx(0, 0), Cplx(3, 4)});
  Vec p(1);
  p(0) = Cplx(0, 1);
  CHECK(min_distance(a, p) == Catch::Approx(1.0));
  CHECK(cloud_diameter(detail::flatten(a)) == Catch::Approx(5.0));
  CHECK_THROWS_AS(min_distance(PointCloud{}, p), std::invalid_argument);
}

TEST_CASE("convexity defect on exact small cases") {
  // two distant singletons: midpoint at distance 0.5, diameter 1
  const PointCloud two = cloud1d({Cplx(0, 0), Cplx(1, 0)});
  CHECK(convexity_defect(two, 200, 1) == Catch::Approx(0.5));
  // dense segment: defect near zero
  PointCloud seg;
  seg.d = 1;
  for (int i = 0; i <= 1000; ++i) {
    Vec p(1);
    p(0) = Cplx(i / 1000.0, 0.0);
    seg.points.push_back(std::move(p));
  }
  CHECK(convexity_defect(seg, 500, 2) < 1e-3);
  CHECK_THROWS_AS(convexity_defect(cloud1d({Cplx(0, 0)}), 10, 1), std::invalid_argument);
}
