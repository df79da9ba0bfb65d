#include <catch2/catch_amalgamated.hpp>
#include <qrange/geometry.hpp>
#include <qrange/semihilbert.hpp>

using namespace qrange;

namespace {

Mat diag3(double a, double b, double c) {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

}  // namespace

TEST_CASE("weighted range of the identity operator is the point q") {
  const ASpace s = build_aspace(diag3(4, 1, 0));
  const Cplx q(0.3, 0.4);
  const QARangeResult res = cloud_qa(Mat::Identity(3, 3), s, q, 100, 3);
  REQUIRE(res.kind == QARangeResult::Kind::Cloud);
  for (const Vec& p : res.cloud.points) CHECK(std::abs(p(0) - q) < 1e-10);
}

TEST_CASE("kernel escape produces an unbounded certificate") {
  const ASpace s = build_aspace(diag3(4, 1, 0));
  Mat m = Mat::Identity(3, 3);
  m(0, 2) = 1.0;
  const QARangeResult res = cloud_qa(m, s, Cplx(0.5, 0), 100, 3);
  REQUIRE(res.kind == QARangeResult::Kind::FullPlane);
  REQUIRE(res.certificate.values.size() == default_kappa_schedule().size());
  // values scale with kappa, so the tail dominates the schedule
  CHECK(std::abs(res.certificate.values.back()) > 1e3);
  CHECK(std::abs(res.certificate.values.back()) >
        std::abs(res.certificate.values.front()) * 1e3);
  // the witness lies in N(A) and its image leaves N(A)
  CHECK((s.A * res.certificate.kernel_witness).norm() < 1e-10);
  CHECK((s.proj * m * res.certificate.kernel_witness).norm() > 1e-10);
  CHECK(radius_qa(m, s, Cplx(0.5, 0)).infinite);
}

TEST_CASE("the identity weight reduces the radius to the Hilbert one") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0, 1);
  Mat m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Cplx(g(rng), g(rng));
  const ASpace s = build_aspace(Mat::Identity(3, 3));
  RadiusOptions opts;
  opts.restarts = 8;
  const QARadius wr = radius_qa(m, s, Cplx(0.5, 0), opts);
  REQUIRE_FALSE(wr.infinite);
  const double direct = radius_joint(OperatorTuple(m), Cplx(0.5, 0), opts).value;
  CHECK(wr.estimate.value == Catch::Approx(direct).epsilon(1e-6));
  // the transported witness attains the value in the ambient constraints
  const SqPair& w = wr.estimate.witness;
  CHECK(std::abs(a_norm(s, w.x) - 1.0) < 1e-9);
  CHECK(std::abs(a_inner(s, m * w.x, w.y())) ==
        Catch::Approx(wr.estimate.value).epsilon(1e-9));
}

TEST_CASE("compression preserves the weighted range") {
  const ASpace s = build_aspace(diag3(1, 1, 0));
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g(0, 1);
  Mat b(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b(i, j) = Cplx(g(rng), g(rng));
  const Mat k = Mat::Identity(3, 3) - s.proj;
  Mat m = s.proj * b * s.proj + k * b * k;
  m /= operator_norm(m);
  const Cplx q(0.5, 0);
  const QARangeResult ambient = cloud_qa(m, s, q, 4000, 21);
  const Compression c = compress_to_range(m, s);
  const QARangeResult reduced =
      cloud_qa(c.Tprime, build_aspace(c.Aprime), q, 4000, 22);
  CHECK(hausdorff(ambient.cloud, reduced.cloud) < 0.08);
}

TEST_CASE("triangle diagnostic closes for S = T") {
  const ASpace s = build_aspace(diag3(2, 1, 0.5));
  Mat m(3, 3);
  m << 1, Cplx(0, 1), 0, 0.5, -1, 2, 0, 1, Cplx(0.3, 0.1);
  RadiusOptions opts;
  opts.restarts = 8;
  const TriangleGap g = triangle_equality_gap(m, m, s, Cplx(0.5, 0), opts);
  CHECK(std::abs(g.gap) < 1e-6);
  CHECK(g.cross_sup == Catch::Approx(g.wT * g.wT).margin(1e-6));
  CHECK(g.wSum == Catch::Approx(2.0 * g.wT).margin(1e-6));
  Mat escape = Mat::Zero(3, 3);
  CHECK_NOTHROW(triangle_equality_gap(m, escape, build_aspace(diag3(2, 1, 0.5)),
                                      Cplx(0.5, 0), opts));
  const ASpace sdef = build_aspace(diag3(1, 1, 0));
  Mat esc = Mat::Identity(3, 3);
  esc(0, 2) = 1.0;
  CHECK_THROWS_AS(triangle_equality_gap(m, esc, sdef, Cplx(0.5, 0), opts),
                  std::invalid_argument);
}

TEST_CASE("infeasible weighted constraints are rejected") {
  CHECK_THROWS_AS(cloud_qa(Mat::Identity(3, 3), build_aspace(diag3(1, 0, 0)),
                           Cplx(0.5, 0), 10, 0),
                  ConstraintError);
  // rank one is fine for |q| = 1
  CHECK_NOTHROW(cloud_qa(Mat::Identity(3, 3), build_aspace(diag3(1, 0, 0)),
                         Cplx(1, 0), 10, 0));
}
