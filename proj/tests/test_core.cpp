#include <catch2/catch_amalgamated.hpp>
#include <qrange/core.hpp>

using namespace qrange;

namespace {

Mat mat2(Cplx a, Cplx b, Cplx c, Cplx d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("inner product is linear in the first slot") {
  Vec x(2), y(2);
  x << Cplx(1, 0), Cplx(0, 0);
  y << Cplx(0, 1), Cplx(0, 0);
  CHECK(inner(x, y) == Cplx(0, -1));
  CHECK(inner(Cplx(2, 0) * x, y) == Cplx(0, -2));
  // <x, q_bar x> = q for unit x
  const Cplx q(0.3, 0.4);
  CHECK(std::abs(inner(x, std::conj(q) * x) - q) < 1e-15);
}

TEST_CASE("check_q accepts the closed disk and rejects outside") {
  CHECK_NOTHROW(check_q(Cplx(1, 0)));
  CHECK_NOTHROW(check_q(Cplx(0, 0)));
  CHECK_THROWS_AS(check_q(Cplx(1.1, 0)), std::invalid_argument);
}

TEST_CASE("tuple construction validates shapes") {
  CHECK_THROWS_AS(OperatorTuple(std::vector<Mat>{}), std::invalid_argument);
  std::vector<Mat> mismatched{Mat::Identity(2, 2), Mat::Identity(3, 3)};
  CHECK_THROWS_AS(OperatorTuple(std::move(mismatched)), std::invalid_argument);
  Mat bad(2, 2);
  bad << 1.0, std::nan(""), 0.0, 0.0;
  CHECK_THROWS_AS(OperatorTuple(bad), std::invalid_argument);
  const OperatorTuple t(std::vector<Mat>{Mat::Zero(3, 3), Mat::Identity(3, 3)});
  CHECK(t.d() == 2);
  CHECK(t.n() == 3);
}

TEST_CASE("real and imaginary parts are Hermitian and recombine") {
  const Mat m = mat2({1, 2}, {3, -1}, {0, 4}, {-2, 0.5});
  const auto [re, im] = real_imag_parts(OperatorTuple(m));
  CHECK(is_hermitian(re.parts[0]));
  CHECK(is_hermitian(im.parts[0]));
  const Mat back = re.parts[0] + Cplx(0, 1) * im.parts[0];
  CHECK((back - m).norm() < 1e-14);
}

TEST_CASE("tuple norm equals the stacked top singular value") {
  // diag(1, 0) alone: norm 1
  CHECK(tuple_norm(OperatorTuple(mat2(1, 0, 0, 0))) == Catch::Approx(1.0));
  // two copies of the identity: sup_x sqrt(2 |x|^2) = sqrt(2)
  const OperatorTuple t(std::vector<Mat>{Mat::Identity(2, 2), Mat::Identity(2, 2)});
  CHECK(tuple_norm(t) == Catch::Approx(std::sqrt(2.0)));
  CHECK(operator_norm(mat2(3, 0, 0, 1)) == Catch::Approx(3.0));
}

TEST_CASE("classical radius on known matrices") {
  // Hermitian: radius is the largest absolute eigenvalue.
  CHECK(classical_radius(mat2(1, 0, 0, -2)) == Catch::Approx(2.0).margin(1e-10));
  // Nilpotent Jordan block: the numerical range is the disk of radius 1/2.
  CHECK(classical_radius(mat2(0, 1, 0, 0)) == Catch::Approx(0.5).margin(1e-10));
  // Scalar rotation does not change the radius.
  CHECK(classical_radius(Cplx(0, 1) * mat2(0, 1, 0, 0)) ==
        Catch::Approx(0.5).margin(1e-10));
}

TEST_CASE("commutation check") {
  const Mat m = mat2({1, 1}, 2, 0, {0, -1});
  CHECK(commutes(OperatorTuple(std::vector<Mat>{m, m * m})));
  CHECK_FALSE(commutes(OperatorTuple(std::vector<Mat>{mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)})));
  CHECK_THROWS_AS(commutes(OperatorTuple(m), 0.0), std::invalid_argument);
}

TEST_CASE("affine map of a tuple") {
  const OperatorTuple t(mat2(1, 0, 0, 0));
  const OperatorTuple at = apply_affine(t, Cplx(2, 0), Cplx(0, 1));
  CHECK((at.parts[0] - mat2({2, 1}, 0, 0, {0, 1})).norm() < 1e-15);
}
