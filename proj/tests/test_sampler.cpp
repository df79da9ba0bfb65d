#include <catch2/catch_amalgamated.hpp>
#include <qrange/sampler.hpp>

using namespace qrange;

TEST_CASE("sampled pairs satisfy all constraints") {
  for (Cplx q : {Cplx(0, 0), Cplx(0.5, 0), Cplx(0.3, -0.6)}) {
    for (const SqPair& p : sample_sq(4, q, 200, 11)) {
      const Vec y = p.y();
      CHECK(std::abs(p.x.norm() - 1.0) < 1e-12);
      CHECK(std::abs(y.norm() - 1.0) < 1e-12);
      CHECK(std::abs(inner(p.x, y) - q) < 1e-12);
      REQUIRE(p.z.has_value());
      CHECK(std::abs(p.z->norm() - 1.0) < 1e-12);
      CHECK(std::abs(inner(*p.z, p.x)) < 1e-12);
    }
  }
}

TEST_CASE("unimodular q drops the orthogonal component") {
  const Cplx q = std::polar(1.0, 0.7);
  for (const SqPair& p : sample_sq(3, q, 50, 5)) {
    CHECK_FALSE(p.z.has_value());
    CHECK((p.y() - std::conj(q) * p.x).norm() < 1e-15);
  }
}

TEST_CASE("sampling is deterministic in the seed") {
  const auto a = sample_sq(3, Cplx(0.4, 0.1), 20, 99);
  const auto b = sample_sq(3, Cplx(0.4, 0.1), 20, 99);
  const auto c = sample_sq(3, Cplx(0.4, 0.1), 20, 100);
  for (int i = 0; i < 20; ++i) {
    CHECK((a[i].x - b[i].x).norm() == 0.0);
    CHECK((*a[i].z - *b[i].z).norm() == 0.0);
  }
  CHECK((a[0].x - c[0].x).norm() > 0.0);
}

TEST_CASE("rotating q keeps x and rotates z by the conjugate phase") {
  const Cplx q(0.5, 0.0);
  const double theta = 1.234;
  const Cplx rot = std::polar(1.0, theta);
  const auto base = sample_sq(3, q, 50, 7);
  const auto turned = sample_sq(3, rot * q, 50, 7);
  for (int i = 0; i < 50; ++i) {
    CHECK((base[i].x - turned[i].x).norm() < 1e-15);
    CHECK((*turned[i].z - std::conj(rot) * *base[i].z).norm() < 1e-14);
  }
}

TEST_CASE("real mode produces real pairs and rejects complex q") {
  for (const SqPair& p : sample_sq(3, Cplx(0.5, 0), 50, 3, FieldMode::real_field)) {
    CHECK(p.x.imag().norm() == 0.0);
    CHECK(p.z->imag().norm() == 0.0);
  }
  CHECK_THROWS_AS(sample_sq(3, Cplx(0.3, 0.2), 1, 0, FieldMode::real_field),
                  std::invalid_argument);
}

TEST_CASE("S_q is empty in one dimension unless |q| = 1") {
  CHECK_THROWS_AS(sample_sq(1, Cplx(0.5, 0), 1, 0), ConstraintError);
  CHECK_NOTHROW(sample_sq(1, Cplx(1, 0), 1, 0));
}

TEST_CASE("pair_from_xz validates and names the violated constraint") {
  Vec x(2), z(2);
  x << 1.0, 0.0;
  z << 0.0, 1.0;
  CHECK_NOTHROW(pair_from_xz(x, z, Cplx(0.5, 0)));
  CHECK_THROWS_WITH(pair_from_xz(2.0 * x, z, Cplx(0.5, 0)),
                    Catch::Matchers::ContainsSubstring("||x||"));
  CHECK_THROWS_WITH(pair_from_xz(x, Vec(0.5 * z), Cplx(0.5, 0)),
                    Catch::Matchers::ContainsSubstring("||z||"));
  CHECK_THROWS_WITH(pair_from_xz(x, Vec(x), Cplx(0.5, 0)),
                    Catch::Matchers::ContainsSubstring("<x,z>"));
  CHECK_THROWS_WITH(pair_from_xz(x, std::nullopt, Cplx(0.5, 0)),
                    Catch::Matchers::ContainsSubstring("z required"));
}
