#ifndef QRANGE_TESTS_ORACLES_HPP
#define QRANGE_TESTS_ORACLES_HPP

#include <qrange/core.hpp>

// Independent brute-force oracles used to freeze expected values. These scan
// dense parameter grids and never touch the sampling/optimization paths they
// are meant to check.
namespace oracle {

using qrange::Cplx;
using qrange::Mat;
using qrange::Vec;

// Full parametrization of S_q(C^2) up to the common phase of (x, y):
// x = (cos t, sin t e^{i u}), z = e^{i v} (-sin t e^{-i u}, cos t),
// y = conj(q) x + sqrt(1 - |q|^2) z.
template <typename F>
void scan_sq_c2(Cplx q, int grid, F&& visit) {
  const double s = std::sqrt(std::max(0.0, 1.0 - std::norm(q)));
  const double half_pi = M_PI / 2.0, two_pi = 2.0 * M_PI;
  for (int it = 0; it <= grid; ++it) {
    const double t = half_pi * it / grid;
    const double ct = std::cos(t), st = std::sin(t);
    for (int iu = 0; iu < grid; ++iu) {
      const double u = two_pi * iu / grid;
      const Cplx eu = std::polar(1.0, u);
      Vec x(2);
      x << ct, st * eu;
      for (int iv = 0; iv < grid; ++iv) {
        const double v = two_pi * iv / grid;
        const Cplx evp = std::polar(1.0, v);
        Vec z(2);
        z << -st * std::conj(eu) * evp, ct * evp;
        const Vec y = std::conj(q) * x + s * z;
        visit(x, y);
      }
    }
  }
}

// Joint value of the 2x2 example tuple T1 = [[z1,0],[0,0]], T2 = [[0,0],[z2,0]]
// at a pair (x, y): (z1 x1 conj(y1), z2 x1 conj(y2)).
inline Eigen::Vector4d example_point(Cplx z1, Cplx z2, const Vec& x, const Vec& y) {
  const Cplx p1 = z1 * x(0) * std::conj(y(0));
  const Cplx p2 = z2 * x(0) * std::conj(y(1));
  return {p1.real(), p1.imag(), p2.real(), p2.imag()};
}

// Minimum distance from target (in C^2 ~ R^4) to the example's joint range,
// dense scan over S_q(C^2).
inline double example_min_distance(Cplx q, Cplx z1, Cplx z2, const Eigen::Vector4d& target,
                                   int grid = 240) {
  double best = 1e300;
  scan_sq_c2(q, grid, [&](const Vec& x, const Vec& y) {
    best = std::min(best, (example_point(z1, z2, x, y) - target).norm());
  });
  return best;
}

// Max modulus of <M x, y> over S_q(C^2), dense scan.
inline double wq_max_modulus_c2(const Mat& m, Cplx q, int grid = 240) {
  double best = 0.0;
  scan_sq_c2(q, grid, [&](const Vec& x, const Vec& y) {
    best = std::max(best, std::abs(qrange::inner(m * x, y)));
  });
  return best;
}

// Real two-dimensional constraint set: x = (cos a, sin a),
// y = (cos b, sin b) with cos(a - b) = q (two branches).
template <typename F>
void scan_sq_r2(double q, int grid, F&& visit) {
  const double delta = std::acos(std::clamp(q, -1.0, 1.0));
  const double two_pi = 2.0 * M_PI;
  for (int ia = 0; ia < grid; ++ia) {
    const double a = two_pi * ia / grid;
    for (double b : {a - delta, a + delta}) {
      Vec x(2), y(2);
      x << std::cos(a), std::sin(a);
      y << std::cos(b), std::sin(b);
      visit(x, y);
    }
  }
}

// The self-adjoint remark tuple T1 = [[0,m],[m,0]], T2 = [[m,0],[0,0]] over R^2:
// point (m(x2 y1 + x1 y2), m x1 y1).
inline Eigen::Vector2d remark_point(double m, const Vec& x, const Vec& y) {
  return {m * (x(1).real() * y(0).real() + x(0).real() * y(1).real()),
          m * x(0).real() * y(0).real()};
}

inline double remark_min_distance(double q, double m, const Eigen::Vector2d& target,
                                  int grid = 2000000) {
  double best = 1e300;
  scan_sq_r2(q, grid, [&](const Vec& x, const Vec& y) {
    best = std::min(best, (remark_point(m, x, y) - target).norm());
  });
  return best;
}

}  // namespace oracle

#endif
