#ifndef QRANGE_ASPACE_HPP
#define QRANGE_ASPACE_HPP

#include "qrange/sampler.hpp"

// The semi-Hilbert structure induced by a positive semidefinite A:
// <x, y>_A = <Ax, y>, the A-adjoint T^# = pinv(A) T* A, and the
// range/kernel geometry needed by the q-A-numerical range.
namespace qrange {

struct ASpace {
  Mat A;
  Mat sqrtA;         // A^(1/2)
  Mat pinv_sqrtA;    // (A^(1/2))^+
  Mat pinvA;         // Moore-Penrose A^+
  Mat proj;          // orthogonal projection onto range(A)
  Mat range_basis;   // n x rank, orthonormal columns spanning range(A)
  Mat kernel_basis;  // n x (n - rank), orthonormal columns spanning N(A)
  int rank = 0;
  double tol = 0.0;

  int n() const { return static_cast<int>(A.rows()); }
};

inline ASpace build_aspace(const Mat& A, double tol = 1e-10) {
  check_finite(A);
  if (!is_hermitian(A, 1e-10))
    throw std::invalid_argument("build_aspace: A is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es((A + A.adjoint()) / 2.0);
  const Eigen::VectorXd ev = es.eigenvalues();  // ascending
  const double lmax = std::max(0.0, ev.maxCoeff());
  const double cut = tol * std::max(1.0, lmax);
  if (ev.minCoeff() < -cut)
    throw std::invalid_argument("build_aspace: A is indefinite, eigenvalue " +
                                std::to_string(ev.minCoeff()));
  const int n = static_cast<int>(A.rows());
  ASpace s;
  s.A = A;
  s.tol = tol;
  Eigen::VectorXd sq = Eigen::VectorXd::Zero(n), isq = Eigen::VectorXd::Zero(n),
                  ipl = Eigen::VectorXd::Zero(n), pr = Eigen::VectorXd::Zero(n);
  std::vector<int> range_idx, kernel_idx;
  for (int i = 0; i < n; ++i) {
    if (ev(i) > cut) {
      sq(i) = std::sqrt(ev(i));
      isq(i) = 1.0 / sq(i);
      ipl(i) = 1.0 / ev(i);
      pr(i) = 1.0;
      range_idx.push_back(i);
    } else {
      kernel_idx.push_back(i);
    }
  }
  const Mat& V = es.eigenvectors();
  s.sqrtA = V * sq.asDiagonal() * V.adjoint();
  s.pinv_sqrtA = V * isq.asDiagonal() * V.adjoint();
  s.pinvA = V * ipl.asDiagonal() * V.adjoint();
  s.proj = V * pr.asDiagonal() * V.adjoint();
  s.rank = static_cast<int>(range_idx.size());
  s.range_basis.resize(n, s.rank);
  for (int j = 0; j < s.rank; ++j) s.range_basis.col(j) = V.col(range_idx[j]);
  s.kernel_basis.resize(n, n - s.rank);
  for (int j = 0; j < n - s.rank; ++j) s.kernel_basis.col(j) = V.col(kernel_idx[j]);
  return s;
}

inline Cplx a_inner(const ASpace& s, const Vec& x, const Vec& y) {
  return inner(s.A * x, y);
}

inline double a_norm(const ASpace& s, const Vec& x) {
  return std::sqrt(std::max(0.0, a_inner(s, x, x).real()));
}

// Douglas criterion: M admits an A-adjoint iff range(M* A) is inside range(A).
inline bool is_a_adjointable(const Mat& m, const ASpace& s, double tol = 1e-10) {
  const Mat ma = m.adjoint() * s.A;
  return ((Mat::Identity(s.n(), s.n()) - s.proj) * ma).norm() <= tol * (1.0 + ma.norm());
}

inline Mat a_adjoint(const Mat& m, const ASpace& s, double tol = 1e-10) {
  if (!is_a_adjointable(m, s, tol)) {
    const Mat ma = m.adjoint() * s.A;
    const double res = ((Mat::Identity(s.n(), s.n()) - s.proj) * ma).norm();
    throw std::invalid_argument(
        "a_adjoint: operator is not A-adjointable, Douglas residual " + std::to_string(res));
  }
  return s.pinvA * m.adjoint() * s.A;
}

// True iff M maps some kernel vector of A out of N(A); in that case
// W_{q,A}(M) is the whole complex plane.
inline bool kernel_escape(const Mat& m, const ASpace& s, double tol = 1e-10) {
  for (int j = 0; j < s.kernel_basis.cols(); ++j)
    if ((s.proj * m * s.kernel_basis.col(j)).norm() > tol) return true;
  return false;
}

struct Compression {
  Mat Aprime;  // rank x rank, positive definite
  Mat Tprime;  // rank x rank, compression of P M to range(A)
  Mat basis;   // n x rank isometry into range(A)
};

inline Compression compress_to_range(const Mat& m, const ASpace& s) {
  Compression c;
  c.basis = s.range_basis;
  c.Aprime = c.basis.adjoint() * s.A * c.basis;
  c.Tprime = c.basis.adjoint() * s.proj * m * c.basis;
  return c;
}

// Sampling of S_{q,A}: x = pinv(A^(1/2)) u + kappa k with u uniform on the unit
// sphere of range(A^(1/2)) and k a random kernel vector. The kernel component
// does not affect the A-constraints.
inline std::vector<SqPair> sample_sq_a(const ASpace& s, Cplx q, int count,
                                       std::uint64_t seed, double kappa = 0.0) {
  check_q(q);
  if (count < 1) throw std::invalid_argument("sample_sq_a: count must be >= 1");
  const bool unimodular = q_is_unimodular(q);
  if (!unimodular && s.rank < 2)
    throw ConstraintError("sample_sq_a: S_{q,A} is empty when rank(A) <= 1 and |q| < 1");
  if (unimodular && s.rank < 1)
    throw ConstraintError("sample_sq_a: A = 0 admits no A-unit vectors");

  std::mt19937_64 rng(seed);
  const Cplx zphase = std::conj(detail::q_phase(q));
  const int kdim = s.n() - s.rank;
  std::vector<SqPair> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c) {
    Vec u = s.range_basis * detail::unit_sphere(s.rank, rng, FieldMode::complex_field);
    Vec x = s.pinv_sqrtA * u;
    if (kdim > 0 && kappa != 0.0)
      x += kappa * (s.kernel_basis * detail::unit_sphere(kdim, rng, FieldMode::complex_field));
    if (unimodular) {
      out.push_back(SqPair{std::move(x), std::nullopt, q});
      continue;
    }
    // A-orthonormal companion direction inside range(A^(1/2)).
    Vec w = s.pinv_sqrtA *
            (s.range_basis * detail::gaussian_vector(s.rank, rng, FieldMode::complex_field));
    w -= a_inner(s, w, x) * x;
    const double nw = a_norm(s, w);
    if (nw < 1e-8) { --c; continue; }
    Vec z = (zphase / nw) * w;
    out.push_back(SqPair{std::move(x), std::move(z), q});
  }
  return out;
}

}  // namespace qrange

#endif
