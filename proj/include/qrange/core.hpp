#ifndef QRANGE_CORE_HPP
#define QRANGE_CORE_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

// Core types and operator calculus for tuples of complex matrices.
namespace qrange {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Inner product convention: linear in the first slot, conjugate-linear in
// the second, so inner(x, q_bar * x) == q for a unit x.
inline Cplx inner(const Vec& u, const Vec& v) { return v.dot(u); }

struct ConstraintError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void check_q(Cplx q, double tol = 1e-12) {
  if (std::abs(q) > 1.0 + tol)
    throw std::invalid_argument("q must satisfy |q| <= 1, got |q| = " +
                                std::to_string(std::abs(q)));
}

inline void check_finite(const Mat& m) {
  if (!m.allFinite()) throw std::invalid_argument("matrix has NaN/Inf entries");
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  if (m.rows() < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

// T = (T_1, ..., T_d), all parts square of equal dimension.
struct OperatorTuple {
  std::vector<Mat> parts;

  OperatorTuple() = default;
  explicit OperatorTuple(std::vector<Mat> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("tuple length d must be >= 1");
    for (const Mat& m : parts) {
      check_finite(m);
      if (m.rows() != parts.front().rows())
        throw std::invalid_argument("tuple parts must share dimension");
    }
  }
  explicit OperatorTuple(Mat m) : OperatorTuple(std::vector<Mat>{std::move(m)}) {}

  int d() const { return static_cast<int>(parts.size()); }
  int n() const { return static_cast<int>(parts.front().rows()); }
};

inline bool is_hermitian(const Mat& m, double tol = 1e-10) {
  return (m - m.adjoint()).norm() <= tol * (1.0 + m.norm());
}

inline OperatorTuple adjoint_tuple(const OperatorTuple& t) {
  std::vector<Mat> out;
  out.reserve(t.parts.size());
  for (const Mat& m : t.parts) out.push_back(m.adjoint());
  return OperatorTuple(std::move(out));
}

// (Re(T_i))_i and (Im(T_i))_i with T_i = Re + i*Im, both Hermitian.
inline std::pair<OperatorTuple, OperatorTuple> real_imag_parts(const OperatorTuple& t) {
  std::vector<Mat> re, im;
  re.reserve(t.parts.size());
  im.reserve(t.parts.size());
  const Cplx two_i(0.0, 2.0);
  for (const Mat& m : t.parts) {
    re.push_back((m + m.adjoint()) / 2.0);
    im.push_back((m - m.adjoint()) / two_i);
  }
  return {OperatorTuple(std::move(re)), OperatorTuple(std::move(im))};
}

// Vertical stack of the parts, (d*n) x n.
inline Mat stack_tuple(const OperatorTuple& t) {
  Mat s(t.d() * t.n(), t.n());
  for (int i = 0; i < t.d(); ++i) s.middleRows(i * t.n(), t.n()) = t.parts[i];
  return s;
}

inline double operator_norm(const Mat& m) {
  return Eigen::JacobiSVD<Mat>(m).singularValues()(0);
}

// ||T|| = sup_{|x|=1} (sum_i |T_i x|^2)^(1/2), the top singular value of the stack.
inline double tuple_norm(const OperatorTuple& t) {
  return operator_norm(stack_tuple(t));
}

// Classical numerical radius via a theta-grid over lambda_max(Re(e^{i theta} M)),
// refined by golden-section search in the best grid cell.
inline double classical_radius(const Mat& m, int angles = 4096) {
  check_finite(m);
  if (angles < 16) throw std::invalid_argument("classical_radius needs angles >= 16");
  const double two_pi = 2.0 * M_PI;
  auto height = [&](double theta) {
    const Mat r = (std::polar(1.0, theta) * m + std::polar(1.0, -theta) * m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Mat> es(r, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
  };
  double best = -1e300;
  int best_k = 0;
  for (int k = 0; k < angles; ++k) {
    const double h = height(two_pi * k / angles);
    if (h > best) { best = h; best_k = k; }
  }
  // Golden-section refinement over the two cells around the best grid angle.
  double a = two_pi * (best_k - 1) / angles;
  double b = two_pi * (best_k + 1) / angles;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), dpt = a + gr * (b - a);
  double fc = height(c), fd = height(dpt);
  for (int it = 0; it < 60 && (b - a) > 1e-12; ++it) {
    if (fc > fd) { b = dpt; dpt = c; fd = fc; c = b - gr * (b - a); fc = height(c); }
    else         { a = c; c = dpt; fc = fd; dpt = a + gr * (b - a); fd = height(dpt); }
  }
  return std::max(best, std::max(fc, fd));
}

// max_{i,j} ||T_i T_j - T_j T_i||_F <= tol
inline bool commutes(const OperatorTuple& t, double tol = 1e-10) {
  if (tol <= 0) throw std::invalid_argument("commutes: tol must be > 0");
  for (int i = 0; i < t.d(); ++i)
    for (int j = i + 1; j < t.d(); ++j)
      if ((t.parts[i] * t.parts[j] - t.parts[j] * t.parts[i]).norm() > tol) return false;
  return true;
}

// (alpha*T_i + beta*I)_i
inline OperatorTuple apply_affine(const OperatorTuple& t, Cplx alpha, Cplx beta) {
  std::vector<Mat> out;
  out.reserve(t.parts.size());
  const Mat id = Mat::Identity(t.n(), t.n());
  for (const Mat& m : t.parts) out.push_back(alpha * m + beta * id);
  return OperatorTuple(std::move(out));
}

}  // namespace qrange

#endif
