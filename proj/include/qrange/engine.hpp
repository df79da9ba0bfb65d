#ifndef QRANGE_ENGINE_HPP
#define QRANGE_ENGINE_HPP

#include <algorithm>
#include <cmath>

#include "qrange/report.hpp"
#include "qrange/sampler.hpp"

// Point clouds and radius estimates for the (joint) q-numerical range,
// the Tsing disk family, joint point spectra and the C-numerical range.
namespace qrange {

struct CloudMeta {
  int n = 0;
  Cplx q{0.0, 0.0};
  std::uint64_t seed = 0;
  long count = 0;
  std::string generator;
};

struct PointCloud {
  int d = 1;
  std::vector<Vec> points;  // each point lives in C^d
  CloudMeta meta;
};

struct Disk {
  Cplx center;
  double radius = 0.0;
};

// The value vector (<T_1 x, y>, ..., <T_d x, y>) at one constraint pair.
inline Vec evaluate_pair(const OperatorTuple& t, const SqPair& p) {
  const Vec y = p.y();
  Vec out(t.d());
  for (int i = 0; i < t.d(); ++i) out(i) = inner(t.parts[i] * p.x, y);
  return out;
}

inline PointCloud cloud_from_pairs(const OperatorTuple& t, const std::vector<SqPair>& pairs,
                                   std::string generator, std::uint64_t seed) {
  PointCloud c;
  c.d = t.d();
  c.points.reserve(pairs.size());
  for (const SqPair& p : pairs) {
    if (p.x.size() != t.n())
      throw std::invalid_argument("cloud: sampler dimension does not match tuple");
    c.points.push_back(evaluate_pair(t, p));
  }
  c.meta = {t.n(), pairs.empty() ? Cplx(0, 0) : pairs.front().q, seed,
            static_cast<long>(pairs.size()), std::move(generator)};
  return c;
}

inline PointCloud cloud_joint(const OperatorTuple& t, Cplx q, int count, std::uint64_t seed,
                              FieldMode mode = FieldMode::complex_field) {
  return cloud_from_pairs(t, sample_sq(t.n(), q, count, seed, mode), "joint-q", seed);
}

inline PointCloud cloud_single(const Mat& m, Cplx q, int count, std::uint64_t seed,
                               FieldMode mode = FieldMode::complex_field) {
  return cloud_joint(OperatorTuple(m), q, count, seed, mode);
}

// For each sampled unit x, W_q restricted to that x is the disk with center
// q <Mx, x> and radius sqrt(1-|q|^2) (|Mx|^2 - |<Mx,x>|^2)^(1/2).
inline std::vector<Disk> tsing_disks(const Mat& m, Cplx q, int x_count, std::uint64_t seed) {
  check_q(q);
  check_finite(m);
  const double s = std::sqrt(std::max(0.0, 1.0 - std::norm(q)));
  std::mt19937_64 rng(seed);
  std::vector<Disk> out;
  out.reserve(x_count);
  for (int c = 0; c < x_count; ++c) {
    const Vec x = detail::unit_sphere(static_cast<int>(m.rows()), rng, FieldMode::complex_field);
    const Vec mx = m * x;
    const Cplx cxx = inner(mx, x);
    const double rad2 = std::max(0.0, mx.squaredNorm() - std::norm(cxx));
    out.push_back(Disk{q * cxx, s * std::sqrt(rad2)});
  }
  return out;
}

struct RadiusOptions {
  int restarts = 16;
  int max_iters = 500;
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

struct RadiusEstimate {
  double value = 0.0;
  SqPair witness;
  int iterations = 0;
  bool converged = false;
};

namespace detail {

// Best z (unit, orthogonal to x) for fixed x. Closed form for d = 1,
// convex-maximization power iteration for d > 1.
inline void solve_inner_z(const OperatorTuple& t, const Vec& x, Cplx q, double s, Vec& z) {
  const int d = t.d();
  std::vector<Vec> tx(d);
  Vec a(d);
  for (int i = 0; i < d; ++i) {
    tx[i] = t.parts[i] * x;
    const Cplx c = inner(tx[i], x);
    a(i) = q * c;
    tx[i] -= c * x;  // residual orthogonal to x
  }
  if (d == 1) {
    const double nr = tx[0].norm();
    if (nr < 1e-14) return;  // flat direction, keep current z
    // z = conj(ph) r / |r| gives <r, z> = ph |r|, aligning s<r,z> with a.
    const Cplx ph = (std::abs(a(0)) < 1e-300) ? Cplx(1, 0) : a(0) / std::abs(a(0));
    z = std::conj(ph) * (tx[0] / nr);
    return;
  }
  Mat r(x.size(), d);
  for (int i = 0; i < d; ++i) r.col(i) = tx[i];
  const Vec abar = a.conjugate();
  for (int it = 0; it < 12; ++it) {
    Vec g = s * (r * (abar + s * (r.adjoint() * z)));
    g -= inner(g, x) * x;
    const double ng = g.norm();
    if (ng < 1e-14) break;
    z = g / ng;
  }
}

inline double pair_value(const OperatorTuple& t, const SqPair& p) {
  return evaluate_pair(t, p).norm();
}

}  // namespace detail

// Lower-bound estimate of the joint q-numerical radius via alternating
// maximization over (x, z) with multi-start projected gradient ascent on x.
// The input is normalized by its tuple norm first, which makes the estimate
// exactly homogeneous under scalar multiples of T.
inline RadiusEstimate radius_joint(const OperatorTuple& t, Cplx q,
                                   const RadiusOptions& opts = {}) {
  check_q(q);
  const int n = t.n();
  const bool unimodular = q_is_unimodular(q);
  if (!unimodular && n < 2)
    throw ConstraintError("radius_joint: S_q is empty for n = 1 and |q| < 1");

  const double scale = tuple_norm(t);
  RadiusEstimate best;
  if (scale < 1e-300) {
    auto pairs = sample_sq(std::max(n, unimodular ? 1 : 2), q, 1, opts.seed);
    best.witness = pairs.front();
    best.converged = true;
    return best;
  }
  std::vector<Mat> normed;
  for (const Mat& m : t.parts) normed.push_back(m / scale);
  const OperatorTuple th(std::move(normed));
  const double s = std::sqrt(std::max(0.0, 1.0 - std::norm(q)));

  best.value = -1.0;
  for (int r = 0; r < opts.restarts; ++r) {
    const std::uint64_t sub = opts.seed ^ (0x9e3779b97f4a7c15ULL * (r + 1));
    SqPair p = sample_sq(n, q, 1, sub).front();
    if (p.z) detail::solve_inner_z(th, p.x, q, s, *p.z);
    double val = detail::pair_value(th, p);
    auto consider = [&](double v, const SqPair& w, int iters) {
      if (v > best.value) { best.value = v; best.witness = w; best.iterations = iters; }
    };
    consider(val, p, 0);
    bool conv = false;
    for (int it = 0; it < opts.max_iters; ++it) {
      // Euclidean gradient of |<T x, y>|_2^2 with respect to conj(x), z fixed.
      const Vec y = p.y();
      Vec grad = Vec::Zero(n);
      for (int i = 0; i < th.d(); ++i) {
        const Cplx pi = inner(th.parts[i] * p.x, y);
        grad += pi * (th.parts[i].adjoint() * y) + q * std::conj(pi) * (th.parts[i] * p.x);
      }
      grad -= inner(grad, p.x) * p.x;
      const double gn = grad.norm();
      if (gn < 1e-14) { conv = true; consider(val, p, it); break; }
      double eta = 1.0;
      SqPair cand = p;
      double cval = val;
      bool moved = false;
      for (int bt = 0; bt < 40; ++bt) {
        Vec xn = p.x + eta * grad;
        xn.normalize();
        SqPair trial;
        trial.q = q;
        trial.x = xn;
        if (p.z) {
          Vec zn = *p.z - inner(*p.z, xn) * xn;
          const double nz = zn.norm();
          trial.z = (nz > 1e-12) ? Vec(zn / nz) : *p.z;
          detail::solve_inner_z(th, xn, q, s, *trial.z);
        }
        const double tv = detail::pair_value(th, trial);
        if (tv > val + 1e-4 * eta * gn * gn) {
          cand = std::move(trial);
          cval = tv;
          moved = true;
          break;
        }
        eta *= 0.5;
      }
      if (!moved) { conv = true; consider(val, p, it); break; }
      const double delta = cval - val;
      p = std::move(cand);
      val = cval;
      consider(val, p, it + 1);
      if (delta < opts.tol) { conv = true; break; }
    }
    if (conv) best.converged = true;
  }
  best.value *= scale;
  return best;
}

// Two-sided norm relation for real q in (0, 1). paper_lower is the
// q/(2 sqrt(d) (2 - q^2)) ||T|| form; corrected_lower drops the superfluous
// (2 - q^2) factor and is the tighter valid bound. Upper bound is ||T||.
struct SandwichBounds {
  double paper_lower = 0.0;
  double corrected_lower = 0.0;
  double upper = 0.0;
};

inline SandwichBounds sandwich_bounds(const OperatorTuple& t, double q) {
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("sandwich_bounds: q must be real in (0,1)");
  const double nrm = tuple_norm(t);
  const double sd = std::sqrt(static_cast<double>(t.d()));
  return {q / (2.0 * sd * (2.0 - q * q)) * nrm, q / (2.0 * sd) * nrm, nrm};
}

struct SpectrumPoint {
  Vec xi;       // in C^d
  Vec witness;  // unit vector with (T_i - xi_i) witness ~ 0
  double sigma_min = 0.0;
};

// Joint point spectrum of a commuting tuple: candidates from the Cartesian
// product of the individual spectra, accepted when the stacked shifts
// (T_i - xi_i I) have a near-trivial common kernel.
inline std::vector<SpectrumPoint> joint_point_spectrum(const OperatorTuple& t, double tol) {
  if (!commutes(t, 1e-8))
    throw std::invalid_argument("joint_point_spectrum: tuple does not commute");
  if (t.n() > 64) throw std::invalid_argument("joint_point_spectrum: n <= 64 required");
  const int n = t.n(), d = t.d();
  std::vector<std::vector<Cplx>> spectra(d);
  for (int i = 0; i < d; ++i) {
    Eigen::ComplexEigenSolver<Mat> es(t.parts[i], false);
    for (int k = 0; k < n; ++k) {
      const Cplx ev = es.eigenvalues()(k);
      bool dup = false;
      for (const Cplx& prev : spectra[i])
        if (std::abs(prev - ev) < 1e-9 * (1.0 + std::abs(ev))) { dup = true; break; }
      if (!dup) spectra[i].push_back(ev);
    }
  }
  std::vector<SpectrumPoint> out;
  std::vector<int> idx(d, 0);
  const Mat id = Mat::Identity(n, n);
  for (;;) {
    Vec xi(d);
    for (int i = 0; i < d; ++i) xi(i) = spectra[i][idx[i]];
    Mat stacked(d * n, n);
    for (int i = 0; i < d; ++i) stacked.middleRows(i * n, n) = t.parts[i] - xi(i) * id;
    Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeThinV);
    const double smin = svd.singularValues()(n - 1);
    if (smin < tol) {
      bool dup = false;
      for (const SpectrumPoint& prev : out)
        if ((prev.xi - xi).norm() < 1e-8 * (1.0 + xi.norm())) { dup = true; break; }
      if (!dup) out.push_back(SpectrumPoint{xi, svd.matrixV().col(n - 1), smin});
    }
    int pos = d - 1;
    while (pos >= 0 && ++idx[pos] == static_cast<int>(spectra[pos].size())) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

// For each spectrum point xi with witness x, builds y = conj(q) x + s z and
// checks that the tuple evaluates to q*xi there.
inline Report spectral_inclusion_check(const OperatorTuple& t, Cplx q, double tol) {
  check_q(q);
  const int n = t.n();
  const bool unimodular = q_is_unimodular(q);
  if (!unimodular && n < 2)
    throw ConstraintError("spectral_inclusion_check: n >= 2 required for |q| < 1");
  const double spec_tol = 1e-8 * (1.0 + [&] {
    double m = 0;
    for (const Mat& p : t.parts) m = std::max(m, p.norm());
    return m;
  }());
  const auto spectrum = joint_point_spectrum(t, spec_tol);
  double max_res = 0.0;
  nlohmann::json wit;
  for (const SpectrumPoint& sp : spectrum) {
    SqPair pair;
    pair.q = q;
    pair.x = sp.witness / sp.witness.norm();
    if (!unimodular) {
      // deterministic z orthogonal to x: orthonormalize a basis vector
      Vec z;
      for (int k = 0; k < n; ++k) {
        Vec e = Vec::Zero(n);
        e(k) = 1.0;
        e -= inner(e, pair.x) * pair.x;
        if (e.norm() > 0.5) { z = e / e.norm(); break; }
      }
      pair.z = z;
    }
    const Vec p = evaluate_pair(t, pair);
    const double res = (p - q * sp.xi).norm();
    if (res > max_res) {
      max_res = res;
      wit = {{"xi_re_im", nlohmann::json::array()}};
      for (int i = 0; i < sp.xi.size(); ++i)
        wit["xi_re_im"].push_back({sp.xi(i).real(), sp.xi(i).imag()});
    }
  }
  return make_report("spectral-inclusion", tol - max_res, 0.0, 0,
                     static_cast<long>(spectrum.size()),
                     "max residual " + std::to_string(max_res), wit);
}

// C = [[q, sqrt(1-|q|^2)], [0, 0]] padded with zeros to n x n.
inline Mat q_to_c_matrix(Cplx q, int n) {
  check_q(q);
  if (n < 2) throw std::invalid_argument("q_to_c_matrix: n >= 2 required");
  Mat c = Mat::Zero(n, n);
  c(0, 0) = q;
  c(0, 1) = std::sqrt(std::max(0.0, 1.0 - std::norm(q)));
  return c;
}

// Haar-random unitary: QR of a complex Gaussian with the R diagonal phases
// folded back into Q.
inline Mat haar_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = Cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Mat> qr(z);
  Mat qmat = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Cplx rj = r(j, j);
    const Cplx ph = (std::abs(rj) < 1e-300) ? Cplx(1, 0) : rj / std::abs(rj);
    qmat.col(j) *= ph;
  }
  return qmat;
}

// Points (tr(C U* T_i U))_i over Haar-random unitaries U.
inline PointCloud c_range_cloud(const OperatorTuple& t, const Mat& c, int count,
                                std::uint64_t seed) {
  check_finite(c);
  if (c.rows() != t.n())
    throw std::invalid_argument("c_range_cloud: C dimension does not match tuple");
  std::mt19937_64 rng(seed);
  PointCloud cloud;
  cloud.d = t.d();
  cloud.points.reserve(count);
  for (int k = 0; k < count; ++k) {
    const Mat u = haar_unitary(t.n(), rng);
    Vec p(t.d());
    for (int i = 0; i < t.d(); ++i) p(i) = (c * u.adjoint() * t.parts[i] * u).trace();
    cloud.points.push_back(std::move(p));
  }
  cloud.meta = {t.n(), Cplx(0, 0), seed, count, "c-range"};
  return cloud;
}

struct BlockBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Two-sided bound for the radius of the assembled 2x2 block tuple
// T_i = [[P_i, Q_i], [R_i, S_i]]. Comparisons happen on squared radii; the
// reported values are square roots.
inline BlockBounds block_bounds(const OperatorTuple& p, const OperatorTuple& qq,
                                const OperatorTuple& r, const OperatorTuple& s, Cplx q,
                                const RadiusOptions& opts = {}) {
  check_q(q);
  if (p.d() != qq.d() || p.d() != r.d() || p.d() != s.d() || p.n() != qq.n() ||
      p.n() != r.n() || p.n() != s.n())
    throw std::invalid_argument("block_bounds: the four tuples must share (d, n)");
  const double aq = std::abs(q);
  const double sq = std::sqrt(std::max(0.0, 1.0 - aq * aq));
  const double wp = radius_joint(p, q, opts).value;
  const double ws = radius_joint(s, q, opts).value;
  double upper_sq = 0.0;
  for (int i = 0; i < p.d(); ++i) {
    const double op = classical_radius(p.parts[i]);
    const double os = classical_radius(s.parts[i]);
    const double nr = operator_norm(r.parts[i]);
    const double nq = operator_norm(qq.parts[i]);
    const double frob2 = operator_norm(p.parts[i]) * operator_norm(p.parts[i]) + nq * nq +
                         nr * nr + operator_norm(s.parts[i]) * operator_norm(s.parts[i]);
    const double term = aq / 2.0 * (op + os + std::sqrt((op - os) * (op - os) +
                                                        (nr + nq) * (nr + nq))) +
                        sq * std::sqrt(frob2);
    upper_sq += term * term;
  }
  return {std::max(wp, ws), std::sqrt(upper_sq)};
}

// Assemble [[P_i, Q_i], [R_i, S_i]] into a 2n x 2n tuple.
inline OperatorTuple assemble_blocks(const OperatorTuple& p, const OperatorTuple& q,
                                     const OperatorTuple& r, const OperatorTuple& s) {
  std::vector<Mat> parts;
  const int n = p.n();
  for (int i = 0; i < p.d(); ++i) {
    Mat m(2 * n, 2 * n);
    m.topLeftCorner(n, n) = p.parts[i];
    m.topRightCorner(n, n) = q.parts[i];
    m.bottomLeftCorner(n, n) = r.parts[i];
    m.bottomRightCorner(n, n) = s.parts[i];
    parts.push_back(std::move(m));
  }
  return OperatorTuple(std::move(parts));
}

}  // namespace qrange

#endif
