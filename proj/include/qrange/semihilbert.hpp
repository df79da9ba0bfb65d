#ifndef QRANGE_SEMIHILBERT_HPP
#define QRANGE_SEMIHILBERT_HPP

#include "qrange/aspace.hpp"
#include "qrange/engine.hpp"

// W_{q,A} clouds (including the full-plane degenerate case), the q-A-radius
// on the compressed positive-definite problem, and the triangle-equality
// diagnostic.
namespace qrange {

struct FullPlaneCertificate {
  std::vector<double> kappas;
  std::vector<Cplx> values;  // grow without bound along the kappa schedule
  Vec kernel_witness;        // x1 in N(A) with P M x1 outside N(A)
};

struct QARangeResult {
  enum class Kind { Cloud, FullPlane } kind = Kind::Cloud;
  PointCloud cloud;
  FullPlaneCertificate certificate;
};

inline std::vector<double> default_kappa_schedule() {
  return {1.0, 10.0, 100.0, 1000.0, 10000.0};
}

namespace detail {

inline void check_qa_feasible(const ASpace& s, Cplx q) {
  check_q(q);
  if (!q_is_unimodular(q) && s.rank < 2)
    throw ConstraintError("W_{q,A}: infeasible, rank(A) <= 1 with |q| < 1");
}

}  // namespace detail

inline QARangeResult cloud_qa(const Mat& m, const ASpace& s, Cplx q, int count,
                              std::uint64_t seed,
                              const std::vector<double>& kappa_schedule = default_kappa_schedule()) {
  detail::check_qa_feasible(s, q);
  if (m.rows() != s.n()) throw std::invalid_argument("cloud_qa: dimension mismatch");
  QARangeResult res;
  if (kernel_escape(m, s)) {
    res.kind = QARangeResult::Kind::FullPlane;
    // Witness kernel direction with the largest projected image.
    Vec x1;
    double best = -1.0;
    for (int j = 0; j < s.kernel_basis.cols(); ++j) {
      const double v = (s.proj * m * s.kernel_basis.col(j)).norm();
      if (v > best) { best = v; x1 = s.kernel_basis.col(j); }
    }
    const Vec pmx = s.proj * m * x1;
    const double na = a_norm(s, pmx);
    const Vec y2 = pmx / na;
    // A-unit w in range(A), A-orthogonal to y2 (rank >= 2 guarantees one).
    Vec w;
    for (int j = 0; j < s.range_basis.cols(); ++j) {
      Vec cand = s.pinv_sqrtA * s.range_basis.col(j);
      cand -= a_inner(s, cand, y2) * y2;
      const double nc = a_norm(s, cand);
      if (nc > 1e-8) { w = cand / nc; break; }
    }
    const double sq = std::sqrt(std::max(0.0, 1.0 - std::norm(q)));
    const Vec x2 = q * y2 + sq * w;
    res.certificate.kernel_witness = x1;
    for (double kappa : kappa_schedule) {
      const Vec x = kappa * x1 + x2;
      res.certificate.kappas.push_back(kappa);
      res.certificate.values.push_back(a_inner(s, m * x, y2));
    }
    return res;
  }
  const auto pairs = sample_sq_a(s, q, count, seed);
  res.cloud.d = 1;
  res.cloud.points.reserve(pairs.size());
  for (const SqPair& p : pairs) {
    Vec pt(1);
    pt(0) = a_inner(s, m * p.x, p.y());
    res.cloud.points.push_back(std::move(pt));
  }
  res.cloud.meta = {s.n(), q, seed, count, "qa-range"};
  return res;
}

struct QARadius {
  bool infinite = false;
  RadiusEstimate estimate;  // valid when not infinite; witness is ambient
};

// w_{q,A} via the compressed problem: with A' = A restricted to range(A) and
// T' the compression of P M, W_{q,A'}(T') = W_q(A'^(1/2) T' A'^(-1/2)).
inline QARadius radius_qa(const Mat& m, const ASpace& s, Cplx q,
                          const RadiusOptions& opts = {}) {
  detail::check_qa_feasible(s, q);
  if (kernel_escape(m, s)) return QARadius{true, {}};
  const Compression c = compress_to_range(m, s);
  Eigen::SelfAdjointEigenSolver<Mat> es(c.Aprime);
  const Eigen::VectorXd ev = es.eigenvalues();
  const Mat v = es.eigenvectors();
  const Mat half = v * ev.cwiseSqrt().asDiagonal() * v.adjoint();
  const Mat ihalf = v * ev.cwiseSqrt().cwiseInverse().asDiagonal() * v.adjoint();
  const Mat equiv = half * c.Tprime * ihalf;
  RadiusEstimate est = radius_joint(OperatorTuple(equiv), q, opts);
  // Transport the witness back to the ambient space.
  SqPair amb;
  amb.q = q;
  amb.x = c.basis * (ihalf * est.witness.x);
  if (est.witness.z) amb.z = c.basis * (ihalf * *est.witness.z);
  est.witness = std::move(amb);
  return QARadius{false, std::move(est)};
}

struct TriangleGap {
  double gap = 0.0;        // wT + wS - wSum, nonnegative up to optimizer noise
  double cross_sup = 0.0;  // max Re(<y,Tx>_A <Sx,y>_A) over evaluated pairs
  double wT = 0.0, wS = 0.0, wSum = 0.0;
};

inline TriangleGap triangle_equality_gap(const Mat& mt, const Mat& ms, const ASpace& s,
                                         Cplx q, const RadiusOptions& opts = {},
                                         int cross_samples = 2000) {
  if (kernel_escape(mt, s) || kernel_escape(ms, s))
    throw std::invalid_argument("triangle_equality_gap: kernel-escaping operand");
  const Mat msum = mt + ms;
  const QARadius rt = radius_qa(mt, s, q, opts);
  const QARadius rs = radius_qa(ms, s, q, opts);
  const QARadius rsum = radius_qa(msum, s, q, opts);
  auto val = [&](const Mat& m, const SqPair& p) {
    return std::abs(a_inner(s, m * p.x, p.y()));
  };
  // The same feasible samples floor all three radii. This keeps the
  // diagnostic self-consistent: every pair entering cross_sup is also a
  // candidate for the radii, so cross_sup cannot exceed what they admit.
  const std::vector<SqPair> samples = sample_sq_a(s, q, cross_samples, opts.seed);
  TriangleGap g;
  g.wT = rt.estimate.value;
  g.wS = rs.estimate.value;
  g.wSum = rsum.estimate.value;
  for (const SqPair& p : samples) {
    g.wT = std::max(g.wT, val(mt, p));
    g.wS = std::max(g.wS, val(ms, p));
    g.wSum = std::max(g.wSum, val(msum, p));
  }
  g.gap = g.wT + g.wS - g.wSum;
  auto cross_at = [&](const SqPair& p) {
    const Vec y = p.y();
    const Cplx a = a_inner(s, mt * p.x, y);  // <Tx, y>_A
    const Cplx b = a_inner(s, ms * p.x, y);  // <Sx, y>_A
    return (std::conj(a) * b).real();        // Re(<y,Tx>_A <Sx,y>_A)
  };
  g.cross_sup = std::max({cross_at(rt.estimate.witness), cross_at(rs.estimate.witness),
                          cross_at(rsum.estimate.witness)});
  for (const SqPair& p : samples) g.cross_sup = std::max(g.cross_sup, cross_at(p));
  return g;
}

}  // namespace qrange

#endif
