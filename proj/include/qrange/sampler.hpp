#ifndef QRANGE_SAMPLER_HPP
#define QRANGE_SAMPLER_HPP

#include <optional>
#include <random>

#include "qrange/core.hpp"

// Sampling of the constraint set S_q(C^n): pairs (x, y) with
// |x| = |y| = 1 and <x, y> = q, parametrized by y = conj(q) x + sqrt(1-|q|^2) z
// with z a unit vector orthogonal to x (absent when |q| = 1).
namespace qrange {

enum class FieldMode { complex_field, real_field };

inline bool q_is_unimodular(Cplx q, double tol = 1e-12) {
  return std::abs(std::abs(q) - 1.0) <= tol;
}

struct SqPair {
  Vec x;
  std::optional<Vec> z;  // empty iff |q| = 1
  Cplx q;

  Vec y() const {
    Vec out = std::conj(q) * x;
    if (z) out += std::sqrt(std::max(0.0, 1.0 - std::norm(q))) * *z;
    return out;
  }
};

inline SqPair pair_from_xz(const Vec& x, const std::optional<Vec>& z, Cplx q,
                           double tol = 1e-10) {
  check_q(q);
  const double rx = std::abs(x.norm() - 1.0);
  if (rx > tol)
    throw ConstraintError("pair_from_xz: ||x|| = 1 violated, residual " + std::to_string(rx));
  if (!q_is_unimodular(q)) {
    if (!z) throw ConstraintError("pair_from_xz: z required when |q| < 1");
    const double rz = std::abs(z->norm() - 1.0);
    if (rz > tol)
      throw ConstraintError("pair_from_xz: ||z|| = 1 violated, residual " + std::to_string(rz));
    const double ro = std::abs(inner(x, *z));
    if (ro > tol)
      throw ConstraintError("pair_from_xz: <x,z> = 0 violated, residual " + std::to_string(ro));
    return SqPair{x, z, q};
  }
  return SqPair{x, std::nullopt, q};
}

namespace detail {

inline Vec gaussian_vector(int n, std::mt19937_64& rng, FieldMode mode) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) {
    const double re = g(rng);
    const double im = (mode == FieldMode::complex_field) ? g(rng) : 0.0;
    v(i) = Cplx(re, im);
  }
  return v;
}

inline Vec unit_sphere(int n, std::mt19937_64& rng, FieldMode mode) {
  for (;;) {
    Vec v = gaussian_vector(n, rng, mode);
    const double nv = v.norm();
    if (nv > 1e-8) return v / nv;
  }
}

// Unit phase of q, with the q = 0 convention phase = 1. Conjugating the raw z
// draw by this phase couples the streams for q and e^{i theta} q: x is shared
// and z picks up exactly the factor e^{-i theta}.
inline Cplx q_phase(Cplx q) {
  const double a = std::abs(q);
  return a < 1e-300 ? Cplx(1.0, 0.0) : q / a;
}

}  // namespace detail

inline std::vector<SqPair> sample_sq(int n, Cplx q, int count, std::uint64_t seed,
                                     FieldMode mode = FieldMode::complex_field) {
  check_q(q);
  if (count < 1) throw std::invalid_argument("sample_sq: count must be >= 1");
  const bool unimodular = q_is_unimodular(q);
  if (!unimodular && n < 2)
    throw ConstraintError("sample_sq: S_q(C^1) is empty for |q| < 1");
  if (mode == FieldMode::real_field && std::abs(q.imag()) > 1e-12)
    throw std::invalid_argument("sample_sq: real mode requires real q");

  std::mt19937_64 rng(seed);
  const Cplx zphase = std::conj(detail::q_phase(q));
  std::vector<SqPair> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c) {
    Vec x = detail::unit_sphere(n, rng, mode);
    if (unimodular) {
      out.push_back(SqPair{std::move(x), std::nullopt, q});
      continue;
    }
    // z: uniform on the unit sphere of the orthogonal complement of x.
    Vec z = detail::gaussian_vector(n, rng, mode);
    z -= inner(z, x) * x;
    const double nz = z.norm();
    if (nz < 1e-8) { --c; continue; }  // resample the degenerate draw
    z = (zphase / nz) * z;
    out.push_back(SqPair{std::move(x), std::move(z), q});
  }
  return out;
}

}  // namespace qrange

#endif
