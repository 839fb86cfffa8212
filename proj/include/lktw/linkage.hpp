#pragma once

// Linking, writhing and twisting integrals of curves and ribbons, evaluated
// with the periodic trapezoid rule.
//
// The linking integrand is used in determinant form. With w(a) = phi'(a)
// divided by the radial sine,
//   parallel, S3 and H3:   -w det(y, y', x, x')
//   R3:                     w (x' x y') . (y - x)
//   left, S3:              -w det(y, Lx', y', x) - <Lx', y'> / (4 pi^2)
// where Lx' = (y x^{-1}) x' is left translation of x' to y.

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lktw/curves.hpp"
#include "lktw/errors.hpp"
#include "lktw/geometry.hpp"
#include "lktw/kernels.hpp"
#include "lktw/summation.hpp"

namespace lktw {

enum class DiagonalPolicy { SkipDiagonalNodes };

struct QuadratureConfig {
  int n_outer = 256;
  int n_inner = 256;
  DiagonalPolicy diagonal_policy = DiagonalPolicy::SkipDiagonalNodes;
  /// Width ratio used by epsilon_independence.
  double epsilon_check = 0.5;
  /// Requested accuracy of the writhe; below 1e-4 it is Richardson-extrapolated.
  double tolerance = 1e-6;
  /// Worker threads; 0 uses every hardware thread.
  int threads = 1;

  void validate() const {
    for (int n : {n_outer, n_inner})
      if (n < 32 || n % 2 != 0) throw input_error("quadrature node counts must be even and at least 32");
    if (!(epsilon_check > 0.0)) throw input_error("epsilon_check must be positive");
    if (!(tolerance > 0.0)) throw input_error("tolerance must be positive");
  }
};

struct LtwReport {
  double lk = 0.0;
  long lk_rounded = 0;
  double tw = 0.0;
  double wr = 0.0;
  double residual = 0.0;
  Format format = Format::ParallelTransport;
  double length = 0.0;
};

inline constexpr double kMinCurveSeparation = 1e-6;

namespace linkage_detail {

inline constexpr double kLeftConstant = 1.0 / (4 * std::numbers::pi * std::numbers::pi);

/// Singular and smooth parts of the linking integrand at one node pair.
struct PairTerms {
  double singular = 0.0;
  double smooth = 0.0;
  double alpha = 0.0;
};

template <Model M>
PairTerms pair_terms(const KernelFamily& fam, KernelKind kind, const vec_t<M>& x, const vec_t<M>& dx,
                     const vec_t<M>& y, const vec_t<M>& dy) {
  PairTerms t;
  t.alpha = M::distance(x, y);
  if (!(t.alpha > 0.0)) return t;
  const double w = phi_prime_over_sine(fam, t.alpha);
  if constexpr (M::space == Space::Euclidean) {
    t.singular = w * dx.cross(dy).dot(y - x);
  } else if constexpr (M::space == Space::Sphere3) {
    if (kind == KernelKind::SphereLeft) {
      const vec_t<M> lx = left_translate(x, y, dx);
      t.singular = -w * detail::det4(y, lx, dy, x);
      t.smooth = -kLeftConstant * lx.dot(dy);
    } else {
      t.singular = -w * detail::det4(y, dy, x, dx);
    }
  } else {
    t.singular = -w * detail::det4(y, dy, x, dx);
  }
  return t;
}

// Trapezoid sum over the grid (i, j) with nodes subsampled by `stride`;
// skip_diagonal drops the singular term where i == j.
template <Model M>
double double_sum(const KernelFamily& fam, const ClosedCurve<M>& a, const ClosedCurve<M>& b, int stride,
                  bool skip_diagonal, int threads, double* min_alpha) {
  const KernelKind kind = fam.kind();
  const int na = a.size() / stride, nb = b.size() / stride;
  std::vector<double> row_min(static_cast<std::size_t>(na), std::numeric_limits<double>::infinity());
  const double total = parallel_sum(na, threads, [&](int i) {
    const auto& x = a.point(i * stride);
    const auto& dx = a.velocity(i * stride);
    NeumaierSum s;
    double mn = std::numeric_limits<double>::infinity();
    for (int j = 0; j < nb; ++j) {
      const auto& y = b.point(j * stride);
      const auto& dy = b.velocity(j * stride);
      if (skip_diagonal && i == j) {
        if constexpr (M::space == Space::Sphere3) {
          if (kind == KernelKind::SphereLeft) s.add(-kLeftConstant * left_translate(x, y, dx).dot(dy));
        }
        continue;
      }
      const PairTerms t = pair_terms<M>(fam, kind, x, dx, y, dy);
      mn = std::min(mn, t.alpha);
      s.add(t.singular + t.smooth);
    }
    row_min[i] = mn;
    return s.value();
  });
  if (min_alpha) {
    double mn = std::numeric_limits<double>::infinity();
    for (double r : row_min) mn = std::min(mn, r);
    *min_alpha = mn;
  }
  return total * (a.step() * stride) * (b.step() * stride);
}

}  // namespace linkage_detail

/// Linking number of two disjoint closed curves.
template <Model M>
double linking_number(const ClosedCurve<M>& k1, const ClosedCurve<M>& k2, Format format,
                      const QuadratureConfig& cfg = {}) {
  cfg.validate();
  const KernelFamily fam{M::space, format};
  (void)fam.kind();
  const ClosedCurve<M> a = k1.resampled(cfg.n_outer);
  const ClosedCurve<M> b = k2.resampled(cfg.n_inner);
  double min_alpha = 0.0;
  const double lk = linkage_detail::double_sum<M>(fam, a, b, 1, false, cfg.threads, &min_alpha);
  if (!(min_alpha > kMinCurveSeparation)) throw geometry_error("curves intersect: linking number undefined");
  return lk;
}

/// Writhe of a simple closed curve.
template <Model M>
double writhe(const ClosedCurve<M>& k, Format format, const QuadratureConfig& cfg = {}) {
  cfg.validate();
  const KernelFamily fam{M::space, format};
  (void)fam.kind();
  if (k.self_intersection_warning()) throw geometry_error("curve is not simple: writhe undefined");
  const ClosedCurve<M> c = k.resampled(cfg.n_outer);
  if (c.self_intersection_warning()) throw geometry_error("curve is not simple: writhe undefined");
  const double w1 = linkage_detail::double_sum<M>(fam, c, c, 1, true, cfg.threads, nullptr);
  if (cfg.tolerance >= 1e-4) return w1;
  const double w2 = linkage_detail::double_sum<M>(fam, c, c, 2, true, cfg.threads, nullptr);
  return (4 * w1 - w2) / 3;
}

/// Twist (1/2 pi) integral of T x v . v' with the covariant (parallel) or
/// left-invariant (left) derivative of the normal field.
template <Model M>
double twist(const NormalField<M>& field, Format format, const QuadratureConfig& cfg = {}) {
  cfg.validate();
  const KernelFamily fam{M::space, format};
  const KernelKind kind = fam.kind();
  const NormalField<M> f = field.resampled(cfg.n_outer);
  const auto& c = f.curve();
  NeumaierSum s;
  for (int i = 0; i < f.size(); ++i) {
    const auto T = c.tangent(i);
    const auto dv = kind == KernelKind::SphereLeft ? f.left_invariant_derivative(i) : f.covariant_derivative(i);
    s.add(M::triple(c.point(i), T, f.vector(i), dv));
  }
  return s.value() * c.step() / (2 * std::numbers::pi);
}

/// Linking number of the ribbon edges, twist of its normal field and writhe
/// of its base curve in one format.
template <Model M>
LtwReport ltw_verify(const Ribbon<M>& ribbon, Format format, const QuadratureConfig& cfg = {}) {
  LtwReport r;
  r.format = format;
  r.lk = linking_number(ribbon.base(), ribbon.edge(), format, cfg);
  r.lk_rounded = std::lround(r.lk);
  r.tw = twist(ribbon.normal(), format, cfg);
  r.wr = writhe(ribbon.base(), format, cfg);
  r.residual = r.lk - r.tw - r.wr;
  r.length = ribbon.base().length();
  return r;
}

/// Linking numbers of the ribbon edges at its width and at width * epsilon_check.
template <Model M>
std::pair<double, double> epsilon_independence(const Ribbon<M>& ribbon, Format format,
                                               const QuadratureConfig& cfg = {}) {
  const double a = linking_number(ribbon.base(), ribbon.edge(), format, cfg);
  const Ribbon<M> narrow = ribbon.with_width(ribbon.width() * cfg.epsilon_check);
  const double b = linking_number(narrow.base(), narrow.edge(), format, cfg);
  return {a, b};
}

}  // namespace lktw
