#pragma once

// Vector fields sampled on a compact domain: Biot-Savart evaluation, helicity,
// energy, and the ball-radius bound N(R).
//
// Moving P_{yx} v(x) to y does not change its cross product with the distance
// gradient, since the correction is a multiple of x + y. The Biot-Savart
// contribution of a source (x, v) at y therefore reduces to
//   w(a) * cross(y, v, x)                 (S3, H3)
//   w(a) * v x (x - y)                    (R3)
// with w(a) = phi'(a) divided by the radial sine, which stays finite at the
// S3 antipode.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "lktw/errors.hpp"
#include "lktw/geometry.hpp"
#include "lktw/kernels.hpp"
#include "lktw/summation.hpp"

namespace lktw {

template <Model M>
struct FieldSample {
  using vec = vec_t<M>;

  std::vector<vec> points;
  std::vector<vec> vectors;
  std::vector<double> weights;
  bool divergence_free = false;
  /// Source-target pairs closer than this are left out of double sums.
  double exclusion_radius = 0.0;

  int size() const { return static_cast<int>(points.size()); }

  /// Checks lengths and weights, snaps points onto the model and vectors
  /// into the tangent spaces.
  void normalize() {
    if (vectors.size() != points.size() || weights.size() != points.size())
      throw input_error("field sample needs equally many points, vectors and weights");
    for (double w : weights)
      if (!(w > 0.0) || !std::isfinite(w)) throw input_error("field weights must be positive");
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (!points[i].allFinite() || !vectors[i].allFinite()) throw input_error("non-finite field data");
      if (M::membership_defect(points[i]) > 1e-6)
        throw geometry_error("field point is not a point of space " + std::string(to_string(M::space)));
      points[i] = M::project_point(points[i]);
      vectors[i] = M::project_tangent(points[i], vectors[i]);
    }
    if (exclusion_radius < 0.0) throw input_error("exclusion radius must be non-negative");
  }

  FieldSample with_vectors(std::vector<vec> v) const {
    FieldSample f = *this;
    f.vectors = std::move(v);
    return f;
  }
};

namespace field_detail {

inline constexpr double kSingularEvalTol = 1e-8;

// Biot-Savart contribution of the source (x, v) at y, without the weight.
template <Model M>
vec_t<M> bs_term(const KernelFamily& fam, const vec_t<M>& x, const vec_t<M>& v, const vec_t<M>& y, double a) {
  const double w = phi_prime_over_sine(fam, a);
  if constexpr (M::space == Space::Euclidean) {
    return w * v.cross(x - y);
  } else {
    return w * M::cross(y, v, x);
  }
}

template <Model M>
double helicity_term(KernelKind kind, const KernelFamily& fam, const vec_t<M>& x, const vec_t<M>& vx,
                     const vec_t<M>& y, const vec_t<M>& vy, double a) {
  const double w = phi_prime_over_sine(fam, a);
  if constexpr (M::space == Space::Euclidean) {
    return w * vx.cross(vy).dot(y - x);
  } else if constexpr (M::space == Space::Sphere3) {
    if (kind == KernelKind::SphereLeft) {
      const vec_t<M> lv = left_translate(x, y, vx);
      return -w * detail::det4(y, lv, vy, x) - lv.dot(vy) / (4 * std::numbers::pi * std::numbers::pi);
    }
    return w * detail::det4(y, vx, x, vy);
  } else {
    return w * detail::det4(y, vx, x, vy);
  }
}

}  // namespace field_detail

/// Biot-Savart field of the sample at an arbitrary point y (parallel format).
template <Model M>
vec_t<M> biot_savart_at(const FieldSample<M>& field, const vec_t<M>& y) {
  const KernelFamily fam{M::space, M::space == Space::Euclidean ? Format::EuclideanStandard
                                                                : Format::ParallelTransport};
  const vec_t<M> yy = M::project_point(y);
  vec_t<M> r = vec_t<M>::Zero();
  for (int i = 0; i < field.size(); ++i) {
    const double a = M::distance(field.points[i], yy);
    if (a < field_detail::kSingularEvalTol)
      throw geometry_error("Biot-Savart evaluated on a sample point");
    r += field.weights[i] * field_detail::bs_term<M>(fam, field.points[i], field.vectors[i], yy, a);
  }
  return r;
}

/// Biot-Savart field at sample j, leaving out sources within the exclusion radius.
template <Model M>
vec_t<M> biot_savart_at_sample(const FieldSample<M>& field, int j) {
  const KernelFamily fam{M::space, M::space == Space::Euclidean ? Format::EuclideanStandard
                                                                : Format::ParallelTransport};
  const auto& y = field.points[j];
  vec_t<M> r = vec_t<M>::Zero();
  for (int i = 0; i < field.size(); ++i) {
    if (i == j) continue;
    const double a = M::distance(field.points[i], y);
    if (a <= field.exclusion_radius || a == 0.0) continue;
    r += field.weights[i] * field_detail::bs_term<M>(fam, field.points[i], field.vectors[i], y, a);
  }
  return r;
}

/// Helicity double sum over sample pairs. The left format on S3 omits the
/// term that vanishes for divergence-free fields, so it requires that flag.
template <Model M>
double helicity(const FieldSample<M>& field, Format format, int threads = 1) {
  if (M::space == Space::Euclidean && format == Format::ParallelTransport) format = Format::EuclideanStandard;
  const KernelFamily fam{M::space, format};
  const KernelKind kind = fam.kind();
  if (kind == KernelKind::SphereLeft && !field.divergence_free)
    throw unsupported_format("left-format helicity needs a field flagged divergence-free");
  const int n = field.size();
  return parallel_sum(n, threads, [&](int j) {
    const auto& y = field.points[j];
    const auto& vy = field.vectors[j];
    NeumaierSum s;
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      const double a = M::distance(field.points[i], y);
      if (a <= field.exclusion_radius || a == 0.0) continue;
      s.add(field.weights[i] *
            field_detail::helicity_term<M>(kind, fam, field.points[i], field.vectors[i], y, vy, a));
    }
    return field.weights[j] * s.value();
  });
}

/// Helicity in the parallel format of several fields sharing one sampling;
/// the pair geometry is computed once for all of them.
template <Model M>
std::vector<double> helicity_batch(const FieldSample<M>& grid, const std::vector<std::vector<vec_t<M>>>& fields,
                                   int threads = 1) {
  const KernelFamily fam{M::space, M::space == Space::Euclidean ? Format::EuclideanStandard
                                                                : Format::ParallelTransport};
  const int n = grid.size();
  const int nf = static_cast<int>(fields.size());
  for (const auto& f : fields)
    if (static_cast<int>(f.size()) != n) throw input_error("field length differs from the sampling");
  // Row j accumulates the contributions of sources i < j; each unordered pair
  // appears twice in the full sum with equal values.
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(n));
  parallel_rows(n, threads, [&](int j) {
    const auto& y = grid.points[j];
    std::vector<NeumaierSum> s(static_cast<std::size_t>(nf));
    for (int i = 0; i < j; ++i) {
      const auto& x = grid.points[i];
      const double a = M::distance(x, y);
      if (a <= grid.exclusion_radius || a == 0.0) continue;
      const double ww = grid.weights[i] * phi_prime_over_sine(fam, a);
      if constexpr (M::space == Space::Euclidean) {
        const vec_t<M> d = y - x;
        for (int f = 0; f < nf; ++f) s[f].add(ww * fields[f][i].cross(fields[f][j]).dot(d));
      } else {
        for (int f = 0; f < nf; ++f) s[f].add(ww * detail::det4(y, fields[f][i], x, fields[f][j]));
      }
    }
    rows[j].resize(nf);
    for (int f = 0; f < nf; ++f) rows[j][f] = 2.0 * grid.weights[j] * s[f].value();
    return 0.0;
  });
  std::vector<double> out(static_cast<std::size_t>(nf));
  for (int f = 0; f < nf; ++f) {
    NeumaierSum t;
    for (int j = 0; j < n; ++j) t.add(rows[j][f]);
    out[f] = t.value();
  }
  return out;
}

/// Helicity from Biot-Savart values at representative samples, each standing
/// for `multiplicity` weight of targets related to it by a symmetry of the field.
template <Model M>
double helicity_from_representatives(const FieldSample<M>& field, const std::vector<int>& reps,
                                     const std::vector<double>& multiplicity, int threads = 1) {
  if (reps.size() != multiplicity.size()) throw input_error("representative and multiplicity counts differ");
  return parallel_sum(static_cast<int>(reps.size()), threads, [&](int r) {
    const int j = reps[r];
    return multiplicity[r] * M::dot(biot_savart_at_sample(field, j), field.vectors[j]);
  });
}

template <Model M>
double energy(const FieldSample<M>& field) {
  NeumaierSum s;
  for (int i = 0; i < field.size(); ++i) s.add(field.weights[i] * M::dot(field.vectors[i], field.vectors[i]));
  return s.value();
}

template <Model M>
double l2_norm(const FieldSample<M>& field) {
  return std::sqrt(energy(field));
}

template <Model M>
double inner_product(const FieldSample<M>& field, const std::vector<vec_t<M>>& a, const std::vector<vec_t<M>>& b) {
  NeumaierSum s;
  for (int i = 0; i < field.size(); ++i) s.add(field.weights[i] * M::dot(a[i], b[i]));
  return s.value();
}

// ---------------------------------------------------------------------------
// Balls and the bound N(R).

inline void check_radius(Space s, double R) {
  if (!(R > 0.0) || !std::isfinite(R)) throw domain_error("ball radius must be positive");
  if (s == Space::Sphere3 && R > std::numbers::pi) throw domain_error("ball radius on S3 must not exceed pi");
}

/// N(R): |BS(v)| <= N(R) |v| on domains of volume-equivalent radius R.
inline double bound_N(Space s, double R) {
  check_radius(s, R);
  switch (s) {
    case Space::Euclidean: return R;
    case Space::Sphere3:
      return (2 * (1 - std::cos(R)) + (std::numbers::pi - R) * std::sin(R)) / std::numbers::pi;
    case Space::Hyperbolic3: return std::sinh(R);
  }
  return 0.0;
}

/// Lower bound 1/N(R) on the absolute value of curl eigenvalues.
inline double curl_eigenvalue_lower_bound(Space s, double R) { return 1.0 / bound_N(s, R); }

inline double ball_volume(Space s, double R) {
  check_radius(s, R);
  switch (s) {
    case Space::Euclidean: return 4.0 / 3.0 * std::numbers::pi * R * R * R;
    case Space::Sphere3: return std::numbers::pi * (2 * R - std::sin(2 * R));
    case Space::Hyperbolic3: return std::numbers::pi * (std::sinh(2 * R) - 2 * R);
  }
  return 0.0;
}

/// Radius of the ball with the given volume, by bisection.
inline double equivalent_ball_radius(Space s, double vol) {
  if (!(vol > 0.0) || !std::isfinite(vol)) throw domain_error("volume must be positive");
  double lo = 0.0, hi = 1.0;
  if (s == Space::Sphere3) {
    const double total = 2 * std::numbers::pi * std::numbers::pi;
    if (vol > total * (1 + 1e-12)) throw domain_error("volume exceeds the volume of S3");
    hi = std::numbers::pi;
    if (vol >= total) return hi;
  } else {
    while (ball_volume(s, hi) < vol) hi *= 2;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (ball_volume(s, mid) < vol ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace lktw
