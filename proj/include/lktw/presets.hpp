#pragma once

// Analytic curves and ribbons used by the examples, the CLI and the tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <utility>

#include "lktw/curves.hpp"

namespace lktw::presets {

namespace detail {

inline constexpr double two_pi = 2 * std::numbers::pi;

template <Model M, class F>
PointList<M> sample(int n, F&& f) {
  if (n < 8) throw geometry_error("presets need at least 8 samples");
  PointList<M> p(n);
  for (int j = 0; j < n; ++j) p[j] = f(two_pi * j / n);
  return p;
}

}  // namespace detail

/// Great circle (cos s, sin s, 0, 0) on S3.
inline ClosedCurve<Sphere3> great_circle(int n) {
  using V = Sphere3::vec;
  return ClosedCurve<Sphere3>::from_parametrization(
      detail::sample<Sphere3>(n, [](double s) -> V { return V(std::cos(s), std::sin(s), 0, 0); }), detail::two_pi);
}

/// Great circle with the left-invariant normal v(s) = (0, 0, cos s, sin s).
inline Ribbon<Sphere3> hopf_ribbon(int n, double eps) {
  using V = Sphere3::vec;
  auto v = detail::sample<Sphere3>(n, [](double s) -> V { return V(0, 0, std::cos(s), std::sin(s)); });
  return Ribbon<Sphere3>(NormalField<Sphere3>(great_circle(n), std::move(v)), eps);
}

/// Two orthogonal fibres of the Hopf fibration, linking number 1.
inline std::pair<ClosedCurve<Sphere3>, ClosedCurve<Sphere3>> hopf_pair(int n) {
  using V = Sphere3::vec;
  auto y = detail::sample<Sphere3>(n, [](double t) -> V { return V(0, 0, std::cos(t), std::sin(t)); });
  return {great_circle(n), ClosedCurve<Sphere3>::from_parametrization(y, detail::two_pi)};
}

inline std::pair<ClosedCurve<Sphere3>, ClosedCurve<Sphere3>> hopf_pair_reversed(int n) {
  auto p = hopf_pair(n);
  return {p.first, p.second.reversed()};
}

/// Geodesic circle of radius r about the model origin, in the (e_a, e_b)
/// coordinate plane, optionally moved along e_c by distance shift.
template <Model M>
ClosedCurve<M> small_circle(int n, double r, int a, int b, int c = -1, double shift = 0.0) {
  using V = vec_t<M>;
  auto pts = detail::sample<M>(n, [&](double s) -> V {
    V u = V::Zero();
    u[a] = std::cos(s);
    u[b] = std::sin(s);
    V p = exp_pushoff<M>(M::origin(), u, r);
    if (c >= 0 && shift != 0.0) {
      V w = V::Zero();
      w[c] = 1.0;
      if constexpr (M::space == Space::Euclidean) {
        p += shift * w;
      } else if constexpr (M::space == Space::Sphere3) {
        // rotation by shift in the (e0, e_c) plane
        const double p0 = p[0], pc = p[c];
        p[0] = std::cos(shift) * p0 - std::sin(shift) * pc;
        p[c] = std::sin(shift) * p0 + std::cos(shift) * pc;
      } else {
        // boost by shift in the (e0, e_c) plane
        const double p0 = p[0], pc = p[c];
        p[0] = std::cosh(shift) * p0 + std::sinh(shift) * pc;
        p[c] = std::sinh(shift) * p0 + std::cosh(shift) * pc;
      }
    }
    return p;
  });
  return ClosedCurve<M>::from_parametrization(pts, detail::two_pi);
}

/// Two small unlinked circles, well separated.
template <Model M>
std::pair<ClosedCurve<M>, ClosedCurve<M>> split_pair(int n) {
  const int c = M::dim == 3 ? 2 : 3;
  const int a = M::dim == 3 ? 0 : 1;
  const int b = M::dim == 3 ? 1 : 2;
  return {small_circle<M>(n, 0.3, a, b, c, -0.8), small_circle<M>(n, 0.3, a, b, c, 0.8)};
}

/// Circle (sqrt 2, cos s, sin s, 0) in H3 with the normal field
/// (cos s / sqrt 2, cos^2 s, cos s sin s, sin s) / sqrt(1 - cos^2 s / 2).
inline Ribbon<Hyperbolic3> h3_circle_ribbon(int n, double eps) {
  using V = Hyperbolic3::vec;
  const double r2 = std::sqrt(2.0);
  auto x = detail::sample<Hyperbolic3>(n, [&](double s) -> V { return V(r2, std::cos(s), std::sin(s), 0); });
  auto v = detail::sample<Hyperbolic3>(n, [&](double s) -> V {
    const double c = std::cos(s), sn = std::sin(s);
    return V(c / r2, c * c, c * sn, sn) / std::sqrt(1.0 - 0.5 * c * c);
  });
  auto curve = ClosedCurve<Hyperbolic3>::from_parametrization(x, detail::two_pi);
  return Ribbon<Hyperbolic3>(NormalField<Hyperbolic3>(curve, std::move(v)), eps);
}

/// Unit circle in the xy-plane of R3.
inline ClosedCurve<Euclidean3> r3_circle(int n) {
  using V = Euclidean3::vec;
  return ClosedCurve<Euclidean3>::from_parametrization(
      detail::sample<Euclidean3>(n, [](double s) -> V { return V(std::cos(s), std::sin(s), 0); }), detail::two_pi);
}

/// Unit circle in R3 whose normal turns `turns` times around it; the twist
/// equals `turns`.
inline Ribbon<Euclidean3> r3_circle_ribbon(int n, double eps, int turns) {
  using V = Euclidean3::vec;
  auto v = detail::sample<Euclidean3>(n, [&](double s) -> V {
    const double c = std::cos(turns * s), sn = std::sin(turns * s);
    return V(c * std::cos(s), c * std::sin(s), -sn);
  });
  return Ribbon<Euclidean3>(NormalField<Euclidean3>(r3_circle(n), std::move(v)), eps);
}

/// Options for random smooth ribbons: a base circle perturbed by a few
/// Fourier modes, and a random smooth normal field.
struct RandomRibbonOptions {
  int modes = 3;
  double amplitude = 0.15;
  double width = 0.1;
};

/// Random smooth ribbon on any model, reproducible from the seed.
template <Model M>
Ribbon<M> random_ribbon(std::uint64_t seed, int n, const RandomRibbonOptions& opt = {}) {
  using V = vec_t<M>;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  auto rand_vec = [&] {
    V v;
    for (int i = 0; i < M::dim; ++i) v[i] = g(rng);
    return v;
  };
  // Oversampled raw curve, redrawn while its speed comes close to zero, then
  // arclength resampling down to n points.
  const int raw_n = std::max(4 * n, 256);
  std::vector<V> cc(opt.modes), cs(opt.modes);
  PointList<M> raw;
  for (int attempt = 0;; ++attempt) {
    for (int k = 0; k < opt.modes; ++k) {
      cc[k] = rand_vec() * opt.amplitude / (k + 1);
      cs[k] = rand_vec() * opt.amplitude / (k + 1);
    }
    raw = detail::sample<M>(raw_n, [&](double s) -> V {
      V u = V::Zero();
      const int a = M::space == Space::Sphere3 ? 0 : M::dim - 3;
      u[a] = std::cos(s);
      u[a + 1] = std::sin(s);
      for (int k = 0; k < opt.modes; ++k) u += cc[k] * std::cos((k + 2) * s) + cs[k] * std::sin((k + 1) * s);
      if constexpr (M::space == Space::Sphere3) {
        return V(u / u.norm());
      } else if constexpr (M::space == Space::Hyperbolic3) {
        u[0] = 0.0;
        u[0] = std::sqrt(1.0 + u.squaredNorm());
        return u;
      } else {
        return u;
      }
    });
    double lo = std::numeric_limits<double>::infinity(), total = 0.0;
    for (int j = 0; j < raw_n; ++j) {
      const double d = M::distance(raw[j], raw[(j + 1) % raw_n]);
      lo = std::min(lo, d);
      total += d;
    }
    if (lo > 0.5 * total / raw_n || attempt == 1000) break;
  }
  const ClosedCurve<M> curve = ClosedCurve<M>::from_samples(raw).arclength_resampled(n);

  // Redraw the normal coefficients until the projection onto the normal
  // plane stays well away from zero, so the normal field is smooth.
  PointList<M> v(n);
  for (int attempt = 0;; ++attempt) {
    const V w0 = rand_vec(), w1 = 0.3 * rand_vec(), w2 = 0.3 * rand_vec();
    double smallest = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      const double s = detail::two_pi * j / n;
      v[j] = w0 + w1 * std::cos(s) + w2 * std::sin(2 * s);
      const V& x = curve.point(j);
      const V T = curve.tangent(j);
      V w = M::project_tangent(x, v[j]);
      w -= M::dot(w, T) * T;
      smallest = std::min(smallest, M::norm(w) / v[j].norm());
    }
    if (smallest > 0.6 || attempt == 1000) break;
  }
  return Ribbon<M>(NormalField<M>(curve, std::move(v)), opt.width);
}

}  // namespace lktw::presets
