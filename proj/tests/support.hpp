#pragma once

// Random inputs and independent reference implementations for the tests.

#include <Eigen/Core>
#include <Eigen/LU>

#include <cmath>
#include <numbers>
#include <random>

#include "lktw/lktw.hpp"

namespace testing_support {

using lktw::vec_t;
inline constexpr double pi = std::numbers::pi;

template <lktw::Model M>
struct Random {
  std::mt19937_64 rng;
  std::normal_distribution<double> g{0.0, 1.0};
  explicit Random(std::uint64_t seed) : rng(seed) {}

  vec_t<M> gauss() {
    vec_t<M> v;
    for (int i = 0; i < M::dim; ++i) v[i] = g(rng);
    return v;
  }
  vec_t<M> point(double scale = 1.0) {
    vec_t<M> v = gauss();
    if constexpr (M::space == lktw::Space::Sphere3) {
      return v / v.norm();
    } else if constexpr (M::space == lktw::Space::Hyperbolic3) {
      v[0] = 0.0;
      v *= scale;
      v[0] = std::sqrt(1.0 + v.squaredNorm());
      return v;
    } else {
      return scale * v;
    }
  }
  vec_t<M> tangent(const vec_t<M>& x) { return M::project_tangent(x, gauss()); }
  vec_t<M> unit_tangent(const vec_t<M>& x) {
    const vec_t<M> v = tangent(x);
    return v / M::norm(v);
  }
};

// Closed-form kernels written out independently of the library.
inline double phi_ref(lktw::KernelKind k, double a) {
  switch (k) {
    case lktw::KernelKind::Euclidean: return 1.0 / (4 * pi * a);
    case lktw::KernelKind::SphereLeft: return (pi - a) / std::tan(a) / (4 * pi * pi);
    case lktw::KernelKind::SphereParallel: return (pi - a) / std::sin(a) / (4 * pi * pi);
    case lktw::KernelKind::Hyperbolic: return 1.0 / std::sinh(a) / (4 * pi);
  }
  return 0.0;
}

template <class F>
double central_diff(F&& f, double a, double h) {
  return (f(a + h) - f(a - h)) / (2 * h);
}

template <class F>
double second_diff(F&& f, double a, double h) {
  return (f(a + h) - 2 * f(a) + f(a - h)) / (h * h);
}

/// Linking integrand composed literally: (P_yx dx) x dy . grad_y phi.
template <lktw::Model M>
double composed_linking_integrand(lktw::Format format, const vec_t<M>& x, const vec_t<M>& dx, const vec_t<M>& y,
                                  const vec_t<M>& dy) {
  const lktw::KernelFamily fam{M::space, format};
  const double a = M::distance(x, y);
  const vec_t<M> grad = lktw::phi_prime(fam, a) * M::grad_alpha(x, y);
  if constexpr (M::space == lktw::Space::Euclidean) {
    return dx.cross(dy).dot(grad);
  } else {
    vec_t<M> moved;
    if constexpr (M::space == lktw::Space::Sphere3) {
      if (format == lktw::Format::LeftTranslation) {
        moved = lktw::left_translate(x, y, dx);
        const vec_t<M> c = M::cross(y, moved, dy);
        return M::dot(c, grad) - moved.dot(dy) / (4 * pi * pi);
      }
    }
    moved = M::transport(y, x, dx);
    return M::dot(M::cross(y, moved, dy), grad);
  }
}

/// Biot-Savart contribution composed literally: P_yx v x grad_y phi0.
template <lktw::Model M>
vec_t<M> composed_bs(const vec_t<M>& x, const vec_t<M>& v, const vec_t<M>& y) {
  const lktw::KernelFamily fam{M::space, M::space == lktw::Space::Euclidean ? lktw::Format::EuclideanStandard
                                                                          : lktw::Format::ParallelTransport};
  const double a = M::distance(x, y);
  const vec_t<M> grad = lktw::phi0_prime(fam, a) * M::grad_alpha(x, y);
  return M::cross(y, M::transport(y, x, v), grad);
}

/// Biot-Savart field at sample j by the composed formula, same exclusion rule.
template <lktw::Model M>
vec_t<M> composed_bs_at_sample(const lktw::FieldSample<M>& f, int j) {
  vec_t<M> r = vec_t<M>::Zero();
  for (int i = 0; i < f.size(); ++i) {
    if (i == j) continue;
    const double a = M::distance(f.points[i], f.points[j]);
    if (a <= f.exclusion_radius) continue;
    r += f.weights[i] * composed_bs<M>(f.points[i], f.vectors[i], f.points[j]);
  }
  return r;
}

/// Full 4x4 determinant through Eigen's LU, for checking det4 and triple.
inline double det_lu(const Eigen::Vector4d& a, const Eigen::Vector4d& b, const Eigen::Vector4d& c,
                     const Eigen::Vector4d& d) {
  Eigen::Matrix4d m;
  m.row(0) = a;
  m.row(1) = b;
  m.row(2) = c;
  m.row(3) = d;
  return m.determinant();
}

}  // namespace testing_support
