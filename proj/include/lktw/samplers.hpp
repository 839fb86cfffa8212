#pragma once

// Quadrature samplings of geodesic balls and of the whole of S3, and the
// smooth test fields placed on them.

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "lktw/fields.hpp"
#include "lktw/geometry.hpp"

namespace lktw::samplers {

namespace detail {

// Gauss-Legendre nodes and weights on [-1, 1].
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = z;
    w[i] = 2.0 / ((1 - z * z) * dp * dp);
  }
}

// Point at geodesic distance r from the model origin in unit direction u
// (a vector of R3 embedded in the origin's tangent space).
template <Model M>
vec_t<M> exp_origin(const Eigen::Vector3d& u, double r) {
  if constexpr (M::dim == 3) {
    return r * u;
  } else {
    vec_t<M> v(0.0, u[0], u[1], u[2]);
    if constexpr (M::space == Space::Sphere3) {
      return std::cos(r) * M::origin() + std::sin(r) * v;
    } else {
      return std::cosh(r) * M::origin() + std::sinh(r) * v;
    }
  }
}

// Tangent vector at p obtained by parallel transport of the origin tangent
// vector (0, V) along the geodesic from the origin.
template <Model M>
vec_t<M> transport_from_origin(const vec_t<M>& p, const Eigen::Vector3d& V) {
  if constexpr (M::dim == 3) {
    return V;
  } else {
    const vec_t<M> v(0.0, V[0], V[1], V[2]);
    return M::transport(p, M::origin(), v);
  }
}

}  // namespace detail

/// Product grid on the geodesic ball of radius R about the model origin:
/// nr radial shells (points at shell midpoints, weights the exact shell
/// volumes), Gauss-Legendre in cos(theta), uniform in the azimuth. The
/// exclusion radius is half the radial step. Vectors are zero.
template <Model M>
FieldSample<M> ball_grid(double R, int nr = 20, int ntheta = 12, int nphi = 24) {
  check_radius(M::space, R);
  if (nr < 1 || ntheta < 1 || nphi < 1) throw input_error("ball grid counts must be positive");
  std::vector<double> ct, wt;
  detail::gauss_legendre(ntheta, ct, wt);
  FieldSample<M> f;
  const double dr = R / nr;
  for (int k = 0; k < nr; ++k) {
    const double r0 = k * dr, r1 = (k + 1) * dr, r = 0.5 * (r0 + r1);
    const double shell = ball_volume(M::space, r1) - (k == 0 ? 0.0 : ball_volume(M::space, r0));
    for (int a = 0; a < ntheta; ++a) {
      const double st = std::sqrt(std::max(0.0, 1 - ct[a] * ct[a]));
      for (int b = 0; b < nphi; ++b) {
        const double ph = 2 * std::numbers::pi * (b + 0.5 * (k % 2)) / nphi;
        const Eigen::Vector3d u(st * std::cos(ph), st * std::sin(ph), ct[a]);
        f.points.push_back(detail::exp_origin<M>(u, r));
        f.vectors.push_back(vec_t<M>::Zero());
        f.weights.push_back(shell * wt[a] / 2 / nphi);
      }
    }
  }
  f.exclusion_radius = 0.5 * dr;
  return f;
}

/// Random smooth field on the ball of radius R about the origin: the curl,
/// in normal coordinates, of b(r) (c + A xi) with b = (1 - r^2/R^2)^3,
/// carried to each sample point by parallel transport from the origin.
template <Model M>
std::vector<vec_t<M>> random_ball_field(const FieldSample<M>& grid, double R, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::Vector3d c;
  Eigen::Matrix3d A;
  for (int i = 0; i < 3; ++i) c[i] = g(rng);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) A(i, j) = g(rng) / R;
  // curl(A xi)_i = eps_ijk A_kj
  const Eigen::Vector3d curlA(A(2, 1) - A(1, 2), A(0, 2) - A(2, 0), A(1, 0) - A(0, 1));
  std::vector<vec_t<M>> out(grid.points.size());
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    const vec_t<M>& p = grid.points[i];
    Eigen::Vector3d xi;
    double r;
    if constexpr (M::dim == 3) {
      xi = p;
      r = xi.norm();
    } else {
      r = M::distance(M::origin(), p);
      const Eigen::Vector3d tail(p[1], p[2], p[3]);
      const double tn = tail.norm();
      xi = tn > 0 ? Eigen::Vector3d(tail * (r / tn)) : Eigen::Vector3d::Zero();
    }
    const double q = 1 - r * r / (R * R);
    Eigen::Vector3d V = Eigen::Vector3d::Zero();
    if (q > 0) {
      const double b = q * q * q;
      const Eigen::Vector3d grad_b = (-6.0 / (R * R)) * q * q * xi;
      V = grad_b.cross(c + A * xi) + b * curlA;
    }
    out[i] = detail::transport_from_origin<M>(p, V);
  }
  return out;
}

/// Sampling of all of S3 in Hopf coordinates
///   x = (cos eta cos xi1, cos eta sin xi1, sin eta cos xi2, sin eta sin xi2),
/// eta in [0, pi/2] at cell midpoints with exact cell volumes, xi1 and xi2
/// uniform. Rotations of xi1 and xi2 by grid steps map the sampling to itself.
struct HopfGrid {
  FieldSample<Sphere3> sample;
  int n_eta = 0, n_xi1 = 0, n_xi2 = 0;
  /// First sample of each eta row, and the total weight of that row.
  std::vector<int> row_representatives;
  std::vector<double> row_weights;
};

inline HopfGrid hopf_grid(int n_eta, int n_xi1, int n_xi2) {
  if (n_eta < 1 || n_xi1 < 1 || n_xi2 < 1) throw input_error("Hopf grid counts must be positive");
  HopfGrid h;
  h.n_eta = n_eta;
  h.n_xi1 = n_xi1;
  h.n_xi2 = n_xi2;
  auto& f = h.sample;
  const double d_eta = std::numbers::pi / 2 / n_eta;
  const double d1 = 2 * std::numbers::pi / n_xi1, d2 = 2 * std::numbers::pi / n_xi2;
  for (int a = 0; a < n_eta; ++a) {
    const double e0 = a * d_eta, e1 = (a + 1) * d_eta, eta = 0.5 * (e0 + e1);
    // integral of sin(eta) cos(eta) over the cell
    const double cell = 0.5 * (std::sin(e1) * std::sin(e1) - std::sin(e0) * std::sin(e0));
    const double w = cell * d1 * d2;
    h.row_representatives.push_back(f.size());
    h.row_weights.push_back(w * n_xi1 * n_xi2);
    for (int i = 0; i < n_xi1; ++i)
      for (int j = 0; j < n_xi2; ++j) {
        const double x1 = i * d1, x2 = j * d2;
        f.points.emplace_back(std::cos(eta) * std::cos(x1), std::cos(eta) * std::sin(x1),
                              std::sin(eta) * std::cos(x2), std::sin(eta) * std::sin(x2));
        f.vectors.push_back(Sphere3::vec::Zero());
        f.weights.push_back(w);
      }
  }
  f.exclusion_radius = 0.5 * std::max(d_eta, std::max(d1, d2));
  return h;
}

enum class HopfSide { Left, Right };

/// Unit Hopf field: i x (Left) or x i (Right), with i = (0, 1, 0, 0).
inline std::vector<Sphere3::vec> hopf_field(const FieldSample<Sphere3>& grid, HopfSide side) {
  const Sphere3::vec i(0, 1, 0, 0);
  std::vector<Sphere3::vec> v(grid.points.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = side == HopfSide::Left ? quat_mul(i, grid.points[k]) : quat_mul(grid.points[k], i);
  return v;
}

}  // namespace lktw::samplers
