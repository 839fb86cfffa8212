#pragma once

// Closed curves, unit normal fields along them, and ribbons.
//
// A ClosedCurve stores N samples uniformly spaced in a periodic parameter of
// period P together with the parameter derivative at each sample. Curves built
// with from_samples are resampled so that the parameter is arclength (P = L);
// ribbon edges keep the parameter of their base curve.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "lktw/errors.hpp"
#include "lktw/geometry.hpp"
#include "lktw/spectral.hpp"

namespace lktw {

template <Model M>
using PointList = std::vector<vec_t<M>>;

namespace curve_detail {

template <Model M>
spectral::Samples to_matrix(const PointList<M>& pts) {
  spectral::Samples m(static_cast<Eigen::Index>(pts.size()), M::dim);
  for (std::size_t i = 0; i < pts.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = pts[i].transpose();
  return m;
}

template <Model M>
PointList<M> from_matrix(const spectral::Samples& m) {
  PointList<M> pts(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) pts[static_cast<std::size_t>(i)] = m.row(i).transpose();
  return pts;
}

// Derivative of the radial projection onto the model at an off-surface point X.
template <Model M>
vec_t<M> projected_velocity(const vec_t<M>& X, const vec_t<M>& dX) {
  if constexpr (M::dim == 3) {
    return dX;
  } else {
    const double q = M::inner(X, X);
    return (dX - (M::inner(X, dX) / q) * X) / std::sqrt(q);
  }
}

inline constexpr double kInputMembershipTol = 1e-6;

template <Model M>
vec_t<M> accept_point(const vec_t<M>& p) {
  if (!p.allFinite()) throw geometry_error("non-finite coordinate in curve sample");
  if (M::membership_defect(p) > kInputMembershipTol)
    throw geometry_error("sample is not a point of space " + std::string(to_string(M::space)));
  return M::project_point(p);
}

}  // namespace curve_detail

template <Model M>
class ClosedCurve {
 public:
  using vec = vec_t<M>;
  static constexpr double kSelfIntersectionTol = 1e-6;

  ClosedCurve() = default;

  /// Closed curve through the given points, in order, resampled to uniform
  /// arclength with the same number of samples (rounded up to even).
  static ClosedCurve from_samples(const PointList<M>& pts, int target_count = 0) {
    const int m = static_cast<int>(pts.size());
    if (m < 8) throw geometry_error("a closed curve needs at least 8 samples");
    PointList<M> p(pts.size());
    for (int i = 0; i < m; ++i) p[i] = curve_detail::accept_point<M>(pts[i]);
    for (int i = 0; i < m; ++i)
      if ((p[i] - p[(i + 1) % m]).norm() == 0.0) throw geometry_error("consecutive curve samples coincide");
    int n = std::max(target_count, m);
    n += n % 2;
    return arclength_resample(curve_detail::to_matrix<M>(p), n);
  }

  /// Curve sampled at uniform parameter values t_j = period * j / N. The
  /// derivative is taken spectrally unless supplied.
  static ClosedCurve from_parametrization(const PointList<M>& pts, double period,
                                          const PointList<M>* velocities = nullptr) {
    if (pts.size() < 8) throw geometry_error("a closed curve needs at least 8 samples");
    if (!(period > 0.0)) throw geometry_error("curve period must be positive");
    ClosedCurve c;
    c.period_ = period;
    c.x_ = pts;
    for (auto& p : c.x_) p = M::project_point(p);
    if (velocities) {
      if (velocities->size() != pts.size()) throw dimension_error("velocity count differs from sample count");
      c.dx_ = *velocities;
    } else {
      const spectral::Samples d = spectral::derivative(curve_detail::to_matrix<M>(c.x_)) * (2 * std::numbers::pi / period);
      c.dx_ = curve_detail::from_matrix<M>(d);
    }
    c.finish();
    return c;
  }

  int size() const { return static_cast<int>(x_.size()); }
  double period() const { return period_; }
  double step() const { return period_ / size(); }
  double parameter(int i) const { return period_ * i / size(); }
  double length() const { return length_; }
  bool is_arclength() const { return arclength_; }
  bool self_intersection_warning() const { return self_intersecting_; }
  double min_separation() const { return min_separation_; }

  const vec& point(int i) const { return x_[static_cast<std::size_t>(i)]; }
  /// Derivative with respect to the curve parameter.
  const vec& velocity(int i) const { return dx_[static_cast<std::size_t>(i)]; }
  vec tangent(int i) const { return velocity(i) / M::norm(velocity(i)); }
  const PointList<M>& points() const { return x_; }
  const PointList<M>& velocities() const { return dx_; }

  /// Point at parameter s by trigonometric interpolation, projected onto the model.
  vec point_at(double s) const {
    const Eigen::VectorXd r = interp().eval(to_angle(s));
    return M::project_point(vec(r));
  }

  /// Unit tangent at parameter s.
  vec derivative(double s) const {
    const double t = to_angle(s);
    const vec X = vec(interp().eval(t));
    const vec dX = vec(interp().eval(t, 1));
    const vec v = M::project_tangent(M::project_point(X), curve_detail::projected_velocity<M>(X, dX));
    return v / M::norm(v);
  }

  /// The same curve sampled at n uniform parameter values.
  ClosedCurve resampled(int n) const {
    if (n == size()) return *this;
    const spectral::Samples X = curve_detail::to_matrix<M>(x_);
    const double scale = 2 * std::numbers::pi / period_;
    PointList<M> pts = curve_detail::from_matrix<M>(spectral::resample(X, n));
    PointList<M> vel = curve_detail::from_matrix<M>(spectral::resample(X, n, 1) * scale);
    for (int i = 0; i < n; ++i) vel[i] = curve_detail::projected_velocity<M>(pts[i], vel[i]);
    return from_parametrization(pts, period_, &vel);
  }

  /// Reparametrized by arclength with n samples (n = 0 keeps the count).
  ClosedCurve arclength_resampled(int n = 0) const {
    if (n == 0) n = size();
    return arclength_resample(curve_detail::to_matrix<M>(x_), n);
  }

  ClosedCurve reversed() const {
    ClosedCurve c = *this;
    const int n = size();
    for (int i = 0; i < n; ++i) {
      const int j = (n - i) % n;
      c.x_[i] = x_[j];
      c.dx_[i] = -dx_[j];
    }
    c.interp_ = spectral::TrigInterpolant(curve_detail::to_matrix<M>(c.x_));
    return c;
  }

 private:
  double to_angle(double s) const { return 2 * std::numbers::pi * s / period_; }

  const spectral::TrigInterpolant& interp() const {
    return interp_;
  }

  static ClosedCurve arclength_resample(const spectral::Samples& P, int n) {
    constexpr double two_pi = 2 * std::numbers::pi;
    const int m = static_cast<int>(P.rows());
    const int fine = std::max(16 * m, 1024);
    const spectral::Samples Xf = spectral::resample(P, fine);
    const spectral::Samples dXf = spectral::resample(P, fine, 1);
    spectral::Samples speed(fine, 1);
    for (int j = 0; j < fine; ++j) {
      const vec X = Xf.row(j).transpose();
      const vec dX = dXf.row(j).transpose();
      speed(j, 0) = M::norm(curve_detail::projected_velocity<M>(X, dX));
    }
    if (!(speed.minCoeff() > 0.0)) throw geometry_error("curve has a stationary point and cannot be resampled");
    const spectral::TrigInterpolant sp(speed);
    const double mean_speed = speed.mean();
    const double L = two_pi * mean_speed;

    // s(t) = mean * t + integral of the zero-mean part of the speed.
    const spectral::TrigInterpolant sdev(spectral::Samples(speed.array() - mean_speed));
    auto arclength_at = [&](double t) { return mean_speed * t + sdev.integral(t)[0]; };

    const spectral::TrigInterpolant xi(P);
    PointList<M> pts(static_cast<std::size_t>(n));
    double t = 0.0;
    for (int j = 0; j < n; ++j) {
      const double target = L * j / n;
      for (int it = 0; it < 50; ++it) {
        const double f = arclength_at(t) - target;
        const double dt = f / sp.eval(t)[0];
        t -= dt;
        if (std::abs(dt) < 1e-15) break;
      }
      pts[static_cast<std::size_t>(j)] = M::project_point(vec(xi.eval(t)));
    }
    ClosedCurve c = from_parametrization(pts, L);
    return c;
  }

  void finish() {
    const int n = size();
    for (int i = 0; i < n; ++i) dx_[i] = M::project_tangent(x_[i], dx_[i]);
    double len = 0.0, max_dev = 0.0;
    for (int i = 0; i < n; ++i) {
      const double sp = M::norm(dx_[i]);
      if (!(sp > 0.0)) throw geometry_error("curve has a stationary point");
      len += sp;
      max_dev = std::max(max_dev, std::abs(sp - 1.0));
    }
    length_ = len * step();
    arclength_ = max_dev < 1e-6;
    min_separation_ = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
      for (int j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        min_separation_ = std::min(min_separation_, (x_[i] - x_[j]).norm());
      }
    self_intersecting_ = min_separation_ < kSelfIntersectionTol;
    interp_ = spectral::TrigInterpolant(curve_detail::to_matrix<M>(x_));
  }

  PointList<M> x_, dx_;
  double period_ = 0.0;
  double length_ = 0.0;
  double min_separation_ = 0.0;
  bool arclength_ = false;
  bool self_intersecting_ = false;
  spectral::TrigInterpolant interp_;
};

/// Unit normal field along a closed curve, one vector per sample.
template <Model M>
class NormalField {
 public:
  using vec = vec_t<M>;

  NormalField() = default;

  /// Vectors are made tangent to the space, orthogonal to the curve and unit.
  NormalField(ClosedCurve<M> curve, PointList<M> vectors) : curve_(std::move(curve)), v_(std::move(vectors)) {
    if (static_cast<int>(v_.size()) != curve_.size())
      throw dimension_error("normal field needs one vector per curve sample");
    for (int i = 0; i < curve_.size(); ++i) {
      const vec& x = curve_.point(i);
      const vec T = curve_.tangent(i);
      vec w = M::project_tangent(x, v_[i]);
      w -= M::dot(w, T) * T;
      const double n = M::norm(w);
      if (!(n > 1e-8)) throw geometry_error("normal vector is parallel to the curve or zero");
      w /= n;
      if ((w - v_[i]).norm() > 1e-15) v_[i] = w;
    }
    const spectral::Samples d =
        spectral::derivative(curve_detail::to_matrix<M>(v_)) * (2 * std::numbers::pi / curve_.period());
    dv_ = curve_detail::from_matrix<M>(d);
    if constexpr (M::space == Space::Sphere3) build_left();
  }

  const ClosedCurve<M>& curve() const { return curve_; }
  int size() const { return curve_.size(); }
  const vec& vector(int i) const { return v_[static_cast<std::size_t>(i)]; }
  const PointList<M>& vectors() const { return v_; }

  /// Ambient parameter derivative of v at sample i.
  const vec& ambient_derivative(int i) const { return dv_[static_cast<std::size_t>(i)]; }

  /// Covariant derivative of v along the curve parameter at sample i.
  vec covariant_derivative(int i) const { return M::project_tangent(curve_.point(i), dv_[static_cast<std::size_t>(i)]); }

  /// Left-invariant derivative x (x^{-1} v)' at sample i (S3 only).
  vec left_invariant_derivative(int i) const {
    if constexpr (M::space != Space::Sphere3) {
      throw unsupported_format("left-invariant derivative is only defined on S3");
    } else {
      return dvl_[static_cast<std::size_t>(i)];
    }
  }

  /// Covariant derivative at parameter s, by interpolation of the samples.
  vec covariant_derivative(double s) const {
    const auto& f = resampled_at(s);
    return f.covariant_derivative(0);
  }

  vec left_invariant_derivative(double s) const {
    const auto& f = resampled_at(s);
    return f.left_invariant_derivative(0);
  }

  vec vector_at(double s) const { return resampled_at(s).vector(0); }

  /// The field along the curve resampled at n uniform parameter values.
  NormalField resampled(int n) const {
    if (n == size()) return *this;
    const ClosedCurve<M> c = curve_.resampled(n);
    PointList<M> v = curve_detail::from_matrix<M>(spectral::resample(curve_detail::to_matrix<M>(v_), n));
    return NormalField(c, std::move(v));
  }

  NormalField reversed() const {
    const ClosedCurve<M> c = curve_.reversed();
    PointList<M> v(v_.size());
    const int n = size();
    for (int i = 0; i < n; ++i) v[i] = v_[(n - i) % n];
    return NormalField(c, std::move(v));
  }

 private:
  // A one-sample-shifted copy whose sample 0 sits at parameter s.
  NormalField resampled_at(double s) const {
    const int n = size();
    const double t = 2 * std::numbers::pi * s / curve_.period();
    spectral::TrigInterpolant xi(curve_detail::to_matrix<M>(curve_.points()));
    spectral::TrigInterpolant vi(curve_detail::to_matrix<M>(v_));
    PointList<M> pts(n), vel(n), vs(n);
    const double scale = 2 * std::numbers::pi / curve_.period();
    for (int j = 0; j < n; ++j) {
      const double tj = t + 2 * std::numbers::pi * j / n;
      const vec X = vec(xi.eval(tj));
      pts[j] = M::project_point(X);
      vel[j] = curve_detail::projected_velocity<M>(X, vec(xi.eval(tj, 1) * scale));
      vs[j] = vec(vi.eval(tj));
    }
    return NormalField(ClosedCurve<M>::from_parametrization(pts, curve_.period(), &vel), std::move(vs));
  }

  void build_left() {
    const int n = size();
    PointList<M> q(n);
    for (int i = 0; i < n; ++i) q[i] = quat_mul(quat_conj(curve_.point(i)), v_[i]);
    const spectral::Samples dq =
        spectral::derivative(curve_detail::to_matrix<M>(q)) * (2 * std::numbers::pi / curve_.period());
    dvl_.resize(n);
    for (int i = 0; i < n; ++i) dvl_[i] = quat_mul(curve_.point(i), vec(dq.row(i).transpose()));
  }

  ClosedCurve<M> curve_;
  PointList<M> v_, dv_;
  PointList<M> dvl_;
};

/// Exponential push-off of x along the unit normal v by width eps.
template <Model M>
vec_t<M> exp_pushoff(const vec_t<M>& x, const vec_t<M>& v, double eps) {
  if constexpr (M::space == Space::Euclidean) {
    return x + eps * v;
  } else if constexpr (M::space == Space::Sphere3) {
    return std::cos(eps) * x + std::sin(eps) * v;
  } else {
    return std::cosh(eps) * x + std::sinh(eps) * v;
  }
}

template <Model M>
class Ribbon {
 public:
  using vec = vec_t<M>;
  static constexpr double kMinSeparation = 1e-6;

  Ribbon(NormalField<M> normal, double width) : normal_(std::move(normal)), width_(width) {
    if (!(width > 0.0) || !std::isfinite(width)) throw geometry_error("ribbon width must be positive");
    build_edge();
  }

  const ClosedCurve<M>& base() const { return normal_.curve(); }
  const NormalField<M>& normal() const { return normal_; }
  double width() const { return width_; }

  /// The far edge K_eps in the parameter of the base curve.
  const ClosedCurve<M>& edge() const { return edge_; }

  /// The far edge resampled to uniform arclength.
  ClosedCurve<M> pushoff() const { return edge_.arclength_resampled(); }

  Ribbon with_width(double eps) const { return Ribbon(normal_, eps); }
  Ribbon resampled(int n) const { return n == normal_.size() ? *this : Ribbon(normal_.resampled(n), width_); }

 private:
  void build_edge() {
    const auto& c = normal_.curve();
    const int n = c.size();
    PointList<M> y(n), dy(n);
    for (int i = 0; i < n; ++i) {
      const vec& x = c.point(i);
      const vec& v = normal_.vector(i);
      y[i] = exp_pushoff<M>(x, v, width_);
      const vec dv = normal_.ambient_derivative(i);
      if constexpr (M::space == Space::Euclidean) {
        dy[i] = c.velocity(i) + width_ * dv;
      } else if constexpr (M::space == Space::Sphere3) {
        dy[i] = std::cos(width_) * c.velocity(i) + std::sin(width_) * dv;
      } else {
        dy[i] = std::cosh(width_) * c.velocity(i) + std::sinh(width_) * dv;
      }
    }
    edge_ = ClosedCurve<M>::from_parametrization(y, c.period(), &dy);
    double sep = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sep = std::min(sep, (c.point(i) - edge_.point(j)).norm());
    if (!(sep > kMinSeparation)) throw geometry_error("ribbon is not embedded: push-off meets the base curve");
  }

  NormalField<M> normal_;
  double width_;
  ClosedCurve<M> edge_;
};

}  // namespace lktw
