#pragma once

// Ambient models of the three constant-curvature spaces:
//
//   Euclidean3   R^3 with the dot product
//   Sphere3      unit sphere in R^4, standard inner product
//   Hyperbolic3  upper sheet of <x,x> = 1 in Minkowski R^{1,3},
//                <x,y> = x0 y0 - x1 y1 - x2 y2 - x3 y3
//
// Each model is a stateless struct of static functions so the integrators can
// be written once as templates. Points and tangent vectors are plain Eigen
// vectors in the ambient space; a tangent vector is implicitly attached to
// the point passed alongside it.

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>
#include <concepts>
#include <numbers>
#include <string>
#include <string_view>

#include "lktw/errors.hpp"

namespace lktw {

enum class Space { Euclidean, Sphere3, Hyperbolic3 };

inline std::string_view to_string(Space s) {
  switch (s) {
    case Space::Euclidean: return "r3";
    case Space::Sphere3: return "s3";
    case Space::Hyperbolic3: return "h3";
  }
  return "?";
}

inline Space parse_space(std::string_view name) {
  if (name == "r3") return Space::Euclidean;
  if (name == "s3") return Space::Sphere3;
  if (name == "h3") return Space::Hyperbolic3;
  throw input_error("unknown space '" + std::string(name) + "' (expected r3, s3 or h3)");
}

inline int ambient_dim(Space s) { return s == Space::Euclidean ? 3 : 4; }

namespace tol {
inline constexpr double renormalize = 1e-12;  // drift before snapping back onto the model
inline constexpr double clamp = 1e-9;         // slack on <x,y> before distance() rejects
inline constexpr double unit = 1e-9;          // unit-vector check for geodesics
inline constexpr double antipodal = 1e-12;    // 1 + <x,y> below this has no transport
}  // namespace tol

namespace detail {

// C with C_k = det(rows a, b, c, e_k), so det(a, b, c, w) = C . w.
inline Eigen::Vector4d cofactor_row(const Eigen::Vector4d& a, const Eigen::Vector4d& b,
                                    const Eigen::Vector4d& c) {
  auto minor3 = [&](int i, int j, int k) {
    return a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
           a[k] * (b[i] * c[j] - b[j] * c[i]);
  };
  return {-minor3(1, 2, 3), minor3(0, 2, 3), -minor3(0, 1, 3), minor3(0, 1, 2)};
}

inline double det4(const Eigen::Vector4d& a, const Eigen::Vector4d& b, const Eigen::Vector4d& c,
                   const Eigen::Vector4d& d) {
  return cofactor_row(a, b, c).dot(d);
}

}  // namespace detail

struct Euclidean3 {
  static constexpr Space space = Space::Euclidean;
  static constexpr int dim = 3;
  using vec = Eigen::Vector3d;

  static double inner(const vec& a, const vec& b) { return a.dot(b); }
  static double dot(const vec& a, const vec& b) { return a.dot(b); }
  static double norm(const vec& v) { return v.norm(); }

  static double membership_defect(const vec&) { return 0.0; }
  static vec project_point(const vec& x) { return x; }
  static vec project_tangent(const vec&, const vec& v) { return v; }

  static double distance(const vec& x, const vec& y) { return (x - y).norm(); }

  static vec geodesic_point(const vec& x, const vec& v, double t) { return x + t * v; }

  // Sine-like factor that the curved kernels divide by: the radius of the
  // distance sphere per unit solid angle.
  static double radial_sine(double alpha) { return alpha; }

  static vec transport(const vec&, const vec&, const vec& v) { return v; }

  static vec cross(const vec&, const vec& u, const vec& v) { return u.cross(v); }
  static double triple(const vec&, const vec& u, const vec& v, const vec& w) {
    return u.dot(v.cross(w));
  }

  static vec grad_alpha(const vec& x, const vec& y) {
    const vec d = y - x;
    const double n = d.norm();
    if (!(n > 0.0)) throw geometry_error("gradient of distance is singular at coincident points");
    return d / n;
  }

  static vec origin() { return vec::Zero(); }
};

namespace detail {

// Shared algebra of the two curved models; Sign = +1 for the sphere and -1
// for hyperbolic space so that dot() is always the Riemannian product.
template <int Sign>
struct Curved4 {
  static constexpr int dim = 4;
  using vec = Eigen::Vector4d;

  static double inner(const vec& a, const vec& b) {
    if constexpr (Sign > 0) {
      return a.dot(b);
    } else {
      return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
    }
  }
  static double dot(const vec& a, const vec& b) { return Sign * inner(a, b); }
  static double norm(const vec& v) { return std::sqrt(std::max(0.0, dot(v, v))); }

  static double membership_defect(const vec& x) {
    double d = std::abs(inner(x, x) - 1.0);
    if constexpr (Sign < 0) {
      if (x[0] <= 0.0) d = std::max(d, 1.0);
    }
    return d;
  }

  static vec project_point(const vec& x) {
    const double q = inner(x, x);
    if (!(q > 0.0)) throw geometry_error("point cannot be projected onto the model");
    if constexpr (Sign < 0) {
      if (x[0] <= 0.0) throw geometry_error("hyperbolic point must have x0 > 0");
    }
    if (std::abs(q - 1.0) <= tol::renormalize) return x;
    return x / std::sqrt(q);
  }

  static vec project_tangent(const vec& x, const vec& v) { return v - inner(x, v) * x; }

  static vec geodesic_point(const vec& x, const vec& v, double t) {
    if (std::abs(norm(v) - 1.0) > tol::unit) throw geometry_error("geodesic direction must be a unit vector");
    if constexpr (Sign > 0) {
      return project_point(std::cos(t) * x + std::sin(t) * v);
    } else {
      return project_point(std::cosh(t) * x + std::sinh(t) * v);
    }
  }

  static double radial_sine(double alpha) {
    if constexpr (Sign > 0) {
      return std::sin(alpha);
    } else {
      return std::sinh(alpha);
    }
  }

  // P_{xy}: moves v from T_y to T_x along the connecting geodesic.
  static vec transport(const vec& x, const vec& y, const vec& v) {
    const double denom = 1.0 + inner(x, y);
    if (denom < tol::antipodal) throw geometry_error("parallel transport undefined between antipodal points");
    return v - (inner(x, v) / denom) * (x + y);
  }

  // det(x, u, v, e*) with the hyperbolic e0 entry negated.
  static vec cross(const vec& x, const vec& u, const vec& v) {
    vec c = cofactor_row(x, u, v);
    if constexpr (Sign < 0) c[0] = -c[0];
    return c;
  }

  static double triple(const vec& x, const vec& u, const vec& v, const vec& w) {
    return det4(x, u, v, w);
  }

  // Unit vector at y pointing away from x. Uses the component of x normal to
  // y instead of (cos a y - x)/sin a, which cancels badly for close points.
  static vec grad_alpha(const vec& x, const vec& y) {
    const vec w = x - inner(x, y) * y;
    const double n = norm(w);
    if (!(n > 1e-300)) throw geometry_error("gradient of distance is singular (coincident or antipodal points)");
    return -w / n;
  }

  static vec origin() { return vec(1.0, 0.0, 0.0, 0.0); }
};

}  // namespace detail

struct Sphere3 : detail::Curved4<+1> {
  static constexpr Space space = Space::Sphere3;

  static double distance(const vec& x, const vec& y) {
    const double c = inner(x, y);
    if (c > 1.0 + tol::clamp || c < -1.0 - tol::clamp)
      throw geometry_error("invalid S3 points: <x,y> outside [-1,1]");
    // Chord form keeps full relative accuracy for nearby and nearly
    // antipodal pairs, where acos(<x,y>) does not.
    return 2.0 * std::atan2((x - y).norm(), (x + y).norm());
  }
};

struct Hyperbolic3 : detail::Curved4<-1> {
  static constexpr Space space = Space::Hyperbolic3;

  static double distance(const vec& x, const vec& y) {
    const double c = inner(x, y);
    if (c < 1.0 - tol::clamp) throw geometry_error("invalid H3 points: <x,y> < 1");
    // -<x-y,x-y> = 4 sinh^2(a/2)
    const vec d = x - y;
    const double q = std::max(0.0, -inner(d, d));
    return 2.0 * std::asinh(0.5 * std::sqrt(q));
  }
};

template <class M>
concept Model = requires {
  { M::space } -> std::convertible_to<Space>;
  { M::dim } -> std::convertible_to<int>;
  typename M::vec;
};

template <class M>
concept CurvedModel = Model<M> && (M::dim == 4);

template <Model M>
using vec_t = typename M::vec;

/// Calls f(Model{}) for the model type matching a runtime Space tag.
template <class F>
decltype(auto) visit_space(Space s, F&& f) {
  switch (s) {
    case Space::Euclidean: return f(Euclidean3{});
    case Space::Sphere3: return f(Sphere3{});
    case Space::Hyperbolic3: return f(Hyperbolic3{});
  }
  throw error("invalid space tag");
}

// ---------------------------------------------------------------------------
// Quaternions. (x0, x1, x2, x3) <-> x0 + x1 i + x2 j + x3 k with ij = k.

inline Eigen::Vector4d quat_mul(const Eigen::Vector4d& a, const Eigen::Vector4d& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

inline Eigen::Vector4d quat_conj(const Eigen::Vector4d& a) { return {a[0], -a[1], -a[2], -a[3]}; }

/// Differential of left translation by gy gx^{-1}: moves v from T_gx S3 to
/// T_gy S3. Points are unit quaternions, so the inverse is the conjugate.
inline Eigen::Vector4d left_translate(const Eigen::Vector4d& gx, const Eigen::Vector4d& gy,
                                      const Eigen::Vector4d& v) {
  return quat_mul(quat_mul(gy, quat_conj(gx)), v);
}

// ---------------------------------------------------------------------------
// Runtime-dispatched entry points over dynamic vectors, for callers (CLI,
// file input) that only learn the space at run time.

namespace detail {
template <Model M>
vec_t<M> fixed(const Eigen::VectorXd& v) {
  if (v.size() != M::dim)
    throw dimension_error("expected a " + std::to_string(M::dim) + "-vector for space " +
                          std::string(to_string(M::space)) + ", got length " + std::to_string(v.size()));
  return v;
}
}  // namespace detail

inline double ambient_inner(Space s, const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return visit_space(s, [&]<class M>(M) { return M::inner(detail::fixed<M>(a), detail::fixed<M>(b)); });
}

inline double distance(Space s, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  return visit_space(s, [&]<class M>(M) { return M::distance(detail::fixed<M>(x), detail::fixed<M>(y)); });
}

inline Eigen::VectorXd geodesic_point(Space s, const Eigen::VectorXd& x, const Eigen::VectorXd& v, double t) {
  return visit_space(s, [&]<class M>(M) -> Eigen::VectorXd {
    return M::geodesic_point(detail::fixed<M>(x), detail::fixed<M>(v), t);
  });
}

inline Eigen::VectorXd parallel_transport(Space s, const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                          const Eigen::VectorXd& v) {
  return visit_space(s, [&]<class M>(M) -> Eigen::VectorXd {
    return M::transport(detail::fixed<M>(x), detail::fixed<M>(y), detail::fixed<M>(v));
  });
}

inline Eigen::VectorXd left_translate(Space s, const Eigen::VectorXd& gx, const Eigen::VectorXd& gy,
                                      const Eigen::VectorXd& v) {
  if (s != Space::Sphere3) throw unsupported_format("left translation is only defined on S3");
  return left_translate(detail::fixed<Sphere3>(gx), detail::fixed<Sphere3>(gy), detail::fixed<Sphere3>(v));
}

inline Eigen::VectorXd cross(Space s, const Eigen::VectorXd& x, const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  return visit_space(s, [&]<class M>(M) -> Eigen::VectorXd {
    return M::cross(detail::fixed<M>(x), detail::fixed<M>(u), detail::fixed<M>(v));
  });
}

inline double triple(Space s, const Eigen::VectorXd& x, const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                     const Eigen::VectorXd& w) {
  return visit_space(s, [&]<class M>(M) {
    return M::triple(detail::fixed<M>(x), detail::fixed<M>(u), detail::fixed<M>(v), detail::fixed<M>(w));
  });
}

enum class GradientAt { X, Y };

/// Unit gradient of the distance alpha(x, y) with respect to the chosen end
/// point, located at that point and pointing away from the other one.
inline Eigen::VectorXd grad_alpha(Space s, const Eigen::VectorXd& x, const Eigen::VectorXd& y, GradientAt wrt) {
  return visit_space(s, [&]<class M>(M) -> Eigen::VectorXd {
    const auto fx = detail::fixed<M>(x);
    const auto fy = detail::fixed<M>(y);
    if constexpr (M::space == Space::Sphere3) {
      if (M::distance(fx, fy) > std::numbers::pi - 1e-12)
        throw geometry_error("gradient of distance is singular at the antipode");
    }
    return wrt == GradientAt::Y ? M::grad_alpha(fx, fy) : M::grad_alpha(fy, fx);
  });
}

}  // namespace lktw
