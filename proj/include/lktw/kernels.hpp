#pragma once

// Radial kernels phi(alpha) of the linking and writhing integrals and their
// radial derivatives, for every (space, transport format) pair.
//
//   R3                 1 / (4 pi a)
//   S3 left            (pi - a) cot a / (4 pi^2)
//   S3 parallel        (pi - a) csc a / (4 pi^2)
//   H3 parallel        csch a / (4 pi)
//
// The Biot-Savart kernel is phi0 = -phi. Near a = pi on S3 the closed forms
// lose precision to cancellation, so truncated series in u = a - pi take over
// within kSeriesRadius. The singular remainders phi - 1/(4 pi a) etc. switch to
// series in a near 0 for the same reason.

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "lktw/errors.hpp"
#include "lktw/geometry.hpp"

namespace lktw {

enum class Format { LeftTranslation, ParallelTransport, EuclideanStandard };

inline std::string_view to_string(Format f) {
  switch (f) {
    case Format::LeftTranslation: return "left";
    case Format::ParallelTransport: return "parallel";
    case Format::EuclideanStandard: return "euclidean";
  }
  return "?";
}

inline Format parse_format(std::string_view name) {
  if (name == "left") return Format::LeftTranslation;
  if (name == "parallel") return Format::ParallelTransport;
  if (name == "euclidean") return Format::EuclideanStandard;
  throw input_error("unknown format '" + std::string(name) + "' (expected parallel or left)");
}

enum class KernelKind { Euclidean, SphereLeft, SphereParallel, Hyperbolic };

struct KernelFamily {
  Space space = Space::Euclidean;
  Format format = Format::EuclideanStandard;

  /// Throws unsupported_format for combinations the integrals do not define.
  KernelKind kind() const {
    switch (space) {
      case Space::Euclidean:
        if (format == Format::LeftTranslation) break;
        return KernelKind::Euclidean;
      case Space::Sphere3:
        if (format == Format::LeftTranslation) return KernelKind::SphereLeft;
        if (format == Format::ParallelTransport) return KernelKind::SphereParallel;
        break;
      case Space::Hyperbolic3:
        if (format == Format::ParallelTransport) return KernelKind::Hyperbolic;
        break;
    }
    throw unsupported_format("unsupported format '" + std::string(to_string(format)) + "' on space " +
                             std::string(to_string(space)));
  }
};

namespace kernel_detail {

inline constexpr double pi = std::numbers::pi;
inline constexpr double ip = 1.0 / pi;
inline constexpr double ip2 = 1.0 / (pi * pi);
inline constexpr double kSeriesRadius = 0.1;

template <std::size_t N>
constexpr double horner(const std::array<double, N>& c, double x) {
  double r = 0.0;
  for (std::size_t i = N; i-- > 0;) r = r * x + c[i];
  return r;
}

// Expansions about a = pi, coefficients of u^k with u = a - pi.
struct PiSeries {
  std::array<double, 14> phi, d1, d2, w;
};

inline constexpr PiSeries kSphereParallelPi{
    {ip2 / 4, 0, ip2 / 24, 0, 7 * ip2 / 1440, 0, 31 * ip2 / 60480, 0, 127 * ip2 / 2419200, 0,
     73 * ip2 / 13685760, 0, 1414477 * ip2 / 2615348736000, 0},
    {0, ip2 / 12, 0, 7 * ip2 / 360, 0, 31 * ip2 / 10080, 0, 127 * ip2 / 302400, 0, 73 * ip2 / 1368576, 0,
     1414477 * ip2 / 217945728000, 0, 8191 * ip2 / 10674892800},
    {ip2 / 12, 0, 7 * ip2 / 120, 0, 31 * ip2 / 2016, 0, 127 * ip2 / 43200, 0, 73 * ip2 / 152064, 0,
     1414477 * ip2 / 19813248000, 0, 8191 * ip2 / 821145600, 0},
    {-ip2 / 12, 0, -ip2 / 30, 0, -ip2 / 126, 0, -ip2 / 675, 0, -ip2 / 4158, 0, -691 * ip2 / 19348875, 0,
     -ip2 / 200475, 0},
};

inline constexpr PiSeries kSphereLeftPi{
    {-ip2 / 4, 0, ip2 / 12, 0, ip2 / 180, 0, ip2 / 1890, 0, ip2 / 18900, 0, ip2 / 187110, 0,
     691 * ip2 / 1277025750, 0},
    {0, ip2 / 6, 0, ip2 / 45, 0, ip2 / 315, 0, 2 * ip2 / 4725, 0, ip2 / 18711, 0, 1382 * ip2 / 212837625, 0,
     2 * ip2 / 2606175},
    {ip2 / 6, 0, ip2 / 15, 0, ip2 / 63, 0, 2 * ip2 / 675, 0, ip2 / 2079, 0, 1382 * ip2 / 19348875, 0,
     2 * ip2 / 200475, 0},
    {-ip2 / 6, 0, -ip2 / 20, 0, -17 * ip2 / 1680, 0, -29 * ip2 / 16800, 0, -1181 * ip2 / 4435200, 0,
     -1393481 * ip2 / 36324288000, 0, -763967 * ip2 / 145297152000, 0},
};

// Expansions about a = 0 of the bounded remainders
//   f = phi - 1/(4 pi a),  g = phi' + 1/(4 pi a^2),  h = phi'' - 1/(2 pi a^3).
struct ZeroSeries {
  std::array<double, 14> f, g, h;
};

inline constexpr ZeroSeries kSphereParallelZero{
    {-ip2 / 4, ip / 24, -ip2 / 24, 7 * ip / 1440, -7 * ip2 / 1440, 31 * ip / 60480, -31 * ip2 / 60480,
     127 * ip / 2419200, -127 * ip2 / 2419200, 73 * ip / 13685760, -73 * ip2 / 13685760,
     1414477 * ip / 2615348736000, -1414477 * ip2 / 2615348736000, 8191 * ip / 149448499200},
    {ip / 24, -ip2 / 12, 7 * ip / 480, -7 * ip2 / 360, 31 * ip / 12096, -31 * ip2 / 10080, 127 * ip / 345600,
     -127 * ip2 / 302400, 73 * ip / 1520640, -73 * ip2 / 1368576, 1414477 * ip / 237758976000,
     -1414477 * ip2 / 217945728000, 8191 * ip / 11496038400, -8191 * ip2 / 10674892800},
    {-ip2 / 12, 7 * ip / 240, -7 * ip2 / 120, 31 * ip / 3024, -31 * ip2 / 2016, 127 * ip / 57600,
     -127 * ip2 / 43200, 73 * ip / 190080, -73 * ip2 / 152064, 1414477 * ip / 23775897600,
     -1414477 * ip2 / 19813248000, 8191 * ip / 958003200, -8191 * ip2 / 821145600,
     16931177 * ip / 14517854208000},
};

inline constexpr ZeroSeries kSphereLeftZero{
    {-ip2 / 4, -ip / 12, ip2 / 12, -ip / 180, ip2 / 180, -ip / 1890, ip2 / 1890, -ip / 18900, ip2 / 18900,
     -ip / 187110, ip2 / 187110, -691 * ip / 1277025750, 691 * ip2 / 1277025750, -ip / 18243225},
    {-ip / 12, ip2 / 6, -ip / 60, ip2 / 45, -ip / 378, ip2 / 315, -ip / 2700, 2 * ip2 / 4725, -ip / 20790,
     ip2 / 18711, -691 * ip / 116093250, 1382 * ip2 / 212837625, -ip / 1403325, 2 * ip2 / 2606175},
    {ip2 / 6, -ip / 30, ip2 / 15, -2 * ip / 189, ip2 / 63, -ip / 450, 2 * ip2 / 675, -4 * ip / 10395,
     ip2 / 2079, -691 * ip / 11609325, 1382 * ip2 / 19348875, -4 * ip / 467775, 2 * ip2 / 200475,
     -3617 * ip / 3101348250},
};

inline constexpr ZeroSeries kHyperbolicZero{
    {0, -ip / 24, 0, 7 * ip / 1440, 0, -31 * ip / 60480, 0, 127 * ip / 2419200, 0, -73 * ip / 13685760, 0,
     1414477 * ip / 2615348736000, 0, -8191 * ip / 149448499200},
    {-ip / 24, 0, 7 * ip / 480, 0, -31 * ip / 12096, 0, 127 * ip / 345600, 0, -73 * ip / 1520640, 0,
     1414477 * ip / 237758976000, 0, -8191 * ip / 11496038400, 0},
    {0, 7 * ip / 240, 0, -31 * ip / 3024, 0, 127 * ip / 57600, 0, -73 * ip / 190080, 0,
     1414477 * ip / 23775897600, 0, -8191 * ip / 958003200, 0, 16931177 * ip / 14517854208000},
};

// 1 - a cot a and 1 - a coth a, even series starting at a^2.
inline constexpr std::array<double, 8> kOneMinusACot{
    0, 1.0 / 3, 1.0 / 45, 2.0 / 945, 1.0 / 4725, 2.0 / 93555, 1382.0 / 638512875, 4.0 / 18243225};
inline constexpr std::array<double, 8> kOneMinusACoth{
    0, -1.0 / 3, 1.0 / 45, -2.0 / 945, 1.0 / 4725, -2.0 / 93555, 1382.0 / 638512875, -4.0 / 18243225};

inline void check_alpha(KernelKind k, double a) {
  if (!(a > 0.0)) throw domain_error("kernel argument must satisfy alpha > 0");
  if ((k == KernelKind::SphereLeft || k == KernelKind::SphereParallel) && a > pi)
    throw domain_error("kernel argument on S3 must satisfy alpha <= pi");
  if (!std::isfinite(a)) throw domain_error("kernel argument must be finite");
}

inline bool near_pi(KernelKind k, double a) {
  return (k == KernelKind::SphereLeft || k == KernelKind::SphereParallel) && pi - a < kSeriesRadius;
}

inline const PiSeries& pi_series(KernelKind k) {
  return k == KernelKind::SphereLeft ? kSphereLeftPi : kSphereParallelPi;
}

inline const ZeroSeries* zero_series(KernelKind k) {
  switch (k) {
    case KernelKind::SphereLeft: return &kSphereLeftZero;
    case KernelKind::SphereParallel: return &kSphereParallelZero;
    case KernelKind::Hyperbolic: return &kHyperbolicZero;
    default: return nullptr;
  }
}

// cot-like coefficient of the radial Laplacian: f'' + 2 c(a) f'.
inline double cotlike(KernelKind k, double a) {
  switch (k) {
    case KernelKind::Euclidean: return 1.0 / a;
    case KernelKind::Hyperbolic: return 1.0 / std::tanh(a);
    default: return std::cos(a) / std::sin(a);
  }
}

}  // namespace kernel_detail

inline double phi(const KernelFamily& fam, double a) {
  using namespace kernel_detail;
  const KernelKind k = fam.kind();
  check_alpha(k, a);
  if (near_pi(k, a)) return horner(pi_series(k).phi, a - pi);
  switch (k) {
    case KernelKind::Euclidean: return 1.0 / (4 * pi * a);
    case KernelKind::SphereLeft: return (pi - a) / std::tan(a) * ip2 / 4;
    case KernelKind::SphereParallel: return (pi - a) / std::sin(a) * ip2 / 4;
    case KernelKind::Hyperbolic: return 1.0 / (4 * pi * std::sinh(a));
  }
  return 0.0;
}

inline double phi_prime(const KernelFamily& fam, double a) {
  using namespace kernel_detail;
  const KernelKind k = fam.kind();
  check_alpha(k, a);
  if (near_pi(k, a)) return horner(pi_series(k).d1, a - pi);
  switch (k) {
    case KernelKind::Euclidean: return -1.0 / (4 * pi * a * a);
    case KernelKind::SphereLeft: {
      const double s = std::sin(a);
      return (-std::cos(a) / s - (pi - a) / (s * s)) * ip2 / 4;
    }
    case KernelKind::SphereParallel: {
      const double s = std::sin(a);
      return (-1.0 / s - (pi - a) * std::cos(a) / (s * s)) * ip2 / 4;
    }
    case KernelKind::Hyperbolic: {
      const double s = std::sinh(a);
      return -std::cosh(a) / (s * s) / (4 * pi);
    }
  }
  return 0.0;
}

inline double phi_double_prime(const KernelFamily& fam, double a) {
  using namespace kernel_detail;
  const KernelKind k = fam.kind();
  check_alpha(k, a);
  if (near_pi(k, a)) return horner(pi_series(k).d2, a - pi);
  switch (k) {
    case KernelKind::Euclidean: return 1.0 / (2 * pi * a * a * a);
    case KernelKind::SphereLeft: {
      const double s = std::sin(a), c = std::cos(a);
      return (2.0 / (s * s) + 2 * (pi - a) * c / (s * s * s)) * ip2 / 4;
    }
    case KernelKind::SphereParallel: {
      const double s = std::sin(a), c = std::cos(a);
      return (2 * c / (s * s) + (pi - a) * (c * c + 1.0) / (s * s * s)) * ip2 / 4;
    }
    case KernelKind::Hyperbolic: {
      const double s = std::sinh(a), c = std::cosh(a);
      return (c * c + 1.0) / (s * s * s) / (4 * pi);
    }
  }
  return 0.0;
}

/// phi'(a) divided by the radial sine (sin a, sinh a or a): the scalar weight
/// of the determinant-form integrands. Finite at the S3 antipode.
inline double phi_prime_over_sine(const KernelFamily& fam, double a) {
  using namespace kernel_detail;
  const KernelKind k = fam.kind();
  check_alpha(k, a);
  if (near_pi(k, a)) return horner(pi_series(k).w, a - pi);
  switch (k) {
    case KernelKind::Euclidean: return -1.0 / (4 * pi * a * a * a);
    case KernelKind::Hyperbolic: return phi_prime(fam, a) / std::sinh(a);
    default: return phi_prime(fam, a) / std::sin(a);
  }
}

/// Biot-Savart kernel phi0 = kPhi0Sign * phi.
inline constexpr double kPhi0Sign = -1.0;

inline double phi0(const KernelFamily& fam, double a) { return kPhi0Sign * phi(fam, a); }
inline double phi0_prime(const KernelFamily& fam, double a) { return kPhi0Sign * phi_prime(fam, a); }

inline double phi1(double a) {
  if (!(a >= 0.0 && a <= kernel_detail::pi)) throw domain_error("phi1 requires 0 <= alpha <= pi");
  return -a * (2 * kernel_detail::pi - a) * kernel_detail::ip2 / 16;
}

inline double phi1_prime(double a) {
  if (!(a >= 0.0 && a <= kernel_detail::pi)) throw domain_error("phi1' requires 0 <= alpha <= pi");
  return (a - kernel_detail::pi) * kernel_detail::ip2 / 8;
}

/// Bounded parts of phi, phi', phi'' after removing the flat-space
/// singularities 1/(4 pi a), -1/(4 pi a^2), 1/(2 pi a^3).
struct SingularRemainders {
  double f, g, h;
};

inline SingularRemainders singular_remainders(const KernelFamily& fam, double a) {
  using namespace kernel_detail;
  const KernelKind k = fam.kind();
  check_alpha(k, a);
  if (const ZeroSeries* z = zero_series(k); z && a < kSeriesRadius)
    return {horner(z->f, a), horner(z->g, a), horner(z->h, a)};
  return {phi(fam, a) - 1.0 / (4 * pi * a), phi_prime(fam, a) + 1.0 / (4 * pi * a * a),
          phi_double_prime(fam, a) - 1.0 / (2 * pi * a * a * a)};
}

/// Radial Laplacian of phi: phi'' + 2 cot a phi' (S3), + 2 coth a phi' (H3),
/// + (2/a) phi' (R3), evaluated without cancelling the singular parts.
inline double laplacian_phi(const KernelFamily& fam, double a) {
  using namespace kernel_detail;
  const KernelKind k = fam.kind();
  check_alpha(k, a);
  if (k == KernelKind::Euclidean) return 0.0;
  const bool sphere = k != KernelKind::Hyperbolic;
  if (a < kSeriesRadius) {
    const auto r = singular_remainders(fam, a);
    const double a2 = a * a;
    const double one_minus = horner(sphere ? kOneMinusACot : kOneMinusACoth, a2);
    return r.h + 2 * cotlike(k, a) * r.g + one_minus / (2 * pi * a * a2);
  }
  if (sphere) return phi_double_prime(fam, a) + 2 * std::cos(a) * phi_prime_over_sine(fam, a);
  return phi_double_prime(fam, a) + 2 * cotlike(k, a) * phi_prime(fam, a);
}

/// Constant value of the Laplacian of the S3 left kernel away from a = 0.
inline constexpr double kSphereLeftLaplacian = 1.0 / (2 * std::numbers::pi * std::numbers::pi);

/// Value of Laplacian(phi1) - phi0 for the S3 left kernel, constant in alpha.
inline constexpr double kPhi1Constant = 1.0 / (8 * std::numbers::pi * std::numbers::pi);

/// Residual of the kernel's smooth-region equation: Delta phi (R3),
/// Delta phi - 1/(2 pi^2) (S3 left), Delta phi - phi (S3 parallel),
/// Delta phi + phi (H3).
inline double radial_pde_residual(const KernelFamily& fam, double a) {
  const KernelKind k = fam.kind();
  const double lap = laplacian_phi(fam, a);
  switch (k) {
    case KernelKind::Euclidean: return lap;
    case KernelKind::SphereLeft: return lap - kSphereLeftLaplacian;
    case KernelKind::SphereParallel: return lap - phi(fam, a);
    case KernelKind::Hyperbolic: return lap + phi(fam, a);
  }
  return 0.0;
}

}  // namespace lktw
