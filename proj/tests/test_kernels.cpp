#include <gtest/gtest.h>

#include <vector>

#include "support.hpp"

using namespace lktw;
using testing_support::central_diff;
using testing_support::phi_ref;
using testing_support::pi;
using testing_support::second_diff;

namespace {

const KernelFamily kR3{Space::Euclidean, Format::EuclideanStandard};
const KernelFamily kS3L{Space::Sphere3, Format::LeftTranslation};
const KernelFamily kS3P{Space::Sphere3, Format::ParallelTransport};
const KernelFamily kH3{Space::Hyperbolic3, Format::ParallelTransport};
const KernelFamily kAll[] = {kR3, kS3L, kS3P, kH3};

std::vector<double> logspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a * std::pow(b / a, static_cast<double>(i) / (n - 1));
  return v;
}

double upper(const KernelFamily& f) { return f.space == Space::Sphere3 ? pi : 6.0; }

}  // namespace

TEST(Kernels, FamilyKinds) {
  EXPECT_EQ(kS3L.kind(), KernelKind::SphereLeft);
  EXPECT_EQ(kS3P.kind(), KernelKind::SphereParallel);
  EXPECT_EQ(kH3.kind(), KernelKind::Hyperbolic);
  EXPECT_EQ(kR3.kind(), KernelKind::Euclidean);
  EXPECT_EQ((KernelFamily{Space::Euclidean, Format::ParallelTransport}.kind()), KernelKind::Euclidean);
  EXPECT_THROW((KernelFamily{Space::Hyperbolic3, Format::LeftTranslation}.kind()), unsupported_format);
  EXPECT_THROW((KernelFamily{Space::Euclidean, Format::LeftTranslation}.kind()), unsupported_format);
  EXPECT_THROW((KernelFamily{Space::Sphere3, Format::EuclideanStandard}.kind()), unsupported_format);
  EXPECT_EQ(parse_format("left"), Format::LeftTranslation);
  EXPECT_THROW(parse_format("right"), input_error);
}

TEST(Kernels, PhiExamples) {
  EXPECT_NEAR(phi(kS3P, pi), 1 / (4 * pi * pi), 1e-16);
  EXPECT_NEAR(phi(kS3P, pi / 2), 1 / (8 * pi), 1e-16);
  EXPECT_NEAR(phi(kH3, 1.0), 1 / std::sinh(1.0) / (4 * pi), 1e-16);
  EXPECT_NEAR(phi_prime(kR3, 0.7), -1 / (4 * pi * 0.49), 1e-16);
  EXPECT_NEAR(phi_prime(kS3P, pi), 0.0, 1e-16);
  EXPECT_NEAR(phi_prime(kH3, 1.0), -1 / std::sinh(1.0) / std::tanh(1.0) / (4 * pi), 1e-16);
  EXPECT_NEAR(phi_double_prime(kR3, 0.7), 1 / (2 * pi * 0.343), 1e-15);
  EXPECT_NEAR(phi_double_prime(kS3P, pi), 1 / (12 * pi * pi), 1e-15);
  EXPECT_NEAR(phi(kS3L, pi), -1 / (4 * pi * pi), 1e-16);
}

TEST(Kernels, DomainErrors) {
  for (const auto& f : kAll) {
    EXPECT_THROW(phi(f, 0.0), domain_error);
    EXPECT_THROW(phi_prime(f, -1.0), domain_error);
  }
  EXPECT_THROW(phi(kS3P, pi + 1e-9), domain_error);
  EXPECT_THROW(phi1(-0.1), domain_error);
  EXPECT_THROW(phi1_prime(4.0), domain_error);
}

TEST(Kernels, ClosedFormsMatchReference) {
  for (const auto& f : kAll)
    for (double a : logspace(1e-4, upper(f) - 0.2, 60))
      EXPECT_NEAR(phi(f, a), phi_ref(f.kind(), a), 1e-13 * std::abs(phi_ref(f.kind(), a)) + 1e-16);
}

TEST(Kernels, DerivativesMatchFiniteDifferences) {
  for (const auto& f : kAll) {
    for (double a : logspace(0.05, upper(f) - 0.05, 40)) {
      const double h = 1e-4 * std::min(1.0, a);
      auto p = [&](double t) { return phi(f, t); };
      auto dp = [&](double t) { return phi_prime(f, t); };
      const double d1 = central_diff(p, a, h), d2 = central_diff(dp, a, h);
      EXPECT_NEAR(phi_prime(f, a), d1, 1e-6 * std::abs(d1) + 1e-12) << "alpha " << a;
      EXPECT_NEAR(phi_double_prime(f, a), d2, 1e-6 * std::abs(d2) + 1e-12) << "alpha " << a;
    }
  }
  // The example at alpha = 1 with step 1e-5.
  auto dp = [&](double t) { return phi_prime(kS3P, t); };
  const double d2 = central_diff(dp, 1.0, 1e-5);
  EXPECT_NEAR(phi_double_prime(kS3P, 1.0), d2, 1e-6 * std::abs(d2));
}

TEST(Kernels, SeriesNearPiIsContinuousWithClosedForm) {
  for (const auto& f : {kS3L, kS3P}) {
    const double a = pi - kernel_detail::kSeriesRadius;
    const double below = std::nextafter(a, 0.0);
    EXPECT_NEAR(phi(f, a), phi(f, below), 1e-14);
    EXPECT_NEAR(phi_prime(f, a), phi_prime(f, below), 1e-13);
    EXPECT_NEAR(phi_double_prime(f, a), phi_double_prime(f, below), 1e-12);
    EXPECT_NEAR(phi_prime_over_sine(f, a), phi_prime_over_sine(f, below), 1e-12);
  }
}

TEST(Kernels, SphereParallelSeriesAtPi) {
  // phi = 1/(4 pi^2) + (a - pi)^2 / (24 pi^2) + 7 (a - pi)^4 / (1440 pi^2) + ...
  for (double u : {1e-3, 1e-2, 5e-2}) {
    const double a = pi - u;
    const double s = 1 / (4 * pi * pi) + u * u / (24 * pi * pi) + 7 * std::pow(u, 4) / (1440 * pi * pi);
    EXPECT_NEAR(phi(kS3P, a), s, 1e-4 * std::pow(u, 6) + 1e-16);
  }
}

TEST(Kernels, SphereParallelSingularExpansion) {
  // phi  = 1/(4 pi a) - 1/(4 pi^2) + a/(24 pi) - a^2/(24 pi^2) + O(a^3)
  // phi' = -1/(4 pi a^2) + 1/(24 pi) - a/(12 pi^2) + 7 a^2/(480 pi) + O(a^3)
  // phi''= 1/(2 pi a^3) - 1/(12 pi^2) + 7 a/(240 pi) - 7 a^2/(120 pi^2) + O(a^3)
  for (double a : {1e-1, 1e-2, 1e-3}) {
    const auto r = singular_remainders(kS3P, a);
    EXPECT_NEAR(r.f, -1 / (4 * pi * pi) + a / (24 * pi) - a * a / (24 * pi * pi), a * a * a);
    EXPECT_NEAR(r.g, 1 / (24 * pi) - a / (12 * pi * pi) + 7 * a * a / (480 * pi), a * a * a);
    EXPECT_NEAR(r.h, -1 / (12 * pi * pi) + 7 * a / (240 * pi) - 7 * a * a / (120 * pi * pi), a * a * a);
  }
}

TEST(Kernels, RemaindersAreBoundedAndContinuous) {
  for (const auto& f : {kS3L, kS3P, kH3}) {
    const double hi = f.space == Space::Sphere3 ? pi - 1e-3 : 5.0;
    for (double a : logspace(1e-6, hi, 200)) {
      const auto r = singular_remainders(f, a);
      EXPECT_LT(std::abs(r.f), 10.0);
      EXPECT_LT(std::abs(r.g), 10.0);
      EXPECT_LT(std::abs(r.h), 10.0);
    }
    const double a = kernel_detail::kSeriesRadius;
    const auto in = singular_remainders(f, std::nextafter(a, 0.0)), out = singular_remainders(f, a);
    EXPECT_NEAR(in.f, out.f, 1e-13);
    EXPECT_NEAR(in.g, out.g, 1e-12);
    EXPECT_NEAR(in.h, out.h, 1e-10);
  }
}

TEST(Kernels, RadialPdeResiduals) {
  EXPECT_NEAR(radial_pde_residual(kS3P, 1.0), 0.0, 1e-9);
  EXPECT_NEAR(radial_pde_residual(kH3, 2.0), 0.0, 1e-9);
  EXPECT_NEAR(laplacian_phi(kS3L, 1.0), 1 / (2 * pi * pi), 1e-9);
  EXPECT_NEAR(radial_pde_residual(kR3, 1.3), 0.0, 1e-15);
  for (const auto& f : {kS3L, kS3P, kH3})
    for (double a : logspace(1e-4, upper(f) - 1e-4, 100)) EXPECT_NEAR(radial_pde_residual(f, a), 0.0, 1e-9);
}

TEST(Kernels, LaplacianAgreesWithNumericDifferences) {
  for (const auto& f : {kS3L, kS3P, kH3}) {
    for (double a : {0.3, 1.0, 2.0}) {
      auto p = [&](double t) { return phi(f, t); };
      const double c = f.space == Space::Sphere3 ? std::cos(a) / std::sin(a) : 1 / std::tanh(a);
      const double lap = second_diff(p, a, 1e-4) + 2 * c * central_diff(p, a, 1e-4);
      EXPECT_NEAR(laplacian_phi(f, a), lap, 1e-6);
    }
  }
}

TEST(Kernels, Phi1Examples) {
  EXPECT_EQ(phi1(0.0), 0.0);
  EXPECT_NEAR(phi1(pi), -1.0 / 16, 1e-16);
  EXPECT_NEAR(phi1_prime(pi), 0.0, 1e-16);
  for (double a : {0.2, 1.0, 2.5})
    EXPECT_NEAR(phi1_prime(a), central_diff([](double t) { return phi1(t); }, a, 1e-5), 1e-10);
}

TEST(Kernels, Phi1LaplacianMinusPhi0IsConstant) {
  for (double a : logspace(1e-2, pi - 1e-2, 50)) {
    auto p = [](double t) { return phi1(t); };
    const double lap = second_diff(p, a, 1e-4) + 2 * std::cos(a) / std::sin(a) * central_diff(p, a, 1e-4);
    EXPECT_NEAR(lap - phi0(kS3L, a), kPhi1Constant, 1e-8);
  }
}

TEST(Kernels, Phi0IsNegatedPhi) {
  for (const auto& f : kAll)
    for (double a : {0.1, 1.0, 2.0}) {
      EXPECT_EQ(phi0(f, a), -phi(f, a));
      EXPECT_EQ(phi0_prime(f, a), -phi_prime(f, a));
    }
}

TEST(Kernels, PhiPrimeOverSineIsFiniteAtAntipode) {
  const double w = phi_prime_over_sine(kS3P, pi);
  EXPECT_TRUE(std::isfinite(w));
  // phi' ~ (a - pi)/(12 pi^2) and sin a ~ (pi - a), so w -> -1/(12 pi^2).
  EXPECT_NEAR(w, -1 / (12 * pi * pi), 1e-15);
  for (double a : {0.5, 1.5, 3.0})
    EXPECT_NEAR(phi_prime_over_sine(kS3P, a), phi_prime(kS3P, a) / std::sin(a), 1e-14);
}
