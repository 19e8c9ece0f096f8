#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "zeta_bounds/quadrature.hpp"

namespace zb = zeta_bounds;

namespace {

// Composite Simpson with a fixed panel count.
template <typename F>
double simpson(F f, double a, double b, int panels) {
  double const h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// zeta(s) for real s > 1/2 by Euler-Maclaurin with N = 20 and six Bernoulli
// corrections.
double zeta_euler_maclaurin(double s) {
  constexpr int N = 20;
  double sum = 0.0;
  for (int n = 1; n < N; ++n) sum += std::pow(n, -s);
  double const nn = N;
  sum += std::pow(nn, 1 - s) / (s - 1) + 0.5 * std::pow(nn, -s);
  constexpr double B[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730};
  double rising = s;  // s (s+1) ... (s+2k-2)
  double fact = 2.0;  // (2k)!
  for (int k = 1; k <= 6; ++k) {
    sum += B[k - 1] / fact * rising * std::pow(nn, -s - 2 * k + 1);
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    fact *= (2 * k + 1) * (2 * k + 2);
  }
  return sum;
}

}  // namespace

TEST(AdaptiveIntegral, PolynomialExactness) {
  auto const r = zb::adaptive_integral([](double x) { return x * x; }, 0.0, 1.0, 1e-10);
  EXPECT_NEAR(r.value, 1.0 / 3.0, 1e-10);
  EXPECT_GE(r.error_estimate, 0.0);
  EXPECT_EQ(r.subdivisions, 0);
}

TEST(AdaptiveIntegral, Preconditions) {
  auto f = [](double x) { return x; };
  EXPECT_THROW(zb::adaptive_integral(f, 1.0, 1.0, 1e-8), zb::DomainError);
  EXPECT_THROW(zb::adaptive_integral(f, 2.0, 1.0, 1e-8), zb::DomainError);
  EXPECT_THROW(zb::adaptive_integral(f, 0.0, 1.0, 0.0), zb::DomainError);
  EXPECT_THROW(zb::adaptive_integral([](double x) { return 1.0 / x; }, -1.0, 1.0, 1e-8), zb::DomainError);
}

TEST(AdaptiveIntegral, SubdivisionLimit) {
  auto wild = [](double x) { return std::sin(1.0 / x); };
  EXPECT_THROW(zb::adaptive_integral(wild, 1e-9, 1.0, 1e-14, 50), zb::NonConvergenceError);
}

TEST(AdaptiveIntegral, AgreesWithSimpsonOracle) {
  auto f = [](double y) { return 1.0 / (std::sqrt(y) * std::pow(std::log(y), 3)); };
  double const oracle = simpson(f, 2.0, 100.0, 1'000'000);
  auto const r = zb::adaptive_integral(f, 2.0, 100.0, 1e-12);
  EXPECT_NEAR(r.value, oracle, 1e-9);
  EXPECT_NEAR(r.value, 1.986808, 1e-6);
}

TEST(AdaptiveIntegral, LogPowerAntiderivatives) {
  for (double X : {3.0, 100.0, 1e6, 1e12}) {
    for (int n = 0; n <= 3; ++n) {
      auto f = [n](double y) { return std::pow(std::log(y), n) / y; };
      double const exact = (std::pow(std::log(X), n + 1) - std::pow(std::log(2.0), n + 1)) / (n + 1);
      double const got = zb::adaptive_integral(f, 2.0, X, 1e-12).value;
      EXPECT_NEAR(got / exact, 1.0, 1e-10) << n << " " << X;
    }
  }
}

TEST(AdaptiveIntegral, IntegrationByPartsIdentity) {
  // int dy/(sqrt y log^3 y) = 2 sqrt X/log^3 X - 2 sqrt 2/log^3 2 + 6 int dy/(sqrt y log^4 y)
  double const X = 1e5;
  auto f3 = [](double y) { return 1.0 / (std::sqrt(y) * std::pow(std::log(y), 3)); };
  auto f4 = [](double y) { return 1.0 / (std::sqrt(y) * std::pow(std::log(y), 4)); };
  double const lhs = zb::adaptive_integral(f3, 2.0, X, 1e-13).value;
  double const rhs = 2 * std::sqrt(X) / std::pow(std::log(X), 3) - 2 * std::sqrt(2.0) / std::pow(std::log(2.0), 3) +
                     6 * zb::adaptive_integral(f4, 2.0, X, 1e-13).value;
  EXPECT_NEAR(lhs, rhs, 1e-9);
}

TEST(Lemma31, Values) {
  EXPECT_NEAR(zb::lemma31_lhs(2.0 + 1e-12), 0.0, 1e-9);
  EXPECT_LT(zb::lemma31_lhs(2.0 + 1e-6), 1e-5);
  double const at100 = zb::lemma31_lhs(100.0);
  EXPECT_NEAR(at100, 19.40408, 1e-4);
  EXPECT_LT(at100, 23.1);
  EXPECT_LT(zb::lemma31_lhs(1e12), 23.1);
  EXPECT_THROW(zb::lemma31_lhs(2.0), zb::DomainError);
}

TEST(Lemma31, SubstitutionAgreesWithDirectIntegral) {
  for (double x : {5.0, 100.0, 1e4}) {
    auto f = [](double y) { return 1.0 / (std::sqrt(y) * std::pow(std::log(y), 3)); };
    double const direct =
        std::pow(std::log(x), 3) / std::sqrt(x) * simpson(f, 2.0, x, 2'000'000);
    EXPECT_NEAR(zb::lemma31_lhs(x), direct, 1e-7 * direct) << x;
  }
}

TEST(Lemma32, Values) {
  EXPECT_NEAR(zb::lemma32_lhs(2.0 + 1e-12), 0.0, 1e-9);
  EXPECT_LT(zb::lemma32_lhs(1e12), 132.6);
  EXPECT_GT(zb::lemma32_lhs(1e12), zb::lemma31_lhs(1e12));
}

TEST(Parametric, ConstantTermsAtChosenX0) {
  // At x = x0 the decay factor vanishes only asymptotically; check the first
  // term by subtracting the second.
  double const x = 1e26;
  double const lx = std::log(x);
  double const r3 = std::log(zb::kLemma31X0) / std::log(2.0);
  double const second3 = 2 / std::pow(std::log(2.0), 3) * std::exp(-0.5 * (1 - 1 / r3) * lx) * std::pow(lx, 3);
  EXPECT_NEAR(zb::lemma31_parametric_rhs(x, zb::kLemma31X0) - second3, 23.0, 1e-11);
  double const r4 = std::log(zb::kLemma32X0) / std::log(2.0);
  double const second4 = 2 / std::pow(std::log(2.0), 4) * std::exp(-0.5 * (1 - 1 / r4) * lx) * std::pow(lx, 4);
  EXPECT_NEAR(zb::lemma32_parametric_rhs(x, zb::kLemma32X0) - second4, 132.0, 1e-10);
}

TEST(Parametric, BelowConstantsBeyond1e26) {
  EXPECT_LE(zb::lemma31_parametric_rhs(1e26, zb::kLemma31X0), 23.1);
  EXPECT_LE(zb::lemma32_parametric_rhs(1e26, zb::kLemma32X0), 132.6);
  EXPECT_LT(zb::lemma31_parametric_rhs(1e30, zb::kLemma31X0), zb::lemma31_parametric_rhs(1e26, zb::kLemma31X0));
  for (double e = 26; e <= 100; e += 0.5) {
    double const x = std::pow(10.0, e);
    EXPECT_LE(zb::lemma31_parametric_rhs(x, zb::kLemma31X0), 23.1) << e;
    EXPECT_LE(zb::lemma32_parametric_rhs(x, zb::kLemma32X0), 132.6) << e;
  }
}

TEST(Parametric, Preconditions) {
  EXPECT_THROW(zb::lemma31_parametric_rhs(100.0, 1.9), zb::DomainError);
  EXPECT_THROW(zb::lemma31_parametric_rhs(100.0, 101.0), zb::DomainError);
  EXPECT_NO_THROW(zb::lemma32_parametric_rhs(100.0, 100.0));
}

TEST(Parametric, MajorisesQuadrature) {
  for (double x : {1e3, 1e6, 1e9, 1e12}) {
    EXPECT_LE(zb::lemma31_lhs(x), zb::lemma31_parametric_rhs(x, zb::kLemma31X0)) << x;
    EXPECT_LE(zb::lemma32_lhs(x), zb::lemma32_parametric_rhs(x, zb::kLemma32X0)) << x;
  }
}

TEST(RealZeta, KnownValues) {
  double const pi = std::numbers::pi;
  EXPECT_NEAR(zb::real_zeta(2.0), pi * pi / 6, 1e-14);
  EXPECT_NEAR(zb::real_zeta(4.0), std::pow(pi, 4) / 90, 1e-14);
  EXPECT_NEAR(zb::real_zeta(0.5), -1.4603545088095868, 1e-13);
  EXPECT_NEAR(zb::log_abs_zeta(2.0), 0.4977, 1e-4);
  EXPECT_NEAR(zb::log_abs_zeta(2.0), std::log(pi * pi / 6), 1e-14);
  EXPECT_THROW(zb::real_zeta(1.0), zb::DomainError);
  EXPECT_THROW(zb::real_zeta(0.0), zb::DomainError);
}

TEST(RealZeta, AgreesWithEulerMaclaurin) {
  for (double s = 0.55; s < 30; s += 0.37) {
    if (std::abs(s - 1) < 1e-3) continue;
    EXPECT_NEAR(zb::real_zeta(s), zeta_euler_maclaurin(s), 1e-11 * std::abs(zeta_euler_maclaurin(s))) << s;
  }
  // Close to the pole the factor 1 - 2^{1-s} must not cancel.
  for (double d : {1e-3, 1e-6}) {
    EXPECT_NEAR(zb::real_zeta(1 + d) * d, 1.0 + 0.5772156649 * d, 1e-7);
  }
}

TEST(PrincipalValue, ConstantAndStability) {
  auto const r = zb::pv_logzeta_integral(1e-10);
  EXPECT_NEAR(r.value, 2.56779, 1e-4);
  EXPECT_LE((std::abs(r.value) + r.error_bound) / std::numbers::pi, 0.82);
  EXPECT_LT(r.excision_delta, 1e-4);
  auto const longer = zb::pv_logzeta_integral(1e-10, 1e-3, 80.0);
  EXPECT_NEAR(longer.value, r.value, 1e-10);
  EXPECT_LT(r.tail_bound, 1e-11);
  EXPECT_THROW(zb::pv_logzeta_integral(0.0), zb::DomainError);
}
