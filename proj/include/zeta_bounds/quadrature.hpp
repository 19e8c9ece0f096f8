#pragma once

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "zeta_bounds/bounds.hpp"
#include "zeta_bounds/errors.hpp"
#include "zeta_bounds/kahan.hpp"

namespace zeta_bounds {

struct IntegralResult {
  double value;
  double error_estimate;
  int subdivisions;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the nodes kKronrodNodes[1], [3], [5], [7].
inline constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  int depth;

  bool operator<(Panel const& other) const { return error < other.error; }
};

template <typename F>
Panel gauss_kronrod(F& f, double a, double b, int depth) {
  double const centre = 0.5 * (a + b);
  double const half = 0.5 * (b - a);
  double const fc = f(centre);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double const dx = half * kKronrodNodes[i];
    double const pair = f(centre - dx) + f(centre + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  if (!std::isfinite(kronrod)) throw DomainError("adaptive_integral: integrand is not finite");
  return {a, b, kronrod, std::abs(kronrod - gauss), depth};
}

}  // namespace detail

/// Global adaptive Gauss-Kronrod quadrature. Stops when the summed panel
/// error estimate is at most max(tol |value|, tol).
template <typename F>
IntegralResult adaptive_integral(F&& f, double a, double b, double tol,
                                 int max_subdivisions = 50'000) {
  detail::require(a < b, "adaptive_integral: requires a < b");
  detail::require(tol > 0.0, "adaptive_integral: requires tol > 0");
  constexpr int kMaxDepth = 60;

  std::priority_queue<detail::Panel> panels;
  panels.push(detail::gauss_kronrod(f, a, b, 0));
  double value = panels.top().value;
  double error = panels.top().error;
  int subdivisions = 0;

  while (error > std::max(tol * std::abs(value), tol)) {
    auto const worst = panels.top();
    if (worst.depth >= kMaxDepth || subdivisions >= max_subdivisions) {
      throw NonConvergenceError("adaptive_integral: subdivision limit reached");
    }
    panels.pop();
    double const mid = 0.5 * (worst.a + worst.b);
    auto const left = detail::gauss_kronrod(f, worst.a, mid, worst.depth + 1);
    auto const right = detail::gauss_kronrod(f, mid, worst.b, worst.depth + 1);
    panels.push(left);
    panels.push(right);
    ++subdivisions;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
  }
  // Re-sum so cancellation in the running totals does not leak into the result.
  KahanSum<> v, e;
  while (!panels.empty()) {
    v += panels.top().value;
    e += panels.top().error;
    panels.pop();
  }
  return {v.value(), e.value(), subdivisions};
}

// ---------------------------------------------------------------------------
// (log^k x / sqrt x) * integral_2^x dy / (sqrt y log^k y)

/// The normalised integral for k = 3 or 4. With u = log y the integrand
/// becomes exp((u - log x)/2) (log x / u)^k, which is bounded by
/// (log x / log 2)^k and flat at large x.
inline double normalised_log_integral(double x, int k, double tol = 1e-11) {
  detail::require(x > 2.0, "normalised log integral requires x > 2");
  double const lx = std::log(x);
  auto integrand = [lx, k](double u) { return std::exp(0.5 * (u - lx)) * std::pow(lx / u, k); };
  return adaptive_integral(integrand, kLn2, lx, tol).value;
}

inline double lemma31_lhs(double x, double tol = 1e-11) { return normalised_log_integral(x, 3, tol); }
inline double lemma32_lhs(double x, double tol = 1e-11) { return normalised_log_integral(x, 4, tol); }

inline constexpr double kLemma31Constant = 23.1;
inline constexpr double kLemma32Constant = 132.6;

/// Closed-form majorant of the normalised integral for 2 <= x0 <= x:
///   2 (log x0/log 2)^k + 2/log^k 2 * x^{-(1 - log 2/log x0)/2} log^k x.
inline double parametric_log_integral_bound(double x, double x0, int k) {
  detail::require(x0 >= 2.0, "parametric bound requires x0 >= 2");
  detail::require(x0 <= x, "parametric bound requires x0 <= x");
  double const lx = std::log(x);
  double const ratio = std::log(x0) / kLn2;
  double const decay = std::exp(-0.5 * (1.0 - 1.0 / ratio) * lx);
  return 2.0 * std::pow(ratio, k) + 2.0 / std::pow(kLn2, k) * decay * std::pow(lx, k);
}

inline double lemma31_parametric_rhs(double x, double x0) {
  return parametric_log_integral_bound(x, x0, 3);
}
inline double lemma32_parametric_rhs(double x, double x0) {
  return parametric_log_integral_bound(x, x0, 4);
}

/// x0 with log x0 = (23/2)^{1/3} log 2, making the constant term exactly 23.
inline double const kLemma31X0 = std::exp(std::cbrt(23.0 / 2.0) * kLn2);
/// x0 with log x0 = (132/2)^{1/4} log 2, making the constant term exactly 132.
inline double const kLemma32X0 = std::exp(std::pow(132.0 / 2.0, 0.25) * kLn2);

// ---------------------------------------------------------------------------
// zeta on the real axis

/// Dirichlet eta(s) for real s > 0 by the Borwein acceleration of the
/// alternating series; error at most 3 / (3 + sqrt 8)^n.
inline double dirichlet_eta(double s, int n = 48) {
  detail::require(s > 0.0, "dirichlet_eta: requires s > 0");
  // d_k / d_n as weights; d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!).
  std::vector<double> d(n + 1);
  double term = 1.0;
  double partial = term;
  d[0] = partial;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
    partial += term;
    d[i] = partial;
  }
  KahanSum<> sum;
  for (int k = 0; k < n; ++k) {
    double const weight = 1.0 - d[k] / d[n];
    double const v = weight * std::exp(-s * std::log(k + 1.0));
    sum += (k % 2 == 0) ? v : -v;
  }
  return sum;
}

/// zeta(sigma) for real sigma > 0, sigma != 1.
inline double real_zeta(double sigma) {
  detail::require(sigma > 0.0 && sigma != 1.0, "real_zeta: requires sigma > 0, sigma != 1");
  if (sigma > 60.0) return 1.0 + std::exp2(-sigma);
  // 1 - 2^{1-sigma} without cancellation near sigma = 1.
  double const factor = -std::expm1((1.0 - sigma) * kLn2);
  return dirichlet_eta(sigma) / factor;
}

inline double log_abs_zeta(double sigma) { return std::log(std::abs(real_zeta(sigma))); }

struct PrincipalValueResult {
  double value;
  /// Quadrature error estimates plus the local-expansion and tail bounds.
  double error_bound;
  /// |value(epsilon) - value(epsilon / 2)|.
  double excision_delta;
  /// Bound on the omitted integral over [cutoff, inf).
  double tail_bound;
  double epsilon;
  double cutoff;
};

namespace detail {

struct PvPiece {
  double value;
  double error;
};

inline PvPiece pv_with_excision(double epsilon, double cutoff, double tol) {
  auto f = [](double s) { return log_abs_zeta(s); };
  auto const left = adaptive_integral(f, 0.5, 1.0 - epsilon, tol);
  auto const right = adaptive_integral(f, 1.0 + epsilon, cutoff, tol);
  // Near the pole log|zeta(s)| = -log|s - 1| + gamma (s - 1) + O((s-1)^2); the
  // odd term cancels over the symmetric excision.
  double const excised = 2.0 * epsilon * (1.0 - std::log(epsilon));
  double const local_error = std::pow(epsilon, 3);
  return {left.value + right.value + excised, left.error_estimate + right.error_estimate + local_error};
}

}  // namespace detail

/// Principal value of integral_{1/2}^inf log|zeta(sigma)| d sigma.
inline PrincipalValueResult pv_logzeta_integral(double tol = 1e-10, double epsilon = 1e-3,
                                                double cutoff = 40.0) {
  detail::require(tol > 0.0, "pv_logzeta_integral: requires tol > 0");
  detail::require(epsilon > 0.0 && epsilon < 0.25, "pv_logzeta_integral: requires 0 < epsilon < 1/4");
  detail::require(cutoff >= 4.0, "pv_logzeta_integral: requires cutoff >= 4");
  auto const full = detail::pv_with_excision(epsilon, cutoff, tol);
  auto const halved = detail::pv_with_excision(epsilon / 2.0, cutoff, tol);
  // |log zeta(sigma)| <= 2 * 2^{-sigma} for sigma >= 2.
  double const tail = 2.0 * std::exp2(-cutoff) / kLn2;
  return {full.value, full.error + tail, std::abs(full.value - halved.value), tail, epsilon, cutoff};
}

}  // namespace zeta_bounds
