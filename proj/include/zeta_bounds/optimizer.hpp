#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "zeta_bounds/bounds.hpp"
#include "zeta_bounds/errors.hpp"
#include "zeta_bounds/parallel.hpp"

namespace zeta_bounds {

// ---------------------------------------------------------------------------
// Golden-section minimisation

struct ScalarMinResult {
  double argmin;
  double min_value;
  std::pair<double, double> bracket;
  int iterations;
};

/// Golden-section search on [lo, hi]. Assumes the objective is unimodal there.
template <typename F>
ScalarMinResult minimize_scalar(F&& objective, double lo, double hi, double tol = 1e-9,
                                int max_iterations = 500) {
  detail::require(lo < hi, "minimize_scalar: requires lo < hi");
  detail::require(tol > 0.0, "minimize_scalar: requires tol > 0");
  double const inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  int iterations = 0;
  while (b - a > tol) {
    if (++iterations > max_iterations) {
      throw NonConvergenceError("minimize_scalar: iteration limit reached");
    }
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = objective(d);
    }
  }
  double const x = 0.5 * (a + b);
  return {x, objective(x), {lo, hi}, iterations};
}

/// Minimum of b_1 (kind S) or b_2 (kind S1) over alpha in [1, 2].
inline ScalarMinResult minimize_b(BoundKind kind, double tol = 1e-9) {
  detail::require(kind != BoundKind::Zeta, "minimize_b: kind must be S or S1");
  return minimize_scalar([kind](double alpha) { return b_coefficient(kind, alpha); }, 1.0, 2.0,
                         tol);
}

// ---------------------------------------------------------------------------
// Crossover between conditional and unconditional bounds

struct CrossoverResult {
  BoundKind kind;
  double alpha;
  double lambda;
  /// Threshold as log10 t.
  double x10;
  /// conditional - unconditional at x10.
  double residual;
};

struct CrossoverBracket {
  double lo = 1.2;
  double hi = 1e5;
  /// Points in the downward log-spaced scan for the last sign change.
  int scan_points = 4000;
};

namespace detail {

/// Smallest log10 t at which the composition parameters are admissible.
inline double feasible_floor_x10(BoundKind kind, double lambda) {
  detail::require(lambda > 0.0, "crossover requires lambda > 0");
  double const min_log_log = kind == BoundKind::Zeta ? kLn2 / lambda : 4.0 / (3.0 * lambda);
  double const min_log = std::max(std::exp(min_log_log), std::log(10.0));
  // Nudge upwards so the window test is not decided by rounding.
  return min_log / kLn10 * (1.0 + 1e-12);
}

inline std::optional<double> crossover_gap(CompositionParams const& cp, Comparator variant,
                                           double x10) {
  try {
    auto const h = LogHeight::from_log10(x10);
    return conditional_bound(cp, h) - unconditional_bound(cp.kind, h, variant);
  } catch (DomainError const&) {
    return std::nullopt;
  }
}

}  // namespace detail

/// Largest x10 in the bracket where conditional - unconditional changes sign,
/// located by a downward scan and refined by bisection.
inline CrossoverResult solve_crossover(BoundKind kind, double alpha, double lambda,
                                       Comparator variant = Comparator::Standard,
                                       CrossoverBracket bracket = {}) {
  detail::require(bracket.lo < bracket.hi && bracket.lo > 0.0,
                  "solve_crossover: requires 0 < lo < hi");
  detail::require(bracket.scan_points >= 2, "solve_crossover: requires at least two scan points");
  auto const [win_lo, win_hi] = kind == BoundKind::Zeta ? std::pair{0.0, 2.0} : std::pair{0.0, 1.0};
  detail::require(lambda > win_lo && lambda < win_hi, "solve_crossover: lambda outside its window");
  CompositionParams const cp{alpha, lambda, kind};
  // Surface parameter errors that do not depend on the height.
  detail::validate(cp, LogHeight::from_log10(bracket.hi));

  double const lo = std::max(bracket.lo, detail::feasible_floor_x10(kind, lambda));
  double const hi = bracket.hi;
  if (!(lo < hi)) throw NoRootError("solve_crossover: no admissible heights in the bracket");

  auto g = [&](double x10) { return detail::crossover_gap(cp, variant, x10); };
  auto const top = g(hi);
  if (!top) throw NoRootError("solve_crossover: bound not defined at the top of the bracket");
  if (*top >= 0.0) {
    throw NoRootError("solve_crossover: conditional bound is not better at the top of the bracket");
  }

  double const step = std::log(hi / lo) / (bracket.scan_points - 1);
  double upper = hi;
  std::optional<double> lower;
  for (int i = 1; i < bracket.scan_points; ++i) {
    double const x10 = i + 1 == bracket.scan_points ? lo : hi * std::exp(-step * i);
    auto const v = g(x10);
    if (!v) break;
    if (*v >= 0.0) {
      lower = x10;
      break;
    }
    upper = x10;
  }
  if (!lower) throw NoRootError("solve_crossover: no sign change in the bracket");

  double a = *lower;
  double b = upper;
  for (int i = 0; i < 200 && b - a > 4.0 * std::numeric_limits<double>::epsilon() * b; ++i) {
    double const mid = 0.5 * (a + b);
    if (*g(mid) >= 0.0) {
      a = mid;
    } else {
      b = mid;
    }
  }
  // Report the endpoint with the smaller residual.
  double const ga = *g(a);
  double const gb = *g(b);
  if (std::abs(ga) < std::abs(gb)) return {kind, alpha, lambda, a, ga};
  return {kind, alpha, lambda, b, gb};
}

// ---------------------------------------------------------------------------
// Search over (alpha, lambda)

struct OptimizeOptions {
  double alpha_lo;
  double alpha_hi;
  double lambda_lo;
  double lambda_hi;
  int alpha_points = 21;
  int lambda_points = 21;
  double alpha_step = 0.01;
  double lambda_step = 0.005;
  double min_step = 1e-4;
  unsigned jobs = 0;
  CrossoverBracket bracket{};
};

/// Default search box: alpha in [1, 2] (S, S1) or [0.49123, 2] (ZETA); lambda
/// inside the open window.
inline OptimizeOptions default_optimize_options(BoundKind kind) {
  if (kind == BoundKind::Zeta) return {kZetaAlphaMin, 2.0, 0.5, 1.99};
  return {1.0, 2.0, 0.3, 0.99};
}

namespace detail {

struct Candidate {
  double x10 = std::numeric_limits<double>::infinity();
  double alpha = 0.0;
  double lambda = 0.0;
  double residual = 0.0;

  bool better_than(Candidate const& o) const {
    if (x10 != o.x10) return x10 < o.x10;
    if (alpha != o.alpha) return alpha < o.alpha;
    return lambda < o.lambda;
  }
};

inline Candidate evaluate_cell(BoundKind kind, Comparator variant, double alpha, double lambda,
                               OptimizeOptions const& opt) {
  Candidate c{std::numeric_limits<double>::infinity(), alpha, lambda, 0.0};
  if (alpha < opt.alpha_lo || alpha > opt.alpha_hi) return c;
  if (lambda < opt.lambda_lo || lambda > opt.lambda_hi) return c;
  try {
    auto const r = solve_crossover(kind, alpha, lambda, variant, opt.bracket);
    c.x10 = r.x10;
    c.residual = r.residual;
  } catch (NoRootError const&) {
  } catch (DomainError const&) {
  }
  return c;
}

inline double grid_value(double lo, double hi, int points, int i) {
  return points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
}

}  // namespace detail

/// Minimises the crossover x10 over (alpha, lambda): a coarse grid evaluated
/// in parallel, then compass pattern search from the best cell. Infeasible
/// cells count as +infinity; ties go to the smaller alpha, then lambda.
inline CrossoverResult optimize_crossover(BoundKind kind, Comparator variant,
                                          OptimizeOptions const& opt) {
  detail::require(opt.alpha_lo <= opt.alpha_hi && opt.lambda_lo <= opt.lambda_hi,
                  "optimize_crossover: empty search box");
  detail::require(opt.alpha_points >= 1 && opt.lambda_points >= 1,
                  "optimize_crossover: grid needs at least one point per axis");
  detail::require(opt.min_step > 0.0 && opt.alpha_step > 0.0 && opt.lambda_step > 0.0,
                  "optimize_crossover: steps must be positive");

  std::size_t const cells = static_cast<std::size_t>(opt.alpha_points) * opt.lambda_points;
  std::vector<detail::Candidate> grid(cells);
  parallel_for(cells, opt.jobs, [&](std::size_t k) {
    int const i = static_cast<int>(k / opt.lambda_points);
    int const j = static_cast<int>(k % opt.lambda_points);
    grid[k] = detail::evaluate_cell(
        kind, variant, detail::grid_value(opt.alpha_lo, opt.alpha_hi, opt.alpha_points, i),
        detail::grid_value(opt.lambda_lo, opt.lambda_hi, opt.lambda_points, j), opt);
  });
  detail::Candidate best = grid.front();
  for (auto const& c : grid) {
    if (c.better_than(best)) best = c;
  }
  if (!std::isfinite(best.x10)) {
    throw NoRootError("optimize_crossover: no feasible cell in the search grid");
  }

  double da = opt.alpha_step;
  double dl = opt.lambda_step;
  while (da >= opt.min_step || dl >= opt.min_step) {
    std::array<std::pair<double, double>, 4> const moves{
        {{best.alpha - da, best.lambda}, {best.alpha + da, best.lambda},
         {best.alpha, best.lambda - dl}, {best.alpha, best.lambda + dl}}};
    std::array<detail::Candidate, 4> trial;
    parallel_for(moves.size(), opt.jobs, [&](std::size_t k) {
      trial[k] = detail::evaluate_cell(kind, variant, moves[k].first, moves[k].second, opt);
    });
    bool improved = false;
    for (auto const& c : trial) {
      if (c.x10 < best.x10) {
        best = c;
        improved = true;
      }
    }
    if (!improved) {
      da /= 2.0;
      dl /= 2.0;
    }
  }
  return {kind, best.alpha, best.lambda, best.x10, best.residual};
}

inline CrossoverResult optimize_crossover(BoundKind kind,
                                          Comparator variant = Comparator::Standard) {
  return optimize_crossover(kind, variant, default_optimize_options(kind));
}

// ---------------------------------------------------------------------------
// The two-regime argument behind the global constants

struct Corollary12Report {
  BoundKind kind;
  double constant;
  double threshold_x10;
  /// M-value of the main theorem at its threshold.
  double m_at_threshold;
  bool m_pass;
  int scan_points;
  double scan_lo_x10;
  /// Largest unconditional / (log t / (log log t)^k) seen on the scan.
  double scan_max_ratio;
  double scan_argmax_x10;
  int scan_failures;
  /// First x10 on the scan where the ratio exceeds the constant, if any.
  std::optional<double> first_failure_x10;

  bool passed() const { return m_pass && scan_failures == 0; }
};

/// Checks that the theorem's M-value at its threshold is at most the global
/// constant, and that below the threshold (down to t = 2 pi) the unconditional
/// bound, normalised by log t / (log log t)^k, is too.
inline Corollary12Report verify_corollary_1_2(BoundKind kind, int points = 10'000,
                                              Comparator variant = Comparator::Standard) {
  detail::require(points >= 2, "verify_corollary_1_2: requires at least two grid points");
  auto const& coef = theorem_coefficients(kind);
  double const constant = global_constant(kind);
  auto const threshold = LogHeight::from_log10(coef.t_min_log10);

  Corollary12Report r{};
  r.kind = kind;
  r.constant = constant;
  r.threshold_x10 = coef.t_min_log10;
  r.m_at_threshold = m_value(coef, threshold);
  r.m_pass = r.m_at_threshold <= constant;
  r.scan_points = points;
  r.scan_lo_x10 = kLog2Pi / kLn10;
  r.scan_max_ratio = -std::numeric_limits<double>::infinity();

  double const lo = std::log(kLog2Pi);
  double const hi = threshold.log_log();
  for (int i = 0; i < points; ++i) {
    // Grid uniform in log log t, which is log-spaced in log t.
    double const ll = i + 1 == points ? hi : lo + (hi - lo) * i / (points - 1);
    auto const h = i == 0 ? LogHeight::from_log(kLog2Pi) : LogHeight::from_log(std::exp(ll));
    double const ratio = unconditional_bound(kind, h, variant) / bound_scale(kind, h);
    if (ratio > r.scan_max_ratio) {
      r.scan_max_ratio = ratio;
      r.scan_argmax_x10 = h.log10();
    }
    if (ratio > constant) {
      ++r.scan_failures;
      if (!r.first_failure_x10) r.first_failure_x10 = h.log10();
    }
  }
  return r;
}

}  // namespace zeta_bounds
