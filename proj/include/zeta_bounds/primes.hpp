#pragma once

// Direct prime sums used to check the explicit prime-sum inequalities (valid
// under RH) and the auxiliary constants feeding the S and S_1 envelopes.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zeta_bounds/bounds.hpp"
#include "zeta_bounds/errors.hpp"
#include "zeta_bounds/kahan.hpp"
#include "zeta_bounds/parallel.hpp"

namespace zeta_bounds {

/// Sieve of Eratosthenes over odd numbers, one bit per odd integer.
/// Immutable after construction.
class PrimeSieve {
 public:
  static constexpr std::uint64_t kDefaultCap = 100'000'000;

  explicit PrimeSieve(std::uint64_t limit, std::uint64_t cap = kDefaultCap) : limit_(limit) {
    if (limit < 2) throw DomainError("sieve limit must be at least 2");
    if (limit > cap) {
      throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds the cap " +
                          std::to_string(cap));
    }
    if (limit > std::numeric_limits<std::uint32_t>::max()) {
      throw ResourceError("sieve limit exceeds 2^32 - 1");
    }
    build();
  }

  std::uint64_t limit() const { return limit_; }
  std::span<std::uint32_t const> primes() const { return primes_; }

  bool is_prime(std::uint64_t n) const {
    if (n > limit_) throw RangeError("is_prime: argument exceeds sieve limit");
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    return !composite(n / 2);
  }

  /// Primes p <= X.
  std::span<std::uint32_t const> primes_up_to(double X) const {
    if (X > static_cast<double>(limit_)) {
      throw RangeError("argument " + std::to_string(X) + " exceeds sieve limit " +
                       std::to_string(limit_));
    }
    if (X < 2.0) return {};
    auto const bound = static_cast<std::uint32_t>(std::floor(X));
    auto const end = std::upper_bound(primes_.begin(), primes_.end(), bound);
    return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
  }

 private:
  bool composite(std::uint64_t odd_index) const {
    return (bits_[odd_index >> 6] >> (odd_index & 63)) & 1u;
  }

  void build() {
    std::uint64_t const odd_count = (limit_ - 1) / 2 + 1;  // 1, 3, ..., <= limit
    bits_.assign((odd_count + 63) / 64, 0);
    auto mark = [&](std::uint64_t i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); };
    mark(0);
    for (std::uint64_t p = 3; p * p <= limit_; p += 2) {
      if (composite(p / 2)) continue;
      for (std::uint64_t m = p * p; m <= limit_; m += 2 * p) mark(m / 2);
    }
    primes_.reserve(static_cast<std::size_t>(1.3 * limit_ / std::log(double(limit_) + 2)) + 8);
    primes_.push_back(2);
    for (std::uint64_t i = 1; i < odd_count; ++i) {
      if (!composite(i)) primes_.push_back(static_cast<std::uint32_t>(2 * i + 1));
    }
  }

  std::uint64_t limit_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> primes_;
};

inline PrimeSieve build_sieve(std::uint64_t limit, std::uint64_t cap = PrimeSieve::kDefaultCap) {
  return PrimeSieve(limit, cap);
}

/// Chebyshev theta(X) = sum of log p over p <= X.
inline double chebyshev_theta(PrimeSieve const& s, double X) {
  KahanSum<> sum;
  for (auto p : s.primes_up_to(X)) sum += std::log(double(p));
  return sum;
}

/// The six prime sums bounded under RH, in display order.
enum class PrimeSumKind {
  LogpSqrt,         // log p / sqrt p
  LogpLogratioSqrt, // log p log(X/p) / sqrt p
  InvSqrt,          // 1 / sqrt p
  InvSqrtLog,       // 1 / (sqrt p log p)
  LogratioSqrt,     // log(X/p) / sqrt p
  LogratioSqrtLog,  // log(X/p) / (sqrt p log p)
};

inline constexpr std::array<PrimeSumKind, 6> kAllPrimeSumKinds{
    PrimeSumKind::LogpSqrt,     PrimeSumKind::LogpLogratioSqrt, PrimeSumKind::InvSqrt,
    PrimeSumKind::InvSqrtLog,   PrimeSumKind::LogratioSqrt,     PrimeSumKind::LogratioSqrtLog};

inline std::string_view to_string(PrimeSumKind kind) {
  switch (kind) {
    case PrimeSumKind::LogpSqrt: return "LOGP_SQRT";
    case PrimeSumKind::LogpLogratioSqrt: return "LOGP_LOGRATIO_SQRT";
    case PrimeSumKind::InvSqrt: return "INV_SQRT";
    case PrimeSumKind::InvSqrtLog: return "INV_SQRT_LOG";
    case PrimeSumKind::LogratioSqrt: return "LOGRATIO_SQRT";
    case PrimeSumKind::LogratioSqrtLog: return "LOGRATIO_SQRT_LOG";
  }
  return "?";
}

inline double prime_sum(PrimeSieve const& s, PrimeSumKind kind, double X) {
  detail::require(X >= 2.0, "prime_sum: requires X >= 2");
  double const logX = std::log(X);
  KahanSum<> sum;
  for (auto prime : s.primes_up_to(X)) {
    double const p = prime;
    double const lp = std::log(p);
    double const sp = std::sqrt(p);
    double const ratio = logX - lp;
    switch (kind) {
      case PrimeSumKind::LogpSqrt: sum += lp / sp; break;
      case PrimeSumKind::LogpLogratioSqrt: sum += lp * ratio / sp; break;
      case PrimeSumKind::InvSqrt: sum += 1.0 / sp; break;
      case PrimeSumKind::InvSqrtLog: sum += 1.0 / (sp * lp); break;
      case PrimeSumKind::LogratioSqrt: sum += ratio / sp; break;
      case PrimeSumKind::LogratioSqrtLog: sum += ratio / (sp * lp); break;
    }
  }
  return sum;
}

/// Right-hand side of the RH bound for the selected prime sum.
inline double lemma33_rhs(PrimeSumKind kind, double X) {
  detail::require(X >= 2.0, "lemma33_rhs: requires X >= 2");
  double const l = std::log(X);
  double const ll = std::log(l);
  double const sx = std::sqrt(X);
  double const l2 = l * l;
  double const l3 = l2 * l;
  switch (kind) {
    case PrimeSumKind::LogpSqrt:
      return 2.0 * sx + l3 / (48.0 * kPi) + l2 / (8.0 * kPi) - 1.41;
    case PrimeSumKind::LogpLogratioSqrt:
      return 4.0 * sx + l2 * l2 / (192.0 * kPi) + l3 / (24.0 * kPi) - 1.416 * l - 4.679;
    case PrimeSumKind::InvSqrt:
      return 2.0 * sx / l + 4.0 * sx / l2 + 184.8 * sx / l3 + l2 / (32.0 * kPi) +
             l / (4.0 * kPi) - 13.84;
    case PrimeSumKind::InvSqrtLog:
      return 2.0 * sx / l2 + 92.4 * sx / l3 + l / (16.0 * kPi) + ll / (4.0 * kPi) - 2.888;
    case PrimeSumKind::LogratioSqrt:
      return 4.0 * sx / l + 184.8 * sx / l2 + l3 / (96.0 * kPi) + l2 / (8.0 * kPi) - 13.84 * l +
             1.417;
    case PrimeSumKind::LogratioSqrtLog:
      return 4.0 * sx / l2 + 3166.4 * sx / l3 + l2 / (32.0 * kPi) + l * ll / (4.0 * kPi) -
             36.94 * l + 81.8;
  }
  throw DomainError("lemma33_rhs: invalid kind");
}

/// RH bound theta(X) - X <= sqrt(X) log^2 X / (8 pi).
inline double theta_excess_bound(double X) {
  double const l = std::log(X);
  return std::sqrt(X) * l * l / (8.0 * kPi);
}

/// One inequality checked across a grid. pass[i] <=> direct[i] <= rhs[i].
struct SumCheckReport {
  std::string label;
  std::vector<double> grid;
  std::vector<double> direct;
  std::vector<double> rhs;
  std::vector<bool> pass;
  std::vector<double> margin;

  bool all_passed() const { return std::ranges::all_of(pass, [](bool b) { return b; }); }
  double min_margin() const {
    return margin.empty() ? 0.0 : *std::ranges::min_element(margin);
  }
};

/// Checks all six prime-sum inequalities plus the theta(X) - X bound at every
/// grid point. Failures are recorded, never thrown. Reports come back in
/// display order with the theta check last.
inline std::vector<SumCheckReport> verify_lemma33(PrimeSieve const& s,
                                                  std::span<double const> grid,
                                                  unsigned jobs = 1) {
  for (double X : grid) {
    detail::require(X >= 2.0, "verify_lemma33: grid points must be >= 2");
    if (X > double(s.limit())) throw RangeError("verify_lemma33: grid exceeds sieve limit");
  }
  std::vector<SumCheckReport> reports(kAllPrimeSumKinds.size() + 1);
  for (std::size_t k = 0; k < reports.size(); ++k) {
    auto& r = reports[k];
    r.label = k < kAllPrimeSumKinds.size() ? std::string(to_string(kAllPrimeSumKinds[k]))
                                           : std::string("THETA_EXCESS");
    r.grid.assign(grid.begin(), grid.end());
    r.direct.resize(grid.size());
    r.rhs.resize(grid.size());
    r.margin.resize(grid.size());
    r.pass.resize(grid.size());
  }
  std::size_t const cells = grid.size() * reports.size();
  parallel_for(cells, jobs, [&](std::size_t cell) {
    std::size_t const k = cell % reports.size();
    std::size_t const i = cell / reports.size();
    double const X = grid[i];
    auto& r = reports[k];
    if (k < kAllPrimeSumKinds.size()) {
      r.direct[i] = prime_sum(s, kAllPrimeSumKinds[k], X);
      r.rhs[i] = lemma33_rhs(kAllPrimeSumKinds[k], X);
    } else {
      r.direct[i] = chebyshev_theta(s, X) - X;
      r.rhs[i] = theta_excess_bound(X);
    }
    r.margin[i] = r.rhs[i] - r.direct[i];
  });
  // std::vector<bool> is not safe for concurrent writes.
  for (auto& r : reports) {
    for (std::size_t i = 0; i < grid.size(); ++i) r.pass[i] = r.direct[i] <= r.rhs[i];
  }
  return reports;
}

// ---------------------------------------------------------------------------
// Sums of the truncated von Mangoldt function Lambda_x(n)

enum class LambdaWeight {
  Sqrt,     // Lambda_x(n) / sqrt n
  SqrtLog,  // Lambda_x(n) / (sqrt n log n)
  SqrtLog2, // Lambda_x(n) / (sqrt n log^2 n)
};

/// Lambda_x(n) for n = p^r with log p given.
inline double lambda_x(double n, double log_p, double x) {
  if (n <= x) return log_p;
  return log_p * std::log(x * x / n) / std::log(x);
}

/// Direct sum over prime powers n <= x^2.
inline double lambda_x_sum(PrimeSieve const& s, double x, LambdaWeight weight) {
  detail::require(x >= 2.0, "lambda_x_sum: requires x >= 2");
  double const x2 = x * x;
  if (x2 > double(s.limit())) throw RangeError("lambda_x_sum: x^2 exceeds sieve limit");
  KahanSum<> sum;
  for (auto prime : s.primes_up_to(x2)) {
    double const p = prime;
    double const lp = std::log(p);
    double n = p;
    for (int r = 1; n <= x2; ++r, n *= p) {
      double const ln = r * lp;
      double term = lambda_x(n, lp, x) / std::sqrt(n);
      if (weight == LambdaWeight::SqrtLog) term /= ln;
      if (weight == LambdaWeight::SqrtLog2) term /= ln * ln;
      sum += term;
    }
  }
  return sum;
}

/// Upper bound for lambda_x_sum obtained by splitting into primes, squares of
/// primes and higher powers, then applying the prime-sum bounds together with
/// the Mertens-type constants.
inline double lambda_x_decomposition_bound(LambdaWeight weight, double x) {
  detail::require(x >= 2.0, "lambda_x_decomposition_bound: requires x >= 2");
  double const lx = std::log(x);
  double const x2 = x * x;
  switch (weight) {
    case LambdaWeight::Sqrt:
      return lemma33_rhs(PrimeSumKind::LogpSqrt, x) +
             lemma33_rhs(PrimeSumKind::LogpLogratioSqrt, x2) / lx + lx + 2.48;
    case LambdaWeight::SqrtLog:
      return lemma33_rhs(PrimeSumKind::InvSqrt, x) +
             lemma33_rhs(PrimeSumKind::LogratioSqrt, x2) / lx +
             0.5 * (std::log(lx) + 0.262 + 1.0 / (lx * lx)) + 2.12 / 3.0;
    case LambdaWeight::SqrtLog2:
      return lemma33_rhs(PrimeSumKind::InvSqrtLog, x) +
             lemma33_rhs(PrimeSumKind::LogratioSqrtLog, x2) / lx + 0.25 * 1.64 +
             2.12 / (9.0 * kLn2);
  }
  throw DomainError("lambda_x_decomposition_bound: invalid weight");
}

// ---------------------------------------------------------------------------
// Auxiliary constants

/// theta(x) < 1.01624 x for all x > 0 (Rosser and Schoenfeld).
inline constexpr double kChebyshevThetaRatio = 1.01624;

struct AuxiliaryCheck {
  std::string label;
  /// Direct truncated sum over p <= X.
  double direct;
  /// Bound on the omitted part (certified unless `tail_certified` is false).
  double tail;
  bool tail_certified;
  double bound;
  bool pass;
};

struct AuxiliaryReport {
  double X;
  std::vector<AuxiliaryCheck> checks;

  bool all_passed() const {
    return std::ranges::all_of(checks, [](auto const& c) { return c.pass; });
  }
};

namespace detail {

/// sum_{r >= 3} term(r, y) for y = p^{-1/2}, truncated once the geometric
/// remainder y^{R+1} / (1 - y) (times `tail_scale`) drops below 1e-12; that
/// remainder is added so the result stays an upper bound.
template <typename Term>
double higher_power_series(double y, double tail_scale, Term term) {
  KahanSum<> sum;
  double yr = y * y * y;
  for (int r = 3;; ++r, yr *= y) {
    sum += term(r, yr);
    double const remainder = yr * y / (1.0 - y) * tail_scale;
    if (remainder < 1e-12 || r >= 400) {
      sum += remainder;
      break;
    }
  }
  return sum;
}

}  // namespace detail

inline AuxiliaryReport auxiliary_prime_bounds(PrimeSieve const& s, double X) {
  detail::require(X >= 2.0, "auxiliary_prime_bounds: requires X >= 2");
  auto const primes = s.primes_up_to(X);
  double const lX = std::log(X);

  KahanSum<> theta, inv_p, logp_over_p, inv_p_logp, hp_log, hp_inv_r, hp_inv_r2_log;
  for (auto prime : primes) {
    double const p = prime;
    double const lp = std::log(p);
    double const y = 1.0 / std::sqrt(p);
    theta += lp;
    inv_p += 1.0 / p;
    logp_over_p += lp / p;
    inv_p_logp += 1.0 / (p * lp);
    hp_log += detail::higher_power_series(y, lp, [&](int, double yr) { return lp * yr; });
    hp_inv_r += detail::higher_power_series(y, 1.0 / 3.0, [](int r, double yr) { return yr / r; });
    hp_inv_r2_log += detail::higher_power_series(
        y, 1.0 / (9.0 * lp), [&](int r, double yr) { return yr / (double(r) * r * lp); });
  }

  // Primes above X: sum_{n > X} f(n) <= integral_X^inf f for decreasing f, and
  // the r >= 3 series at p is at most its r = 3 term / (1 - p^{-1/2}). The
  // log-weighted tail uses partial summation against theta with
  // theta(u) < 1.01624 u beyond X and the exact theta(X).
  double const geo = 1.0 / (1.0 - 1.0 / std::sqrt(X));
  double const sx = std::sqrt(X);
  double const tail_log = (3.0 * kChebyshevThetaRatio / sx - theta.value() / (X * sx)) * geo;
  double const tail_inv_r = 2.0 / (3.0 * sx) * geo;
  double const tail_inv_r2_log = 2.0 / (9.0 * sx * lX) * geo;

  AuxiliaryReport report{X, {}};
  auto add = [&](std::string label, double direct, double tail, bool certified, double bound) {
    report.checks.push_back({std::move(label), direct, tail, certified, bound,
                             direct + tail <= bound});
  };
  add("sum_{p<=X} 1/p <= loglog X + 0.262 + 1/log^2 X", inv_p, 0.0, true,
      std::log(lX) + 0.262 + 1.0 / (lX * lX));
  add("sum_{p<=X} log p/p <= log X", logp_over_p, 0.0, true, lX);
  // The tail of sum 1/(p log p) decays like 1/log X; the asymptotic value is
  // reported but cannot be certified at desk scale.
  add("sum_p 1/(p log p) <= 1.64", inv_p_logp, 1.0 / lX, false, 1.64);
  add("sum_{r>=3} sum_p log p/p^{r/2} <= 2.48", hp_log, tail_log, true, 2.48);
  add("sum_{r>=3} sum_p 1/(r p^{r/2}) <= 2.12/3", hp_inv_r, tail_inv_r, true, 2.12 / 3.0);
  add("sum_{r>=3} sum_p 1/(r^2 p^{r/2} log p) <= 2.12/(9 log 2)", hp_inv_r2_log,
      tail_inv_r2_log, true, 2.12 / (9.0 * kLn2));
  return report;
}

}  // namespace zeta_bounds
