#pragma once

#include <zlib.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zeta_bounds/bounds.hpp"
#include "zeta_bounds/errors.hpp"
#include "zeta_bounds/kahan.hpp"
#include "zeta_bounds/parallel.hpp"
#include "zeta_bounds/quadrature.hpp"

namespace zeta_bounds {

// ---------------------------------------------------------------------------
// Zero tables

inline constexpr double kFirstOrdinate = 14.134725141734693;

class ZeroTable {
 public:
  ZeroTable() = default;

  /// Validates ordering and the first ordinate; an empty list is allowed.
  static ZeroTable from_ordinates(std::vector<double> ordinates, std::string source = {}) {
    for (std::size_t i = 0; i < ordinates.size(); ++i) {
      double const g = ordinates[i];
      if (!std::isfinite(g) || !(g > 0.0)) {
        throw ParseError("ordinate must be a positive number", i + 1);
      }
      if (i > 0 && !(g > ordinates[i - 1])) {
        throw OrderError("ordinates must be strictly increasing", i + 1);
      }
    }
    if (!ordinates.empty() && std::abs(ordinates.front() - kFirstOrdinate) > 1e-5) {
      throw ParseError("first ordinate must be 14.134725 (the lowest zero)", 1);
    }
    ZeroTable z;
    z.ordinates_ = std::move(ordinates);
    z.source_ = std::move(source);
    return z;
  }

  std::span<double const> ordinates() const { return ordinates_; }
  std::string const& source() const { return source_; }
  std::size_t count() const { return ordinates_.size(); }
  bool empty() const { return ordinates_.empty(); }
  /// Largest ordinate; heights up to here are covered.
  double max() const {
    if (ordinates_.empty()) throw CoverageError("zero table is empty");
    return ordinates_.back();
  }

 private:
  std::vector<double> ordinates_;
  std::string source_;
};

namespace detail {

struct GzCloser {
  void operator()(gzFile f) const { gzclose(f); }
};

inline std::string read_maybe_gzip(std::string const& path) {
  // gzread passes plain files through unchanged.
  std::unique_ptr<gzFile_s, GzCloser> file(gzopen(path.c_str(), "rb"));
  if (!file) throw ParseError("cannot open zeros file '" + path + "'", 0);
  std::string out;
  std::array<char, 1 << 16> buffer{};
  while (true) {
    int const n = gzread(file.get(), buffer.data(), static_cast<unsigned>(buffer.size()));
    if (n < 0) throw ParseError("failed to read zeros file '" + path + "'", 0);
    if (n == 0) break;
    out.append(buffer.data(), static_cast<std::size_t>(n));
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  auto const first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto const last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace detail

/// Parses one ordinate per line; blank lines are skipped.
inline ZeroTable parse_zeros(std::string_view text, std::string source = {}) {
  std::vector<double> ordinates;
  std::size_t line = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto const newline = text.find('\n', start);
    auto const raw = text.substr(start, newline == std::string_view::npos ? text.size() - start
                                                                          : newline - start);
    start = newline == std::string_view::npos ? text.size() : newline + 1;
    ++line;
    auto const field = detail::trim(raw);
    if (field.empty()) continue;
    double value = 0.0;
    auto const [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value) ||
        !(value > 0.0)) {
      throw ParseError("malformed ordinate '" + std::string(field) + "'", line);
    }
    if (!ordinates.empty() && !(value > ordinates.back())) {
      throw OrderError("ordinates must be strictly increasing", line);
    }
    ordinates.push_back(value);
  }
  return ZeroTable::from_ordinates(std::move(ordinates), std::move(source));
}

/// Loads a plain-text or gzip-compressed zero table.
inline ZeroTable load_zeros(std::string const& path) {
  return parse_zeros(detail::read_maybe_gzip(path), path);
}

/// Zero count with half weight for ordinates within 1e-9 of t.
inline double zero_count(ZeroTable const& z, double t) {
  constexpr double kCoincidence = 1e-9;
  auto const ord = z.ordinates();
  auto const below = std::lower_bound(ord.begin(), ord.end(), t - kCoincidence) - ord.begin();
  auto const through = std::upper_bound(ord.begin(), ord.end(), t + kCoincidence) - ord.begin();
  return static_cast<double>(below) + 0.5 * static_cast<double>(through - below);
}

// ---------------------------------------------------------------------------
// Riemann-Siegel theta

/// Asymptotic theta(t) = (t/2) log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760t^3).
inline double rs_theta(double t) {
  detail::require(t >= 10.0, "rs_theta: requires t >= 10");
  return 0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t - kPi / 8.0 + 1.0 / (48.0 * t) +
         7.0 / (5760.0 * t * t * t);
}

/// Bound on |theta(t) - rs_theta(t)|: twice the first omitted term.
inline double rs_theta_error(double t) { return 2.0 * 31.0 / (80640.0 * std::pow(t, 5)); }

/// Antiderivative of rs_theta.
inline double rs_theta_antiderivative(double u) {
  detail::require(u >= 10.0, "rs_theta_antiderivative: requires u >= 10");
  return 0.25 * u * u * std::log(u / (2.0 * kPi)) - 0.375 * u * u - kPi * u / 8.0 +
         std::log(u) / 48.0 - 7.0 / (11520.0 * u * u);
}

namespace detail {

/// log Gamma(z) for Re z > 0 on the principal branch, continuous in Im z.
inline std::complex<double> log_gamma(std::complex<double> z) {
  std::complex<double> shift{0.0, 0.0};
  while (z.real() < 12.0) {
    shift += std::log(z);
    z += 1.0;
  }
  static constexpr std::array<double, 8> kBernoulli{1.0 / 6,   -1.0 / 30,  1.0 / 42,
                                                    -1.0 / 30, 5.0 / 66,   -691.0 / 2730,
                                                    7.0 / 6,   -3617.0 / 510};
  std::complex<double> const inv = 1.0 / z;
  std::complex<double> const inv2 = inv * inv;
  std::complex<double> power = inv;
  std::complex<double> series{0.0, 0.0};
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    double const n = 2.0 * (k + 1);
    series += kBernoulli[k] / (n * (n - 1.0)) * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series - shift;
}

}  // namespace detail

/// theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi for any t >= 0.
inline double theta_exact(double t) {
  detail::require(t >= 0.0, "theta_exact: requires t >= 0");
  return detail::log_gamma({0.25, 0.5 * t}).imag() - 0.5 * t * std::log(kPi);
}

// ---------------------------------------------------------------------------
// S(t) and S_1(t) from the zero table

struct EmpiricalValue {
  double value;
  /// Half-width of the uncertainty band around value.
  double uncertainty;
};

namespace detail {

inline void require_coverage(ZeroTable const& z, double t) {
  if (z.empty()) throw CoverageError("zero table is empty");
  if (t > z.max()) throw CoverageError("height exceeds the zero table's largest ordinate");
}

/// Integral of the exact theta over [0, 10].
inline double theta_integral_to_10() {
  static double const value =
      adaptive_integral([](double u) { return theta_exact(u); }, 0.0, 10.0, 1e-14).value;
  return value;
}

/// Integral of theta over [0, t].
inline EmpiricalValue theta_integral(double t) {
  if (t <= 0.0) return {0.0, 0.0};
  if (t <= 10.0) {
    auto const r = adaptive_integral([](double u) { return theta_exact(u); }, 0.0, t, 1e-14);
    return {r.value, r.error_estimate};
  }
  // The asymptotic error integrates to at most 31/(80640 * 4 * 10^4) on [10, inf).
  return {theta_integral_to_10() + rs_theta_antiderivative(t) - rs_theta_antiderivative(10.0),
          2.0 * 31.0 / (80640.0 * 4.0 * 1e4)};
}

}  // namespace detail

/// S(t) = N(t) - theta(t)/pi - 1 with uncertainty 1/(150t) plus the theta error.
inline EmpiricalValue s_of_t(ZeroTable const& z, double t) {
  detail::require(t >= 10.0, "s_of_t: requires t >= 10");
  detail::require_coverage(z, t);
  double const value = zero_count(z, t) - rs_theta(t) / kPi - 1.0;
  return {value, 1.0 / (150.0 * t) + rs_theta_error(t) / kPi};
}

/// S_1(t) = sum_{gamma <= t} (t - gamma) - (1/pi) int_0^t theta - t, exact
/// between ordinates; the band accumulates 1/(150u) over [10, t].
inline EmpiricalValue s1_of_t(ZeroTable const& z, double t) {
  detail::require(t >= 0.0, "s1_of_t: requires t >= 0");
  if (t == 0.0) return {0.0, 0.0};
  if (t >= kFirstOrdinate) detail::require_coverage(z, t);
  KahanSum<> counted;
  for (double g : z.ordinates()) {
    if (g > t) break;
    counted += t - g;
  }
  auto const theta = detail::theta_integral(t);
  double const band = t > 10.0 ? std::log(t / 10.0) / 150.0 : 0.0;
  return {counted.value() - theta.value / kPi - t, band + theta.uncertainty / kPi};
}

// ---------------------------------------------------------------------------
// Riemann-Siegel Z(t)

enum class RsTerms { MainSum, C0, C0C1 };

inline std::string_view to_string(RsTerms terms) {
  switch (terms) {
    case RsTerms::MainSum: return "main-sum";
    case RsTerms::C0: return "c0";
    case RsTerms::C0C1: return "c0c1";
  }
  return "?";
}

namespace detail {

// Taylor coefficients in z = 1 - 2p: C0 in even powers, C1 in odd powers.
inline constexpr std::array<double, 15> kRsC0{
    0.38268343236508977173,  0.43724046807752044936,  0.13237657548034352332,
    -0.01360502604767418865, -0.01356762197010358089, -0.00162372532314446528,
    0.00029705353733379691,  0.00007943300879521470,  0.00000046556124614505,
    -0.00000143272516309551, -0.00000010354847112313, 0.00000001235792708386,
    0.00000000178810838580,  -0.00000000003391414390, -0.00000000001632663390};
inline constexpr std::array<double, 15> kRsC1{
    0.02682510262837534703,  -0.01378477342635185305, -0.03849125048223508223,
    -0.00987106629906207647, 0.00331075976085840433,  0.00146478085779541508,
    0.00001320794062487696,  -0.00005922748701847141, -0.00000598024258537345,
    0.00000096413224561698,  0.00000018334733722714,  -0.00000000446708756272,
    -0.00000000270963508218, -0.00000000007785288654, 0.00000000002343762601};

template <std::size_t N>
double even_series(std::array<double, N> const& c, double z2) {
  double acc = 0.0;
  for (std::size_t k = N; k-- > 0;) acc = acc * z2 + c[k];
  return acc;
}

}  // namespace detail

/// Hardy's Z(t), real with |Z(t)| = |zeta(1/2 + it)|.
inline double riemann_siegel_z(double t, RsTerms terms = RsTerms::C0C1) {
  detail::require(t >= 10.0, "riemann_siegel_z: requires t >= 10");
  double const a = std::sqrt(t / (2.0 * kPi));
  auto const N = static_cast<long>(std::floor(a));
  double const theta = rs_theta(t);
  KahanSum<> main;
  for (long n = 1; n <= N; ++n) {
    double const ln = std::log(static_cast<double>(n));
    main += std::cos(theta - t * ln) / std::sqrt(static_cast<double>(n));
  }
  double z = 2.0 * main.value();
  if (terms == RsTerms::MainSum) return z;
  double const p = a - static_cast<double>(N);
  double const w = 1.0 - 2.0 * p;
  double correction = detail::even_series(detail::kRsC0, w * w);
  if (terms == RsTerms::C0C1) correction += w * detail::even_series(detail::kRsC1, w * w) / a;
  double const sign = (N - 1) % 2 == 0 ? 1.0 : -1.0;
  return z + sign * correction / std::sqrt(a);
}

/// |zeta(1/2 + it)| by Riemann-Siegel.
inline double zeta_modulus(double t, RsTerms terms = RsTerms::C0C1) {
  return std::abs(riemann_siegel_z(t, terms));
}

/// Twice the largest size of the first omitted Riemann-Siegel term; an
/// estimate, not a rigorous bound.
inline double rs_error_estimate(double t, RsTerms terms = RsTerms::C0C1) {
  detail::require(t >= 10.0, "rs_error_estimate: requires t >= 10");
  switch (terms) {
    case RsTerms::MainSum: return 2.0 * std::pow(t, -0.25);
    case RsTerms::C0: return 2.0 * 0.127 * std::pow(t, -0.75);
    case RsTerms::C0C1: return 2.0 * 0.053 * std::pow(t, -1.25);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Empirical values against the bounds

struct EmpiricalRow {
  double t10;
  /// S, S1 or ZETA; ZETA rows hold |zeta(1/2+it)| itself, not its logarithm.
  BoundKind quantity;
  double empirical;
  double uncertainty;
  double conditional;
  double unconditional;
  /// bound - (|empirical| + uncertainty)
  double margin_conditional;
  double margin_unconditional;
};

struct EmpiricalReport {
  std::vector<EmpiricalRow> rows;

  bool all_margins_positive() const {
    return std::all_of(rows.begin(), rows.end(), [](EmpiricalRow const& r) {
      return r.margin_conditional > 0.0 && r.margin_unconditional > 0.0;
    });
  }
};

/// Conditional bound with the global constants, valid for t >= 2 pi. For
/// ZETA this is the bound on |zeta| (the exponential of the log bound).
inline double global_conditional_bound(BoundKind kind, LogHeight h) {
  detail::require(detail::at_least(h.log(), kLog2Pi), "global bounds require t >= 2 pi");
  double const v = global_constant(kind) * bound_scale(kind, h);
  return kind == BoundKind::Zeta ? std::exp(v) : v;
}

/// Unconditional comparator on the same scale as global_conditional_bound.
inline double unconditional_modulus_bound(BoundKind kind, LogHeight h,
                                          Comparator variant = Comparator::Standard) {
  double const v = unconditional_bound(kind, h, variant);
  return kind == BoundKind::Zeta ? std::exp(v) : v;
}

inline EmpiricalRow make_row(BoundKind kind, double t, EmpiricalValue v) {
  auto const h = LogHeight::from_t(t);
  double const conditional = global_conditional_bound(kind, h);
  double const unconditional = unconditional_modulus_bound(kind, h);
  double const worst = std::abs(v.value) + v.uncertainty;
  return {h.log10(), kind,          v.value,
          v.uncertainty, conditional, unconditional,
          conditional - worst, unconditional - worst};
}

/// Three rows per grid height, in grid order then S, S1, ZETA.
inline EmpiricalReport empirical_vs_bounds(ZeroTable const& z, std::span<double const> grid,
                                           unsigned jobs = 0,
                                           RsTerms terms = RsTerms::C0C1) {
  for (double t : grid) {
    detail::require(t >= 10.0, "empirical grid requires t >= 10");
    detail::require_coverage(z, t);
  }
  EmpiricalReport report;
  report.rows.resize(3 * grid.size());
  parallel_for(grid.size(), jobs, [&](std::size_t i) {
    double const t = grid[i];
    report.rows[3 * i] = make_row(BoundKind::S, t, s_of_t(z, t));
    report.rows[3 * i + 1] = make_row(BoundKind::S1, t, s1_of_t(z, t));
    report.rows[3 * i + 2] =
        make_row(BoundKind::Zeta, t, {zeta_modulus(t, terms), rs_error_estimate(t, terms)});
  });
  return report;
}

}  // namespace zeta_bounds
