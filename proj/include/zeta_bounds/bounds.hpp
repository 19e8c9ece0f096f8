#pragma once

// Closed-form evaluation of the conditional (RH) and unconditional explicit
// bounds for S(t), S_1(t) and log|zeta(1/2+it)|.
//
// Heights are carried as L = log t only. Heights such as 10^2465 overflow every
// hardware float, but all formulas here depend on t only through log t and
// log log t (and through 1/t, which underflows harmlessly to zero).

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zeta_bounds/errors.hpp"
#include "zeta_bounds/kahan.hpp"

namespace zeta_bounds {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kLn10 = std::numbers::ln10;
inline constexpr double kLn2 = std::numbers::ln2;
inline double const kLog2Pi = std::log(2.0 * std::numbers::pi);

enum class BoundKind { S, S1, Zeta };

inline std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::S: return "S";
    case BoundKind::S1: return "S1";
    case BoundKind::Zeta: return "ZETA";
  }
  return "?";
}

inline BoundKind parse_bound_kind(std::string_view text) {
  if (text == "S" || text == "s") return BoundKind::S;
  if (text == "S1" || text == "s1") return BoundKind::S1;
  if (text == "ZETA" || text == "zeta" || text == "Zeta") return BoundKind::Zeta;
  throw DomainError("unknown bound kind '" + std::string(text) + "' (expected S, S1 or ZETA)");
}

/// Power k of log log t (resp. log x) in the denominator of each bound.
inline int log_power(BoundKind kind) { return kind == BoundKind::S1 ? 2 : 1; }

namespace detail {

/// a >= floor up to a few ulps; thresholds such as 10^2465 are round-tripped
/// through log10 and must not be rejected by rounding.
inline bool at_least(double a, double floor) {
  return a >= floor - 1e-12 * std::max(1.0, std::abs(floor));
}

}  // namespace detail

/// A height t > 1 represented by L = log t.
class LogHeight {
 public:
  static LogHeight from_log(double log_t) {
    if (!std::isfinite(log_t) || !(log_t > 0.0)) {
      throw DomainError("height must satisfy t > 1 (log t > 0 and finite)");
    }
    return LogHeight(log_t);
  }
  static LogHeight from_log10(double log10_t) { return from_log(log10_t * kLn10); }
  static LogHeight from_t(double t) {
    if (!(t > 1.0)) throw DomainError("height must satisfy t > 1");
    return LogHeight(std::log(t));
  }

  double log() const { return log_; }
  double log10() const { return log_ / kLn10; }
  /// log log t, recomputed on every call.
  double log_log() const { return std::log(log_); }
  /// 1/t; underflows to zero for large heights.
  double inverse() const { return std::exp(-log_); }

  friend bool operator==(LogHeight, LogHeight) = default;

 private:
  explicit LogHeight(double log_t) : log_(log_t) {}
  double log_;
};

// ---------------------------------------------------------------------------
// The envelope M(a, b, c; t) = a + b / ((log t)^c log log t)

struct MCoefficients {
  double a;
  double b;
  double c;
  /// Validity threshold as log10 t.
  double t_min_log10 = 0.0;
};

inline double m_value(MCoefficients const& coef, LogHeight h) {
  double const L = h.log();
  double const LL = h.log_log();
  detail::require(LL > 0.0, "m_value: requires log log t > 0 (t > e)");
  detail::require(coef.a > 0.0 && coef.b >= 0.0 && coef.c > 0.0,
                  "m_value: coefficients must satisfy a > 0, b >= 0, c > 0");
  detail::require(detail::at_least(h.log10(), coef.t_min_log10),
                  "m_value: height is below the coefficients' validity threshold");
  return coef.a + coef.b / (std::pow(L, coef.c) * LL);
}

/// Coefficients of the three main conditional bounds.
inline constexpr MCoefficients kTheoremS{0.759282, 20.1911, 0.285, 2465.0};
inline constexpr MCoefficients kTheoremS1{0.653, 60.12, 0.2705, 208.0};
inline constexpr MCoefficients kTheoremZeta{0.5, 6.361, 0.252, 40.0};

inline MCoefficients const& theorem_coefficients(BoundKind kind) {
  switch (kind) {
    case BoundKind::S: return kTheoremS;
    case BoundKind::S1: return kTheoremS1;
    case BoundKind::Zeta: return kTheoremZeta;
  }
  throw DomainError("theorem_coefficients: invalid kind");
}

/// Global constants valid for t >= 2 pi.
inline double global_constant(BoundKind kind) {
  switch (kind) {
    case BoundKind::S: return 0.96;
    case BoundKind::S1: return 2.488;
    case BoundKind::Zeta: return 0.95;
  }
  throw DomainError("global_constant: invalid kind");
}

// ---------------------------------------------------------------------------
// Selberg-method coefficients

/// A(x0): decreasing in x0, tends to zero.
inline double coeff_A(double x0) {
  detail::require(x0 > 1.0 && !std::isnan(x0), "coeff_A: requires x0 > 1");
  if (std::isinf(x0)) return 0.0;
  // ((x0^2+1) sqrt(x0) + 1) / (x0^2 (x0^4 - 1)) scaled by x0^-6 so that large
  // x0 does not overflow.
  double const rational =
      ((1.0 + std::pow(x0, -2.0)) * std::pow(x0, -3.5) + std::pow(x0, -6.0)) /
      (1.0 - std::pow(x0, -4.0));
  return (1.0 + 1.0 / std::sqrt(x0) + rational) / std::log(x0);
}

/// alpha e^alpha - 1 - e^{-alpha}; positive for alpha >= 1.
inline double selberg_denominator(double alpha) {
  return alpha * std::exp(alpha) - 1.0 - std::exp(-alpha);
}

inline double const kSelbergX0Min = std::exp(4.0 / 3.0);
inline constexpr double kZetaAlphaMin = 0.49123;

struct SelbergParams {
  double alpha;
  double x0;
  LogHeight t0;
  BoundKind kind;
};

struct SelbergCoefficients {
  double a;
  double b;
  double c;
  double d;
};

namespace detail {

inline void validate(SelbergParams const& p) {
  require(p.kind == BoundKind::S || p.kind == BoundKind::S1,
          "Selberg coefficients exist only for kinds S and S1");
  require(p.alpha >= 1.0 && p.alpha <= 2.0, "Selberg parameters require 1 <= alpha <= 2");
  require(at_least(p.t0.log(), std::log(10.0)), "Selberg parameters require t0 >= 10");
  require(at_least(p.x0, kSelbergX0Min), "Selberg parameters require x0 >= e^{4/3}");
}

inline void require_alpha_range(double alpha) {
  require(alpha >= 1.0 && alpha <= 2.0, "requires 1 <= alpha <= 2");
}

}  // namespace detail

/// a_1(alpha) or a_2(alpha).
inline double a_coefficient(BoundKind kind, double alpha) {
  detail::require_alpha_range(alpha);
  double const ea = std::exp(alpha);
  double const em = std::exp(-alpha);
  double const den = selberg_denominator(alpha);
  if (kind == BoundKind::S) {
    return ((kPi + 2.0) * alpha * alpha * ea + 2.0 * (1.0 + 0.5 * em)) / (2.0 * kPi * den);
  }
  detail::require(kind == BoundKind::S1, "a_coefficient: kind must be S or S1");
  return (alpha * alpha * alpha * ea + 1.0 + alpha + (1.0 + 2.0 * alpha) / 4.0 * em) /
         (kPi * den);
}

/// b_1(alpha) or b_2(alpha): the leading constants before the x-dependent
/// error terms.
inline double b_coefficient(BoundKind kind, double alpha) {
  detail::require_alpha_range(alpha);
  double const ea = std::exp(alpha);
  double const em = std::exp(-alpha);
  double const den = selberg_denominator(alpha);
  if (kind == BoundKind::S) {
    return (kPi * alpha * alpha * ea + 2.0 * (1.0 + alpha) + (1.0 + 2.0 * alpha) * em) /
           (4.0 * kPi * den);
  }
  detail::require(kind == BoundKind::S1, "b_coefficient: kind must be S or S1");
  double const a2 = alpha * alpha;
  return (a2 * alpha * ea + (a2 + alpha + 0.5) * em + a2 + 2.0 * (1.0 + alpha)) /
         (4.0 * kPi * den);
}

inline SelbergCoefficients selberg_coefficients(SelbergParams const& p) {
  detail::validate(p);
  double const alpha = p.alpha;
  double const ea = std::exp(alpha);
  double const em = std::exp(-alpha);
  double const den = selberg_denominator(alpha);
  double const A = coeff_A(p.x0);
  double const inv_t0 = p.t0.inverse();
  double const a2 = alpha * alpha;
  double const a3 = a2 * alpha;

  SelbergCoefficients out{};
  out.a = a_coefficient(p.kind, alpha);
  out.b = b_coefficient(p.kind, alpha);
  if (p.kind == BoundKind::S) {
    out.c = (alpha * (2.0 + (2.0 + kPi) * alpha) * A + 6.0 * (1.0 + alpha) * (1.0 + em) +
             3.0 * kPi * a2 * ea) /
                (2.0 * kPi * den) +
            2.0 * alpha / kPi * inv_t0;
    out.d = a2 / kPi * inv_t0 * (kPi / 4.0 + inv_t0);
  } else {
    out.c = (3.0 * a3 * ea + 2.0 * alpha * (a2 + alpha + 1.0) * A +
             3.0 * (a2 + 2.0 * alpha + 2.0) * (1.0 + em)) /
                (2.0 * kPi * den) +
            a2 / kPi * inv_t0;
    out.d = a3 / (2.0 * kPi) * inv_t0 * (kPi / 4.0 + inv_t0);
  }
  return out;
}

/// Upper bound on |r(x, t, alpha)|.
struct RBound {
  double value;
};

/// Right-hand side of the explicit approximation of S(t) (k = 1) or S_1(t)
/// (k = 2) by a Dirichlet polynomial of length x^2:
///   a r / log^k x + b log t / log^k x + c / log^k x + d / log^{k+1} x.
inline double approximation_rhs(SelbergParams const& p, double x, LogHeight h, RBound r) {
  detail::validate(p);
  detail::require(r.value >= 0.0, "approximation_rhs: |r| bound must be nonnegative");
  detail::require(x >= p.x0, "approximation_rhs: requires x >= x0");
  double const lx = std::log(x);
  detail::require(lx <= 2.0 * h.log(), "approximation_rhs: requires x <= t^2");
  detail::require(detail::at_least(h.log(), p.t0.log()), "approximation_rhs: requires t >= t0");
  auto const coef = selberg_coefficients(p);
  double const lk = p.kind == BoundKind::S ? lx : lx * lx;
  return coef.a * r.value / lk + coef.b * h.log() / lk + coef.c / lk + coef.d / (lk * lx);
}

// ---------------------------------------------------------------------------
// Envelopes E_1, E_2, E_3

struct EnvelopeTerm {
  std::string_view label;
  double value;
};

/// Term-by-term E_1(x0, t0, alpha; x) (kind S) or E_2(x0, t0, alpha; x)
/// (kind S1).
inline std::vector<EnvelopeTerm> envelope_terms(SelbergParams const& p, double x) {
  detail::validate(p);
  detail::require(x >= p.x0, "envelope: requires x >= x0");
  auto const coef = selberg_coefficients(p);
  double const alpha = p.alpha;
  double const lx = std::log(x);
  double const llx = std::log(lx);
  double const sx = std::sqrt(x);
  double const pi2 = kPi * kPi;

  if (p.kind == BoundKind::S) {
    double const a1 = coef.a;
    return {
        {"4a+2/pi", 4.0 * a1 + 2.0 / kPi},
        {"46.2/(pi log x)", 46.2 / (kPi * lx)},
        {"(2a+2/pi) log x/sqrt x", (2.0 * a1 + 2.0 / kPi) * lx / sx},
        {"(4/pi)(1+46.2/log x)/sqrt x", 4.0 / kPi * (1.0 + 46.2 / lx) / sx},
        {"(5a+11/(2pi)) log^4 x/(48pi x)",
         (5.0 * a1 + 11.0 / (2.0 * kPi)) / (48.0 * kPi) * std::pow(lx, 4) / x},
        {"(11a+18/pi) log^3 x/(24pi x)",
         (11.0 * a1 + 18.0 / kPi) / (24.0 * kPi) * std::pow(lx, 3) / x},
        {"log^2 x loglog x/(2pi x)", lx * lx * llx / (2.0 * kPi * x)},
        {"(a-12.949) log^2 x/x", (a1 - 12.949) * lx * lx / x},
        {"(1.417/pi-1.762a+c) log x/x", (1.417 / kPi - 1.762 * a1 + coef.c) * lx / x},
        {"(1/(2pi)-4.679a+d)/x", (1.0 / (2.0 * kPi) - 4.679 * a1 + coef.d) / x},
    };
  }

  double const a2 = coef.a;
  return {
      {"4a+(1+2alpha)/pi", 4.0 * a2 + (1.0 + 2.0 * alpha) / kPi},
      {"(395.8+46.2alpha)/(pi log x)", (395.8 + 46.2 * alpha) / (kPi * lx)},
      {"2(a+(1+alpha)/pi) log x/sqrt x", 2.0 * (a2 + (1.0 + alpha) / kPi) * lx / sx},
      {"(92.4+4alpha)/(pi sqrt x)", (92.4 + 4.0 * alpha) / (kPi * sx)},
      {"184.8alpha/(pi sqrt x log x)", 184.8 * alpha / (kPi * sx * lx)},
      {"((3+11alpha/6)/(16pi^2)+5a/(48pi)) log^4 x/x",
       ((3.0 + 11.0 * alpha / 6.0) / (16.0 * pi2) + 5.0 * a2 / (48.0 * kPi)) * std::pow(lx, 4) /
           x},
      {"3 log^3 x loglog x/(4pi^2 x)", 3.0 * std::pow(lx, 3) * llx / (4.0 * pi2 * x)},
      {"(3alpha/(4pi^2)+11a/(24pi)-23.34) log^3 x/x",
       (3.0 * alpha / (4.0 * pi2) + 11.0 * a2 / (24.0 * kPi) - 23.34) * std::pow(lx, 3) / x},
      {"alpha log^2 x loglog x/(2pi x)", alpha * lx * lx * llx / (2.0 * kPi * x)},
      {"((81.8-40.68alpha)/pi+a) log^2 x/x", ((81.8 - 40.68 * alpha) / kPi + a2) * lx * lx / x},
      {"(1.417alpha/pi-1.762a+c) log x/x",
       (1.417 * alpha / kPi - 1.762 * a2 + coef.c) * lx / x},
      {"(alpha/(2pi)-4.679a+d)/x", (alpha / (2.0 * kPi) - 4.679 * a2 + coef.d) / x},
  };
}

/// Term-by-term E_3(alpha; x).
inline std::vector<EnvelopeTerm> zeta_envelope_terms(double alpha, double x) {
  detail::require(alpha >= kZetaAlphaMin, "zeta envelope: requires alpha >= 0.49123");
  detail::require(x >= 2.0, "zeta envelope: requires x >= 2");
  double const lx = std::log(x);
  double const llx = std::log(lx);
  double const sx = std::sqrt(x);
  return {
      {"4", 4.0},
      {"184.8/log x", 184.8 / lx},
      {"log^4 x/(96pi sqrt x)", std::pow(lx, 4) / (96.0 * kPi * sx)},
      {"log^3 x/(8pi sqrt x)", std::pow(lx, 3) / (8.0 * kPi * sx)},
      {"log^2 x loglog x/(2 sqrt x)", lx * lx * llx / (2.0 * sx)},
      {"-13.3 log^2 x/sqrt x", -13.3 * lx * lx / sx},
      {"(4.417+3alpha) log x/sqrt x", (4.417 + 3.0 * alpha) * lx / sx},
      {"(2+e^-alpha/sqrt x (1+1/(x(x^2-1))))/sqrt x",
       (2.0 + std::exp(-alpha) / sx * (1.0 + 1.0 / (x * (x * x - 1.0)))) / sx},
  };
}

namespace detail {

inline double sum_terms(std::vector<EnvelopeTerm> const& terms) {
  KahanSum<> total;
  for (auto const& t : terms) total += t.value;
  return total;
}

}  // namespace detail

inline double envelope(SelbergParams const& p, double x) {
  return detail::sum_terms(envelope_terms(p, x));
}

inline double zeta_envelope(double alpha, double x) {
  return detail::sum_terms(zeta_envelope_terms(alpha, x));
}

// ---------------------------------------------------------------------------
// Composed conditional bounds with x0 = x = (log t)^lambda and t0 = t

struct CompositionParams {
  double alpha;
  double lambda;
  BoundKind kind;
};

/// Admissible [lo, hi) window for lambda at height h.
inline std::pair<double, double> lambda_window(BoundKind kind, LogHeight h) {
  double const LL = h.log_log();
  if (kind == BoundKind::Zeta) return {kLn2 / LL, 2.0};
  return {4.0 / (3.0 * LL), 1.0};
}

namespace detail {

inline void validate(CompositionParams const& cp, LogHeight h) {
  require(at_least(h.log(), std::log(10.0)), "conditional bound requires t >= 10");
  require(h.log_log() > 0.0, "conditional bound requires log log t > 0");
  if (cp.kind == BoundKind::Zeta) {
    require(cp.alpha >= kZetaAlphaMin, "ZETA composition requires alpha >= 0.49123");
  } else {
    require(cp.alpha >= 1.0 && cp.alpha <= 2.0, "S/S1 composition requires 1 <= alpha <= 2");
  }
  auto const [lo, hi] = lambda_window(cp.kind, h);
  require(cp.lambda >= lo && cp.lambda < hi,
          cp.kind == BoundKind::Zeta
              ? "lambda outside [log 2/log log t, 2) at this height"
              : "lambda outside [4/(3 log log t), 1) at this height");
}

inline SelbergParams composed_selberg(CompositionParams const& cp, LogHeight h, double x) {
  return SelbergParams{cp.alpha, x, h, cp.kind};
}

}  // namespace detail

/// Envelope value E_k evaluated at x0 = x = (log t)^lambda, t0 = t.
inline double composed_envelope(CompositionParams const& cp, LogHeight h) {
  detail::validate(cp, h);
  double const x = std::exp(cp.lambda * h.log_log());
  if (cp.kind == BoundKind::Zeta) return zeta_envelope(cp.alpha, x);
  return envelope(detail::composed_selberg(cp, h, x), x);
}

/// The M-form of the composed bound: the bound equals
/// m_value(result, h) * log t / (log log t)^k.
inline MCoefficients composition_m_coefficients(CompositionParams const& cp, LogHeight h) {
  double const E = composed_envelope(cp, h);
  double const lam = cp.lambda;
  switch (cp.kind) {
    case BoundKind::S:
      return {b_coefficient(BoundKind::S, cp.alpha) / lam, E / (lam * lam), 1.0 - lam, 0.0};
    case BoundKind::S1:
      return {b_coefficient(BoundKind::S1, cp.alpha) / (lam * lam), E / (lam * lam * lam),
              1.0 - lam, 0.0};
    case BoundKind::Zeta:
      return {(1.0 + cp.alpha) / (2.0 * lam), E / (lam * lam), 1.0 - lam / 2.0, 0.0};
  }
  throw DomainError("composition_m_coefficients: invalid kind");
}

/// Conditional upper bound on |S(t)|, |S_1(t)|, or log|zeta(1/2+it)| (kind
/// ZETA returns the exponent). Evaluated directly from the corollary form
///   b log t / log^k x + E x / log^{k+1} x     (S, S1)
///   (1+alpha)/2 log t / log x + E sqrt(x) / log^2 x    (ZETA)
/// with x = (log t)^lambda.
inline double conditional_bound(CompositionParams const& cp, LogHeight h) {
  detail::validate(cp, h);
  double const L = h.log();
  double const lx = cp.lambda * h.log_log();
  double const x = std::exp(lx);
  switch (cp.kind) {
    case BoundKind::S: {
      double const E = envelope(detail::composed_selberg(cp, h, x), x);
      return b_coefficient(BoundKind::S, cp.alpha) * L / lx + E * x / (lx * lx);
    }
    case BoundKind::S1: {
      double const E = envelope(detail::composed_selberg(cp, h, x), x);
      return b_coefficient(BoundKind::S1, cp.alpha) * L / (lx * lx) + E * x / (lx * lx * lx);
    }
    case BoundKind::Zeta: {
      double const E = zeta_envelope(cp.alpha, x);
      return (1.0 + cp.alpha) / 2.0 * L / lx + E * std::sqrt(x) / (lx * lx);
    }
  }
  throw DomainError("conditional_bound: invalid kind");
}

/// log t / (log log t)^k for the kind's normalisation.
inline double bound_scale(BoundKind kind, LogHeight h) {
  double const LL = h.log_log();
  return kind == BoundKind::S1 ? h.log() / (LL * LL) : h.log() / LL;
}

// ---------------------------------------------------------------------------
// Unconditional comparators

enum class Comparator {
  /// S: min(Platt, Brent-Platt-Trudgian) where each is valid; S1: the only
  /// one; ZETA: Hiary with constant 0.63.
  Standard,
  /// |S(t)| <= 0.11 log t + 0.29 log log t + 2.29, t >= e.
  Platt,
  /// |S(t)| <= 0.28 log t, t >= 2 pi.
  BrentPlattTrudgian,
  /// Hiary's bound with the corrected constant 0.77.
  HiaryCorrected,
};

inline std::string_view to_string(Comparator c) {
  switch (c) {
    case Comparator::Standard: return "standard";
    case Comparator::Platt: return "platt";
    case Comparator::BrentPlattTrudgian: return "bpt";
    case Comparator::HiaryCorrected: return "hiary-0.77";
  }
  return "?";
}

inline constexpr double kHiaryConstant = 0.63;
inline constexpr double kHiaryCorrectedConstant = 0.77;

inline double hiary_constant(Comparator c) {
  return c == Comparator::HiaryCorrected ? kHiaryCorrectedConstant : kHiaryConstant;
}

/// Unconditional bound for |S|, |S_1|, or log|zeta(1/2+it)| (kind ZETA
/// returns log C + log t / 6 + log log t).
inline double unconditional_bound(BoundKind kind, LogHeight h,
                                  Comparator variant = Comparator::Standard) {
  double const L = h.log();
  switch (kind) {
    case BoundKind::S: {
      auto platt = [&] {
        detail::require(detail::at_least(L, 1.0), "Platt bound requires t >= e");
        return 0.11 * L + 0.29 * std::log(L) + 2.29;
      };
      auto bpt = [&] {
        detail::require(detail::at_least(L, kLog2Pi), "0.28 log t bound requires t >= 2 pi");
        return 0.28 * L;
      };
      switch (variant) {
        case Comparator::Platt: return platt();
        case Comparator::BrentPlattTrudgian: return bpt();
        case Comparator::Standard:
          if (!detail::at_least(L, kLog2Pi)) return platt();
          return std::min(platt(), bpt());
        case Comparator::HiaryCorrected: break;
      }
      throw DomainError("comparator variant does not apply to S");
    }
    case BoundKind::S1:
      detail::require(variant == Comparator::Standard, "comparator variant does not apply to S1");
      detail::require(L >= 0.0, "S1 bound requires t >= 1");
      return 0.059 * L + 3.054;
    case BoundKind::Zeta:
      detail::require(variant == Comparator::Standard || variant == Comparator::HiaryCorrected,
                      "comparator variant does not apply to ZETA");
      detail::require(detail::at_least(L, std::log(3.0)), "Hiary bound requires t >= 3");
      return std::log(hiary_constant(variant)) + L / 6.0 + std::log(L);
  }
  throw DomainError("unconditional_bound: invalid kind");
}

// ---------------------------------------------------------------------------
// Gaps between consecutive zeros

inline constexpr MCoefficients kGapCoefficients{9.55, 253.82, 0.285, 2465.0};
/// c_0(T) majorant for |S(T)| log log T / log T used in the gap argument.
inline constexpr MCoefficients kGapC0{0.7592, 20.19, 0.2849, 2465.0};

/// Infimum of the admissible c-hat: a zero lies in [T, T + c-hat/log log T]
/// for all T >= T0 whenever |S(T)| <= c0 log T / log log T there.
inline double gap_c_hat(double c0, LogHeight T0) {
  detail::require(c0 > 0.0, "gap_c_hat: requires c0 > 0");
  double const L = T0.log();
  detail::require(L > kLog2Pi, "gap_c_hat: requires T0 > 2 pi");
  double const LL = T0.log_log();
  // T0 log(T0/2pi) log log T0 > 2 pi c0, in log space.
  detail::require(LL > 0.0 && L + std::log(L - kLog2Pi) + std::log(LL) > std::log(2.0 * kPi * c0),
                  "gap_c_hat: requires T0 log(T0/2pi) log log T0 > 2 pi c0");
  double const inv_T0 = T0.inverse();
  double const first = 1.0 + LL / (150.0 * c0 * L) * inv_T0;
  double const second = 1.0 - kLog2Pi / L - 2.0 * kPi * c0 * inv_T0 / (L * LL);
  return 4.0 * kPi * c0 * first / second;
}

/// M(9.55, 253.82, 0.285; gamma) for gamma >= 10^2465.
inline double gap_coefficient(LogHeight gamma) { return m_value(kGapCoefficients, gamma); }

/// Upper bound on gamma' - gamma for consecutive ordinates gamma' >= gamma.
inline double gap_bound(LogHeight gamma) { return gap_coefficient(gamma) / gamma.log_log(); }

}  // namespace zeta_bounds
