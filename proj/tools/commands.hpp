#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"
#include "zeta_bounds/bounds.hpp"
#include "zeta_bounds/empirical.hpp"
#include "zeta_bounds/grid.hpp"
#include "zeta_bounds/optimizer.hpp"
#include "zeta_bounds/primes.hpp"
#include "zeta_bounds/quadrature.hpp"

namespace zeta_bounds::cli {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Settings common to all commands.
struct GlobalOptions {
  /// Comparator for ZETA: Standard (Hiary 0.63) or HiaryCorrected (0.77).
  Comparator zeta_variant = Comparator::Standard;
  /// 0 means hardware parallelism.
  unsigned jobs = 0;
};

inline Comparator parse_hiary(double c) {
  if (c == kHiaryConstant) return Comparator::Standard;
  if (c == kHiaryCorrectedConstant) return Comparator::HiaryCorrected;
  throw DomainError("--hiary must be 0.63 or 0.77");
}

inline Comparator variant_for(BoundKind kind, GlobalOptions const& g) {
  return kind == BoundKind::Zeta ? g.zeta_variant : Comparator::Standard;
}

/// (alpha, lambda) behind the reference crossover heights.
inline std::pair<double, double> reference_parameters(BoundKind kind) {
  switch (kind) {
    case BoundKind::S: return {1.5281, 0.715};
    case BoundKind::S1: return {1.3045, 0.7295};
    case BoundKind::Zeta: return {0.49123, 1.4947};
  }
  throw DomainError("invalid kind");
}

inline Json kind_json(BoundKind k) { return std::string(to_string(k)); }

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  BoundKind kind = BoundKind::S;
  /// Heights as log10 t; filled from --t10 or --grid.
  std::vector<double> t10;
  std::optional<double> alpha;
  std::optional<double> lambda;
};

inline Report cmd_eval(EvalArgs const& args, GlobalOptions const& g) {
  detail::require(!args.t10.empty(), "eval: requires at least one height (--t10 or --grid)");
  auto const [ref_alpha, ref_lambda] = reference_parameters(args.kind);
  double const alpha = args.alpha.value_or(ref_alpha);
  double const lambda = args.lambda.value_or(ref_lambda);
  CompositionParams const cp{alpha, lambda, args.kind};
  auto const& theorem = theorem_coefficients(args.kind);
  Comparator const variant = variant_for(args.kind, g);

  Report r;
  r.doc["command"] = "eval";
  r.doc["kind"] = kind_json(args.kind);
  r.doc["alpha"] = num(alpha);
  r.doc["lambda"] = num(lambda);
  r.doc["comparator"] = std::string(to_string(variant));
  r.doc["global_constant"] = num(global_constant(args.kind));
  r.columns = {"t10", "m_value", "theorem_bound", "conditional", "unconditional", "global_bound"};
  Json points = Json::array();
  for (double x10 : args.t10) {
    detail::require(std::isfinite(x10) && x10 > 0.0, "eval: requires t10 > 0");
    auto const h = LogHeight::from_log10(x10);
    Json p;
    p["t10"] = num(x10);
    Json m = nullptr, theorem_bound = nullptr;
    if (x10 >= theorem.t_min_log10) {
      double const mv = m_value(theorem, h);
      m = num(mv);
      theorem_bound = num(mv * bound_scale(args.kind, h));
    }
    p["m_value"] = m;
    p["theorem_bound"] = theorem_bound;

    double const cond = conditional_bound(cp, h);
    double const x = std::exp(lambda * h.log_log());
    p["conditional"] = num(cond);
    p["conditional_normalised"] = num(cond / bound_scale(args.kind, h));
    auto const mc = composition_m_coefficients(cp, h);
    p["m_coefficients"] = {{"a", num(mc.a)}, {"b", num(mc.b)}, {"c", num(mc.c)}};
    p["x"] = num(x);
    auto const [wlo, whi] = lambda_window(args.kind, h);
    p["lambda_window"] = {num(wlo), num(whi)};

    Json terms = Json::object();
    if (args.kind == BoundKind::Zeta) {
      for (auto const& t : zeta_envelope_terms(alpha, x)) terms[std::string(t.label)] = num(t.value);
    } else {
      SelbergParams const sp{alpha, x, h, args.kind};
      auto const sc = selberg_coefficients(sp);
      p["selberg_coefficients"] = {{"a", num(sc.a)}, {"b", num(sc.b)}, {"c", num(sc.c)}, {"d", num(sc.d)}};
      for (auto const& t : envelope_terms(sp, x)) terms[std::string(t.label)] = num(t.value);
    }
    p["envelope_terms"] = terms;

    double const uncond = unconditional_bound(args.kind, h, variant);
    p["unconditional"] = num(uncond);
    Json comparators = Json::object();
    if (args.kind == BoundKind::S) {
      comparators["platt"] = num(unconditional_bound(args.kind, h, Comparator::Platt));
      if (h.log() >= kLog2Pi) {
        comparators["bpt"] = num(unconditional_bound(args.kind, h, Comparator::BrentPlattTrudgian));
      }
    } else if (args.kind == BoundKind::Zeta) {
      comparators["hiary_0.63"] = num(unconditional_bound(args.kind, h, Comparator::Standard));
      comparators["hiary_0.77"] = num(unconditional_bound(args.kind, h, Comparator::HiaryCorrected));
    }
    p["comparators"] = comparators;
    Json global = nullptr;
    if (h.log() >= kLog2Pi) global = num(global_constant(args.kind) * bound_scale(args.kind, h));
    p["global_bound"] = global;
    r.rows.push_back({p["t10"], m, theorem_bound, p["conditional"], p["unconditional"], global});
    points.push_back(std::move(p));
  }
  r.doc["points"] = std::move(points);
  return r;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  /// lemma33, lemma31, lemma32, aux, pv, corollary12 or all.
  std::string target = "all";
  std::optional<double> max;
  std::optional<std::uint64_t> sieve_limit;
  std::optional<int> points;
  std::optional<BoundKind> kind;
  double tol = 1e-11;
};

namespace impl {

struct CheckRow {
  std::string check;
  double x;
  double value;
  double bound;
  bool pass;
};

inline void add_check(Report& r, Json& checks, std::string const& name, bool pass, Json details) {
  Json c;
  c["name"] = name;
  c["passed"] = pass;
  for (auto& [k, v] : details.items()) c[k] = v;
  checks.push_back(std::move(c));
  if (!pass) r.exit_code = kExitCheckFailed;
}

inline void add_row(Report& r, CheckRow const& row) {
  r.rows.push_back({row.check, num(row.x), num(row.value), num(row.bound), num(row.bound - row.value), row.pass});
}

inline std::uint64_t checked_limit(double max) {
  detail::require(std::isfinite(max) && max >= 2.0 && max <= 1e15, "verify: --max must lie in [2, 1e15]");
  return static_cast<std::uint64_t>(std::ceil(max));
}

inline void verify_lemma33_into(Report& r, Json& checks, VerifyArgs const& a, GlobalOptions const& g) {
  double const max = a.max.value_or(1e7);
  std::uint64_t const limit = a.sieve_limit.value_or(checked_limit(max));
  auto const sieve = build_sieve(limit);
  auto const grid = grid_points({2.0, max, a.points.value_or(200), Spacing::Log});
  for (auto const& rep : zeta_bounds::verify_lemma33(sieve, grid, g.jobs)) {
    for (std::size_t i = 0; i < rep.grid.size(); ++i) {
      add_row(r, {rep.label, rep.grid[i], rep.direct[i], rep.rhs[i], static_cast<bool>(rep.pass[i])});
    }
    add_check(r, checks, "lemma33:" + rep.label, rep.all_passed(),
              {{"points", rep.grid.size()}, {"min_margin", num(rep.min_margin())}});
  }
}

inline void verify_log_integral_into(Report& r, Json& checks, VerifyArgs const& a, int k) {
  double const constant = k == 3 ? kLemma31Constant : kLemma32Constant;
  double const x0 = k == 3 ? kLemma31X0 : kLemma32X0;
  std::string const name = k == 3 ? "lemma31" : "lemma32";
  double const max = a.max.value_or(1e12);
  detail::require(max > 2.0 + 1e-6, "verify: --max must exceed 2 + 1e-6");
  auto const grid = grid_points({2.0 + 1e-6, max, a.points.value_or(100), Spacing::Log});
  bool ok = true;
  double max_lhs = 0.0;
  for (double x : grid) {
    double const v = normalised_log_integral(x, k, a.tol);
    bool const pass = v <= constant;
    ok = ok && pass;
    max_lhs = std::max(max_lhs, v);
    add_row(r, {name + ":quadrature", x, v, constant, pass});
  }
  add_check(r, checks, name + ":quadrature", ok,
            {{"points", grid.size()}, {"max_lhs", num(max_lhs)}, {"constant", num(constant)}});

  bool pok = true;
  double max_rhs = 0.0;
  for (double e = 26.0; e <= 100.0; e += 1.0) {
    double const x = std::pow(10.0, e);
    double const v = parametric_log_integral_bound(x, x0, k);
    bool const pass = v <= constant;
    pok = pok && pass;
    max_rhs = std::max(max_rhs, v);
    add_row(r, {name + ":parametric", x, v, constant, pass});
  }
  add_check(r, checks, name + ":parametric", pok,
            {{"x0", num(x0)}, {"max_rhs", num(max_rhs)}, {"constant", num(constant)}});
}

inline void verify_aux_into(Report& r, Json& checks, VerifyArgs const& a) {
  double const max = a.max.value_or(1e7);
  std::uint64_t const limit = a.sieve_limit.value_or(checked_limit(max));
  auto const sieve = build_sieve(limit);
  auto const rep = auxiliary_prime_bounds(sieve, max);
  for (auto const& c : rep.checks) {
    add_row(r, {c.label, max, c.direct + c.tail, c.bound, c.pass});
    add_check(r, checks, "aux:" + c.label, c.pass,
              {{"X", num(max)},
               {"direct", num(c.direct)},
               {"tail", num(c.tail)},
               {"tail_certified", c.tail_certified},
               {"bound", num(c.bound)}});
  }
}

inline constexpr double kPvConstant = 0.82;
inline constexpr double kPvStability = 1e-4;

inline void verify_pv_into(Report& r, Json& checks) {
  auto const pv = pv_logzeta_integral();
  double const scaled = (std::abs(pv.value) + pv.error_bound) / kPi;
  bool const bound_ok = scaled <= kPvConstant;
  bool const stable = pv.excision_delta <= kPvStability;
  add_row(r, {"pv:|I|/pi", pv.epsilon, scaled, kPvConstant, bound_ok});
  add_row(r, {"pv:excision_delta", pv.epsilon, pv.excision_delta, kPvStability, stable});
  add_check(r, checks, "pv", bound_ok && stable,
            {{"value", num(pv.value)},
             {"error_bound", num(pv.error_bound)},
             {"excision_delta", num(pv.excision_delta)},
             {"tail_bound", num(pv.tail_bound)},
             {"epsilon", num(pv.epsilon)},
             {"cutoff", num(pv.cutoff)},
             {"scaled", num(scaled)},
             {"constant", num(kPvConstant)}});
}

inline void verify_corollary_into(Report& r, Json& checks, VerifyArgs const& a, GlobalOptions const& g) {
  std::vector<BoundKind> kinds;
  if (a.kind) {
    kinds.push_back(*a.kind);
  } else {
    kinds = {BoundKind::S, BoundKind::S1, BoundKind::Zeta};
  }
  for (auto kind : kinds) {
    auto const rep = verify_corollary_1_2(kind, a.points.value_or(10'000), variant_for(kind, g));
    std::string const name = "corollary12:" + std::string(to_string(kind));
    add_row(r, {name + ":threshold", rep.threshold_x10, rep.m_at_threshold, rep.constant, rep.m_pass});
    add_row(r, {name + ":scan", rep.scan_argmax_x10, rep.scan_max_ratio, rep.constant, rep.scan_failures == 0});
    Json first = nullptr;
    if (rep.first_failure_x10) first = num(*rep.first_failure_x10);
    add_check(r, checks, name, rep.passed(),
              {{"constant", num(rep.constant)},
               {"threshold_t10", num(rep.threshold_x10)},
               {"m_at_threshold", num(rep.m_at_threshold)},
               {"scan_points", rep.scan_points},
               {"scan_lo_t10", num(rep.scan_lo_x10)},
               {"scan_max_ratio", num(rep.scan_max_ratio)},
               {"scan_argmax_t10", num(rep.scan_argmax_x10)},
               {"scan_failures", rep.scan_failures},
               {"first_failure_t10", first}});
  }
}

}  // namespace impl

inline Report cmd_verify(VerifyArgs const& a, GlobalOptions const& g) {
  static constexpr std::string_view kTargets[] = {"lemma33", "lemma31", "lemma32", "aux", "pv", "corollary12", "all"};
  bool known = false;
  for (auto t : kTargets) known = known || t == a.target;
  detail::require(known, "verify: target must be lemma33, lemma31, lemma32, aux, pv, corollary12 or all");
  if (a.points) detail::require(*a.points >= 1, "verify: --points must be positive");
  bool const all = a.target == "all";

  Report r;
  r.doc["command"] = "verify";
  r.doc["target"] = a.target;
  r.columns = {"check", "x", "value", "bound", "margin", "pass"};
  Json checks = Json::array();
  // "all" runs every target at its defaults.
  VerifyArgs const defaults{a.target, {}, {}, {}, {}, a.tol};
  VerifyArgs const& use = all ? defaults : a;
  if (all || a.target == "lemma33") impl::verify_lemma33_into(r, checks, use, g);
  if (all || a.target == "lemma31") impl::verify_log_integral_into(r, checks, use, 3);
  if (all || a.target == "lemma32") impl::verify_log_integral_into(r, checks, use, 4);
  if (all || a.target == "aux") impl::verify_aux_into(r, checks, use);
  if (all || a.target == "pv") impl::verify_pv_into(r, checks);
  if (all || a.target == "corollary12") impl::verify_corollary_into(r, checks, use, g);
  r.doc["passed"] = r.exit_code == kExitOk;
  r.doc["checks"] = std::move(checks);
  return r;
}

// ---------------------------------------------------------------------------
// crossover and optimize

inline Json crossover_json(CrossoverResult const& c, Comparator variant) {
  Json j;
  j["kind"] = kind_json(c.kind);
  j["comparator"] = std::string(to_string(variant));
  j["alpha"] = num(c.alpha);
  j["lambda"] = num(c.lambda);
  j["x10"] = num(c.x10);
  j["residual"] = num(c.residual);
  return j;
}

inline Report crossover_report(std::string const& command, CrossoverResult const& c, Comparator variant) {
  Report r;
  r.doc["command"] = command;
  Json const fields = crossover_json(c, variant);
  for (auto const& [k, v] : fields.items()) r.doc[k] = v;
  r.columns = {"kind", "alpha", "lambda", "x10", "residual"};
  r.rows.push_back({r.doc["kind"], r.doc["alpha"], r.doc["lambda"], r.doc["x10"], r.doc["residual"]});
  return r;
}

struct CrossoverArgs {
  BoundKind kind = BoundKind::S;
  std::optional<double> alpha;
  std::optional<double> lambda;
  CrossoverBracket bracket{};
};

inline Report cmd_crossover(CrossoverArgs const& a, GlobalOptions const& g) {
  auto const [ref_alpha, ref_lambda] = reference_parameters(a.kind);
  Comparator const variant = variant_for(a.kind, g);
  auto const c = solve_crossover(a.kind, a.alpha.value_or(ref_alpha), a.lambda.value_or(ref_lambda), variant,
                                 a.bracket);
  return crossover_report("crossover", c, variant);
}

struct OptimizeArgs {
  BoundKind kind = BoundKind::S;
  std::optional<int> alpha_points;
  std::optional<int> lambda_points;
};

inline Report cmd_optimize(OptimizeArgs const& a, GlobalOptions const& g) {
  auto opt = default_optimize_options(a.kind);
  if (a.alpha_points) opt.alpha_points = *a.alpha_points;
  if (a.lambda_points) opt.lambda_points = *a.lambda_points;
  opt.jobs = g.jobs;
  Comparator const variant = variant_for(a.kind, g);
  auto const c = optimize_crossover(a.kind, variant, opt);
  auto r = crossover_report("optimize", c, variant);
  r.doc["search"] = {{"alpha", {num(opt.alpha_lo), num(opt.alpha_hi)}},
                     {"lambda", {num(opt.lambda_lo), num(opt.lambda_hi)}},
                     {"alpha_points", opt.alpha_points},
                     {"lambda_points", opt.lambda_points}};
  return r;
}

// ---------------------------------------------------------------------------
// empirical

struct EmpiricalArgs {
  std::string zeros_path;
  /// Grid over t itself (not log10 t).
  GridSpec grid{10.0, 1000.0, 100, Spacing::Log};
  RsTerms terms = RsTerms::C0C1;
};

inline RsTerms parse_terms(std::string_view text) {
  if (text == "main") return RsTerms::MainSum;
  if (text == "c0") return RsTerms::C0;
  if (text == "c0c1") return RsTerms::C0C1;
  throw DomainError("--terms must be main, c0 or c0c1");
}

inline Report empirical_report(EmpiricalReport const& rep, std::string const& source, RsTerms terms) {
  Report r;
  r.doc["command"] = "empirical";
  r.doc["zeros"] = source;
  r.doc["rs_terms"] = std::string(to_string(terms));
  r.doc["all_margins_positive"] = rep.all_margins_positive();
  r.columns = {"t10", "quantity", "empirical", "conditional", "unconditional", "margin_conditional",
               "margin_unconditional"};
  Json rows = Json::array();
  for (auto const& row : rep.rows) {
    Json j;
    j["t10"] = num(row.t10);
    j["quantity"] = kind_json(row.quantity);
    j["empirical"] = num(row.empirical);
    j["uncertainty"] = num(row.uncertainty);
    j["conditional"] = num(row.conditional);
    j["unconditional"] = num(row.unconditional);
    j["margin_conditional"] = num(row.margin_conditional);
    j["margin_unconditional"] = num(row.margin_unconditional);
    r.rows.push_back({j["t10"], j["quantity"], j["empirical"], j["conditional"], j["unconditional"],
                      j["margin_conditional"], j["margin_unconditional"]});
    rows.push_back(std::move(j));
  }
  r.doc["rows"] = std::move(rows);
  if (!rep.all_margins_positive()) r.exit_code = kExitCheckFailed;
  return r;
}

inline Report cmd_empirical(EmpiricalArgs const& a, GlobalOptions const& g) {
  detail::require(!a.zeros_path.empty(), "empirical: requires --zeros or ZETA_BOUNDS_ZEROS");
  auto const table = load_zeros(a.zeros_path);
  auto const grid = grid_points(a.grid);
  auto const rep = empirical_vs_bounds(table, grid, g.jobs, a.terms);
  return empirical_report(rep, table.source(), a.terms);
}

}  // namespace zeta_bounds::cli
