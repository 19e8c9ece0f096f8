#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace zb = zeta_bounds;
namespace cli = zeta_bounds::cli;

namespace {

template <typename T>
std::optional<T> if_set(CLI::Option const* opt, T const& value) {
  return opt->count() ? std::optional<T>(value) : std::nullopt;
}

int fail(int code, std::string const& message) {
  std::cerr << "zeta-bounds: " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit conditional bounds for S(t), S1(t) and |zeta(1/2+it)|"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "zeta-bounds 1.0");

  std::string format = "json";
  double hiary = zb::kHiaryConstant;
  unsigned jobs = 0;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--hiary", hiary, "Hiary constant for the ZETA comparator (0.63 or 0.77)")->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads (0 = hardware parallelism)")->capture_default_str();

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate bounds at heights given as log10 t");
  std::string eval_kind;
  std::vector<double> eval_t10;
  std::string eval_grid;
  double eval_alpha = 0.0, eval_lambda = 0.0;
  eval->add_option("--kind", eval_kind, "S, S1 or ZETA")->required();
  auto* eval_t10_opt = eval->add_option("--t10", eval_t10, "log10 t (repeatable)");
  auto* eval_grid_opt = eval->add_option("--grid", eval_grid, "min:max:points[:log|linear] over log10 t");
  eval_t10_opt->excludes(eval_grid_opt);
  auto* eval_alpha_opt = eval->add_option("--alpha", eval_alpha, "alpha (default: reference parameters)");
  auto* eval_lambda_opt = eval->add_option("--lambda", eval_lambda, "lambda (default: reference parameters)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check inequalities against direct computation");
  std::string verify_target = "all";
  double verify_max = 0.0;
  std::uint64_t verify_sieve = 0;
  int verify_points = 0;
  std::string verify_kind;
  double verify_tol = 1e-11;
  verify->add_option("target", verify_target, "lemma33, lemma31, lemma32, aux, pv, corollary12 or all")
      ->check(CLI::IsMember({"lemma33", "lemma31", "lemma32", "aux", "pv", "corollary12", "all"}))
      ->capture_default_str();
  auto* verify_max_opt = verify->add_option("--max", verify_max, "Upper end of the grid");
  auto* verify_sieve_opt = verify->add_option("--sieve-limit", verify_sieve, "Sieve limit (default: --max)");
  auto* verify_points_opt = verify->add_option("--points", verify_points, "Grid points");
  auto* verify_kind_opt = verify->add_option("--kind", verify_kind, "Restrict corollary12 to one kind");
  verify->add_option("--tol", verify_tol, "Quadrature tolerance")->capture_default_str();

  // crossover
  auto* crossover = app.add_subcommand("crossover", "Height where the conditional bound overtakes");
  std::string cross_kind;
  double cross_alpha = 0.0, cross_lambda = 0.0;
  zb::CrossoverBracket bracket;
  crossover->add_option("--kind", cross_kind, "S, S1 or ZETA")->required();
  auto* cross_alpha_opt = crossover->add_option("--alpha", cross_alpha, "alpha (default: reference parameters)");
  auto* cross_lambda_opt = crossover->add_option("--lambda", cross_lambda, "lambda (default: reference parameters)");
  crossover->add_option("--lo", bracket.lo, "Lower end of the log10 t bracket")->capture_default_str();
  crossover->add_option("--hi", bracket.hi, "Upper end of the log10 t bracket")->capture_default_str();

  // optimize
  auto* optimize = app.add_subcommand("optimize", "Minimise the crossover height over (alpha, lambda)");
  std::string opt_kind;
  int opt_alpha_points = 0, opt_lambda_points = 0;
  optimize->add_option("--kind", opt_kind, "S, S1 or ZETA")->required();
  auto* opt_ap = optimize->add_option("--alpha-points", opt_alpha_points, "Coarse grid size in alpha");
  auto* opt_lp = optimize->add_option("--lambda-points", opt_lambda_points, "Coarse grid size in lambda");

  // empirical
  auto* empirical = app.add_subcommand("empirical", "Compare S, S1 and |zeta| from a zero table with the bounds");
  std::string zeros_path;
  if (char const* env = std::getenv("ZETA_BOUNDS_ZEROS")) zeros_path = env;
  std::string emp_grid = "10:1000:100:log";
  std::string emp_terms = "c0c1";
  empirical->add_option("--zeros", zeros_path, "Zero ordinates, plain or gzip (default: $ZETA_BOUNDS_ZEROS)");
  empirical->add_option("--grid", emp_grid, "min:max:points[:log|linear] over t")->capture_default_str();
  empirical->add_option("--terms", emp_terms, "Riemann-Siegel terms: main, c0 or c0c1")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    cli::GlobalOptions g;
    g.zeta_variant = cli::parse_hiary(hiary);
    g.jobs = jobs;
    auto const fmt = cli::parse_format(format);
    cli::Report report;

    if (*eval) {
      cli::EvalArgs a;
      a.kind = zb::parse_bound_kind(eval_kind);
      if (eval_grid_opt->count()) {
        a.t10 = zb::grid_points(zb::parse_grid(eval_grid));
      } else {
        a.t10 = eval_t10;
      }
      if (a.t10.empty()) return fail(cli::kExitUsage, "eval: --t10 or --grid is required");
      a.alpha = if_set(eval_alpha_opt, eval_alpha);
      a.lambda = if_set(eval_lambda_opt, eval_lambda);
      report = cli::cmd_eval(a, g);
    } else if (*verify) {
      cli::VerifyArgs a;
      a.target = verify_target;
      a.max = if_set(verify_max_opt, verify_max);
      a.sieve_limit = if_set(verify_sieve_opt, verify_sieve);
      a.points = if_set(verify_points_opt, verify_points);
      if (verify_kind_opt->count()) a.kind = zb::parse_bound_kind(verify_kind);
      a.tol = verify_tol;
      report = cli::cmd_verify(a, g);
    } else if (*crossover) {
      cli::CrossoverArgs a;
      a.kind = zb::parse_bound_kind(cross_kind);
      a.alpha = if_set(cross_alpha_opt, cross_alpha);
      a.lambda = if_set(cross_lambda_opt, cross_lambda);
      a.bracket = bracket;
      report = cli::cmd_crossover(a, g);
    } else if (*optimize) {
      cli::OptimizeArgs a;
      a.kind = zb::parse_bound_kind(opt_kind);
      a.alpha_points = if_set(opt_ap, opt_alpha_points);
      a.lambda_points = if_set(opt_lp, opt_lambda_points);
      report = cli::cmd_optimize(a, g);
    } else if (*empirical) {
      cli::EmpiricalArgs a;
      a.zeros_path = zeros_path;
      a.grid = zb::parse_grid(emp_grid);
      a.terms = cli::parse_terms(emp_terms);
      report = cli::cmd_empirical(a, g);
    }

    std::cout << cli::emit(report, fmt);
    std::cout.flush();
    return report.exit_code;
  } catch (zb::NoRootError const& e) {
    return fail(cli::kExitCheckFailed, e.what());
  } catch (zb::NonConvergenceError const& e) {
    return fail(cli::kExitCheckFailed, e.what());
  } catch (std::exception const& e) {
    return fail(cli::kExitUsage, e.what());
  }
}
