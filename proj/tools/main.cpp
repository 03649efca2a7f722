// Command-line surface for the Jamesian model library: evaluation,
// gradients, level curves, Monte Carlo validation and condition audits.
//
// Exit codes: 0 success, 1 usage/argument errors, 2 domain errors,
// 3 numerical errors (convergence, step, tie limits), 4 condition
// violations.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jamesian/curves.hpp"
#include "jamesian/generators.hpp"
#include "jamesian/james.hpp"
#include "jamesian/piecewise.hpp"
#include "jamesian/verify.hpp"

namespace {

using json = nlohmann::json;

std::string fmt_g(double v, int significant) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  return buf;
}

struct ResolvedModel {
  jamesian::JamesianModel model;
  std::optional<jamesian::Generator> generator;
};

ResolvedModel resolve_model(const std::string& id) {
  if (id == "james") return {jamesian::james_model(), std::nullopt};
  if (id == "piecewise") return {jamesian::piecewise_model(), std::nullopt};
  jamesian::Generator gen = jamesian::builtin_generator(id);
  return {jamesian::jamesian_from_generator(gen), std::move(gen)};
}

int run_eval(const std::string& model_id, double a, double b,
             const std::string& format) {
  const ResolvedModel rm = resolve_model(model_id);
  const double value = jamesian::evaluate(rm.model, a, b);
  if (format == "json") {
    json out{{"command", "eval"}, {"model", model_id}, {"a", a}, {"b", b},
             {"value", value}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << fmt_g(value, 15) << "\n";
  }
  return 0;
}

int run_grad(const std::string& model_id, double a, double b) {
  const ResolvedModel rm = resolve_model(model_id);
  if (!rm.model.analytic_gradient) {
    throw jamesian::DomainError("model '" + model_id +
                                "' has no analytic gradient");
  }
  if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0)) {
    throw jamesian::DomainError("gradients are reported at interior points");
  }
  const auto grad = rm.model.analytic_gradient(a, b);
  const double norm = std::hypot(grad[0], grad[1]);
  std::cout << "dJ_da = " << fmt_g(grad[0], 15) << "\n";
  std::cout << "dJ_db = " << fmt_g(grad[1], 15) << "\n";
  std::cout << "direction = " << fmt_g(grad[0] / norm, 15) << ","
            << fmt_g(grad[1] / norm, 15) << "\n";
  return 0;
}

int run_curve(const std::string& model_id, double c, int n, bool use_ode,
              double step, const std::string& out_path) {
  const ResolvedModel rm = resolve_model(model_id);

  jamesian::CurveSamples samples;
  double max_deviation = 0.0;
  if (use_ode) {
    jamesian::Generator gen = [&] {
      if (rm.generator) return *rm.generator;
      if (model_id == "james") return jamesian::logit_generator();
      throw jamesian::DomainError(
          "--ode requires a generator-backed model (or james via logit)");
    }();
    samples = jamesian::integrate_level_curve_ode(gen, c, {1e-3, 1.0 - 1e-3},
                                                  step);
    for (const auto& p : samples.points) {
      max_deviation = std::max(
          max_deviation, std::abs(p[1] - jamesian::evaluate(rm.model, p[0], c)));
    }
  } else {
    samples = jamesian::sample_level_curve(rm.model, c, n);
  }

  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw jamesian::DomainError("cannot open output file '" + out_path + "'");
  }
  file << "a,b\n";
  for (const auto& p : samples.points) {
    file << fmt_g(p[0], 17) << "," << fmt_g(p[1], 17) << "\n";
  }
  if (use_ode) {
    file << "# max_deviation = " << fmt_g(max_deviation, 17) << "\n";
  }
  file.close();

  std::cout << "points = " << samples.points.size() << "\n";
  std::cout << "file = " << out_path << "\n";
  if (use_ode) {
    std::cout << "max_deviation = " << fmt_g(max_deviation, 17) << "\n";
  }
  return 0;
}

int run_mc(const std::string& model_id, double a, double b,
           std::uint64_t trials, std::uint64_t seed,
           std::uint64_t max_rounds) {
  if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0)) {
    throw jamesian::DomainError("mc requires an interior matchup point");
  }
  const ResolvedModel rm = resolve_model(model_id);
  const jamesian::McEstimate est =
      jamesian::mc_estimate(a, b, trials, seed, max_rounds);
  const double model_value = jamesian::evaluate(rm.model, a, b);
  const double z = est.std_error > 0.0
                       ? (est.estimate - model_value) / est.std_error
                       : (est.estimate == model_value ? 0.0
                                                      : std::numeric_limits<double>::infinity());
  std::cout << "a = " << fmt_g(est.a, 15) << "\n";
  std::cout << "b = " << fmt_g(est.b, 15) << "\n";
  std::cout << "trials = " << est.trials << "\n";
  std::cout << "seed = " << est.seed << "\n";
  std::cout << "wins = " << est.wins << "\n";
  std::cout << "estimate = " << fmt_g(est.estimate, 15) << "\n";
  std::cout << "std_error = " << fmt_g(est.std_error, 15) << "\n";
  std::cout << "ties_resampled_total = " << est.ties_resampled_total << "\n";
  std::cout << "model = " << model_id << "\n";
  std::cout << "model_value = " << fmt_g(model_value, 15) << "\n";
  std::cout << "z = " << fmt_g(z, 15) << "\n";
  return 0;
}

int run_check(const std::string& model_id, const std::string& list_id,
              int mesh_cells, double tol, const std::string& format) {
  const ResolvedModel rm = resolve_model(model_id);
  const jamesian::ConditionList list =
      jamesian::condition_list_from_string(list_id);
  if (mesh_cells < 10) {
    throw jamesian::DomainError("mesh must divide (0,1) into at least 10 cells");
  }
  const jamesian::ConditionReport report =
      jamesian::check_conditions(rm.model, list, 1.0 / mesh_cells, tol);
  if (format == "json") {
    json violations = json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"condition", v.condition_id},
                            {"a", v.a},
                            {"b", v.b},
                            {"magnitude", v.magnitude}});
    }
    json out{{"command", "check"},
             {"model", report.model_name},
             {"list", to_string(report.list)},
             {"mesh", report.grid_mesh},
             {"tol", report.tolerance},
             {"pass", report.pass()},
             {"violation_count", report.violations.size()},
             {"violations", violations}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.pass() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"James function and Jamesian-model toolkit"};
  app.require_subcommand(1);

  std::string model_id = "james";
  std::string list_id = "james";
  std::string format = "text";
  std::string out_path;
  double a = 0.0, b = 0.0, c = 0.0;
  double tol = 1e-8;
  double step = 1e-3;
  int n = 101;
  int mesh_cells = 50;
  bool use_ode = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_rounds = 1000000;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a model at (a,b)");
  eval_cmd->add_option("--model", model_id, "Model id")->required();
  eval_cmd->add_option("--a", a, "First winning percentage")->required();
  eval_cmd->add_option("--b", b, "Second winning percentage")->required();
  eval_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* grad_cmd =
      app.add_subcommand("grad", "Analytic gradient of a model at (a,b)");
  grad_cmd->add_option("--model", model_id, "Model id")->required();
  grad_cmd->add_option("--a", a, "First winning percentage")->required();
  grad_cmd->add_option("--b", b, "Second winning percentage")->required();

  auto* curve_cmd =
      app.add_subcommand("curve", "Sample one level curve to a CSV file");
  curve_cmd->add_option("--model", model_id, "Model id")->required();
  curve_cmd->add_option("--c", c, "Level value in (0,1)")->required();
  curve_cmd->add_option("--n", n, "Number of uniform samples");
  curve_cmd->add_flag("--ode", use_ode, "Integrate the level-curve ODE");
  curve_cmd->add_option("--step", step, "RK4 step for --ode");
  curve_cmd->add_option("--out", out_path, "Output CSV path")->required();

  auto* mc_cmd = app.add_subcommand(
      "mc", "Monte Carlo estimate of a matchup, compared with a model");
  mc_cmd->add_option("--a", a, "First winning percentage")->required();
  mc_cmd->add_option("--b", b, "Second winning percentage")->required();
  mc_cmd->add_option("--trials", trials, "Number of trials")->required();
  mc_cmd->add_option("--seed", seed, "PRNG seed (default 0)");
  mc_cmd->add_option("--model", model_id, "Comparison model (default james)");
  mc_cmd->add_option("--max-rounds", max_rounds,
                     "Tie-resampling limit per trial");

  auto* check_cmd =
      app.add_subcommand("check", "Audit a model against a condition list");
  check_cmd->add_option("--model", model_id, "Model id")->required();
  check_cmd->add_option("--list", list_id, "james, proto or involutive")
      ->required()
      ->check(CLI::IsMember({"james", "proto", "involutive"}));
  check_cmd->add_option("--mesh", mesh_cells, "Grid cells per axis");
  check_cmd->add_option("--tol", tol, "Residual tolerance");
  check_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(model_id, a, b, format);
    if (grad_cmd->parsed()) return run_grad(model_id, a, b);
    if (curve_cmd->parsed())
      return run_curve(model_id, c, n, use_ode, step, out_path);
    if (mc_cmd->parsed())
      return run_mc(model_id, a, b, trials, seed, max_rounds);
    if (check_cmd->parsed())
      return run_check(model_id, list_id, mesh_cells, tol, format);
  } catch (const jamesian::TieLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const jamesian::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const jamesian::ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const jamesian::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const jamesian::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
