#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "jamesian/generators.hpp"
#include "jamesian/james.hpp"
#include "jamesian/piecewise.hpp"
#include "jamesian/rng.hpp"
#include "jamesian/verify.hpp"
#include "oracle_helpers.hpp"

using namespace jamesian;

TEST_CASE("check_conditions: james model passes the james list") {
  const ConditionReport report = check_conditions(
      james_model(), ConditionList::James, 1.0 / 50, 1e-10);
  CHECK(report.pass());
  if (!report.pass()) MESSAGE(report.to_text());
}

TEST_CASE("check_conditions: piecewise fails involutive near (1/3, 1/4)") {
  const ConditionReport report = check_conditions(
      piecewise_model(), ConditionList::Involutive, 1.0 / 50, 1e-8);
  REQUIRE_FALSE(report.pass());
  bool witness_near_example = false;
  for (const Violation& v : report.violations) {
    if (v.condition_id == "i" && std::abs(v.a - 1.0 / 3.0) < 0.05 &&
        std::abs(v.b - 0.25) < 0.05) {
      witness_near_example = true;
      break;
    }
  }
  CHECK(witness_near_example);
}

TEST_CASE("check_conditions: a broken model fails the complement condition") {
  JamesianModel broken;
  broken.name = "first-team-percentage";
  broken.interior_kernel = [](double a, double) { return a; };
  const ConditionReport report =
      check_conditions(broken, ConditionList::James, 1.0 / 20, 1e-10);
  REQUIRE_FALSE(report.pass());
  bool complement_flagged = false;
  for (const Violation& v : report.violations) {
    if (v.condition_id == "c" && v.a + v.b != 1.0) {
      complement_flagged = true;
      break;
    }
  }
  CHECK(complement_flagged);
}

TEST_CASE("check_conditions: james list implies the proto list") {
  const std::vector<JamesianModel> models = {
      james_model(), piecewise_model(),
      jamesian_from_generator(logit_generator()),
      jamesian_from_generator(rational_generator()),
      jamesian_from_generator(cot_generator()),
      jamesian_from_generator(probit_generator())};
  for (const auto& model : models) {
    CAPTURE(model.name);
    const auto james_report =
        check_conditions(model, ConditionList::James, 1.0 / 20, 1e-8);
    const auto proto_report =
        check_conditions(model, ConditionList::Proto, 1.0 / 20, 1e-8);
    REQUIRE(james_report.pass());
    CHECK(proto_report.pass());
  }
}

TEST_CASE("check_conditions: argument validation") {
  CHECK_THROWS_AS(
      check_conditions(james_model(), ConditionList::James, 1.0 / 9, 1e-8),
      DomainError);
  CHECK_THROWS_AS(check_conditions(james_model(),
                                   ConditionList::GeneratorSelfcheck,
                                   1.0 / 20, 1e-8),
                  ParamError);
}

TEST_CASE("mc_estimate: statistical agreement with the James function") {
  for (std::uint64_t seed : {42ull, 7ull, 123ull}) {
    const McEstimate est = mc_estimate(0.6, 0.4, 1000000, seed);
    CHECK(std::abs(est.estimate - 9.0 / 13.0) < 3.0 * est.std_error);
  }
  const McEstimate symmetric = mc_estimate(0.7, 0.7, 100000, 7);
  CHECK(std::abs(symmetric.estimate - 0.5) < 3.0 * symmetric.std_error);
}

TEST_CASE("mc_estimate: forced outcome when a = 1") {
  const McEstimate est = mc_estimate(1.0, 0.5, 1000, 9);
  CHECK(est.wins == 1000);
  CHECK(est.estimate == 1.0);
  CHECK(est.std_error == 0.0);
}

TEST_CASE("mc_estimate: estimator bookkeeping") {
  const McEstimate est = mc_estimate(0.55, 0.3, 50000, 31);
  CHECK(est.estimate ==
        static_cast<double>(est.wins) / static_cast<double>(est.trials));
  CHECK(est.std_error ==
        std::sqrt(est.estimate * (1.0 - est.estimate) / est.trials));
}

TEST_CASE("mc_estimate: determinism and error cases") {
  const McEstimate first = mc_estimate(0.6, 0.4, 20000, 5);
  const McEstimate second = mc_estimate(0.6, 0.4, 20000, 5);
  CHECK(first == second);
  const McEstimate other_seed = mc_estimate(0.6, 0.4, 20000, 6);
  CHECK(first.wins != other_seed.wins);

  CHECK_THROWS_AS(mc_estimate(0.0, 0.0, 10, 1), UndefinedMatchup);
  CHECK_THROWS_AS(mc_estimate(1.0, 1.0, 10, 1), UndefinedMatchup);
  CHECK_THROWS_AS(mc_estimate(0.5, 0.5, 0, 1), DomainError);
  // Near the corner almost every round ties out.
  CHECK_THROWS_AS(mc_estimate(1e-12, 1e-12, 10, 1, 1000), TieLimitExceeded);
}

TEST_CASE("mc_estimate: tie frequency matches ab + (1-a)(1-b)") {
  const McEstimate est = mc_estimate(0.5, 0.5, 100000, 17);
  const double rounds =
      static_cast<double>(est.ties_resampled_total + est.trials);
  const double tie_freq = static_cast<double>(est.ties_resampled_total) / rounds;
  const double sigma = std::sqrt(0.25 / rounds);
  CHECK(std::abs(tie_freq - 0.5) < 4.0 * sigma);
}

TEST_CASE("substreams differ across trials") {
  CHECK(substream_seed(42, 0) != substream_seed(42, 1));
  CHECK(substream_seed(42, 0) != substream_seed(43, 0));
  SplitMix64 rng(substream_seed(0, 0));
  const double u = rng.uniform();
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
}

TEST_CASE("mc_validate: james passes, a different model gets flagged") {
  const auto points = [] {
    std::vector<MatchupPoint> pts;
    for (const auto& [a, b] : oracle::random_interior_points(5, 71, 0.1)) {
      pts.push_back({a, b});
    }
    return pts;
  }();
  const McValidationReport ok =
      mc_validate(james_model(), points, 1000000, 2024, 4.0);
  CHECK(ok.pass());

  // H_2 differs from the James function by about 0.021 at (0.8, 0.4),
  // far beyond 4 standard errors at 1e6 trials.
  const JamesianModel h2 = jamesian_from_generator(power_generator(2.0));
  CHECK(std::abs(evaluate(h2, 0.8, 0.4) - 6.0 / 7.0) > 0.015);
  const McValidationReport flagged =
      mc_validate(h2, {MatchupPoint{0.8, 0.4}}, 1000000, 2024, 4.0);
  REQUIRE(flagged.points.size() == 1);
  CHECK(flagged.points[0].flagged);
  CHECK_FALSE(flagged.pass());

  // Every Jamesian model gives the true value 1/2 at (0.5, 0.5).
  const McValidationReport center =
      mc_validate(h2, {MatchupPoint{0.5, 0.5}}, 100000, 99, 4.0);
  CHECK(center.pass());

  CHECK_THROWS_AS(
      mc_validate(james_model(), {MatchupPoint{0.0, 0.5}}, 10, 1, 4.0),
      DomainError);
}

TEST_CASE("algebraic_identity_checks: all three identities hold") {
  const IdentityReport report = algebraic_identity_checks();
  CHECK(report.pass);
  CHECK(report.max_total_probability_residual <= 1e-15);
  CHECK(report.max_functional_equation_residual <= 1e-12);
  CHECK(report.max_geometric_series_residual <= 1e-12);

  // Spot checks of the total-probability identity.
  CHECK(0.3 * 0.8 + 0.7 * 0.2 + 0.3 * 0.2 + 0.8 * 0.7 == 1.0);
  CHECK(0.0 * 1.0 + 1.0 * 0.0 + 0.0 * 0.0 + 1.0 * 1.0 == 1.0);
  // Functional-equation residual at (0.6, 0.4) with p = 9/13.
  const double p = 9.0 / 13.0;
  const double tie = 0.6 * 0.4 + 0.4 * 0.6;
  CHECK(std::abs(p - (0.6 * 0.6 + tie * p)) < 1e-15);
}

TEST_CASE("fd_gradient_check: james and rational pass, piecewise rejected") {
  const auto points = [] {
    std::vector<MatchupPoint> pts;
    for (double a : oracle::linspace(0.1, 0.9, 5)) {
      for (double b : oracle::linspace(0.1, 0.9, 5)) {
        pts.push_back({a, b});
      }
    }
    return pts;
  }();
  const FdReport james_report =
      fd_gradient_check(james_model(), points, 1e-6, 1e-5);
  CHECK(james_report.pass());
  const FdReport rational_report = fd_gradient_check(
      jamesian_from_generator(rational_generator()), points, 1e-6, 1e-5);
  CHECK(rational_report.pass());
  CHECK_THROWS_AS(fd_gradient_check(piecewise_model(), points, 1e-6, 1e-5),
                  DomainError);
  CHECK_THROWS_AS(
      fd_gradient_check(james_model(), {MatchupPoint{1e-8, 0.5}}, 1e-6, 1e-5),
      DomainError);
}

TEST_CASE("ConditionReport text rendering") {
  ConditionReport report;
  report.model_name = "james";
  report.list = ConditionList::James;
  report.grid_mesh = 0.02;
  report.tolerance = 1e-10;
  CHECK(report.to_text().find("result = PASS") != std::string::npos);
  report.violations.push_back({"c", 0.3, 0.4, 0.25});
  const std::string text = report.to_text();
  CHECK(text.find("result = FAIL") != std::string::npos);
  CHECK(text.find("condition c") != std::string::npos);
  CHECK(report.worst() == &report.violations[0]);
}
