#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jamesian/core.hpp"

namespace jamesian {

enum class ConditionList { James, Proto, Involutive, GeneratorSelfcheck };

std::string to_string(ConditionList list);

/// Parses "james", "proto" or "involutive". Throws ParamError otherwise.
ConditionList condition_list_from_string(const std::string& id);

/// One audited condition that failed at a grid location.
struct Violation {
  std::string condition_id;
  double a = 0.0;
  double b = 0.0;
  double magnitude = 0.0;
};

/// Result of auditing a model (or generator) against a condition list on
/// a grid. An empty violation list means the audit passed.
struct ConditionReport {
  std::string model_name;
  ConditionList list = ConditionList::James;
  double grid_mesh = 0.0;
  double tolerance = 0.0;
  std::vector<Violation> violations;

  bool pass() const noexcept { return violations.empty(); }
  const Violation* worst() const noexcept;
  std::string to_text(std::size_t max_listed = 20) const;
};

/// Audits a model against one of the condition lists on the grid with
/// spacing `mesh` (which must divide (0,1) into at least 10 cells).
/// Exact identities are checked as residuals against `tol`; monotonicity
/// is checked on adjacent grid pairs, non-strict where an edge value of b
/// allows plateaus and strict for 0 < b < 1.
ConditionReport check_conditions(const JamesianModel& model,
                                 ConditionList list, double mesh, double tol);

/// One Monte Carlo estimate of a matchup probability, obtained by
/// simulating the paired Bernoulli draw (redraw on ties) with a seeded
/// deterministic generator.
struct McEstimate {
  double a = 0.0;
  double b = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t wins = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t ties_resampled_total = 0;

  friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

/// Simulates `trials` independent matchups between teams drawing 1 with
/// probabilities a and b. Each trial redraws until the two draws differ;
/// a trial that reaches max_rounds ties throws TieLimitExceeded. Results
/// are bit-identical for identical (a, b, trials, seed).
McEstimate mc_estimate(Prob a, Prob b, std::uint64_t trials,
                       std::uint64_t seed,
                       std::uint64_t max_rounds = 1000000);

struct McComparison {
  double a = 0.0;
  double b = 0.0;
  double estimate = 0.0;
  double std_error = 0.0;
  double model_value = 0.0;
  double z = 0.0;
  bool flagged = false;
};

struct McValidationReport {
  std::string model_name;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double z_threshold = 0.0;
  std::vector<McComparison> points;

  bool pass() const noexcept;
};

/// Compares Monte Carlo estimates with model values at interior points,
/// flagging any point where |estimate - model| > z * std_error. Each
/// point gets its own substream of `seed`.
McValidationReport mc_validate(const JamesianModel& model,
                               const std::vector<MatchupPoint>& points,
                               std::uint64_t trials, std::uint64_t seed,
                               double z);

/// Grid residuals of the three closed-form identities behind the James
/// function: the four draw outcomes summing to one, the tie-resampling
/// functional equation, and the geometric-series form.
struct IdentityReport {
  double max_total_probability_residual = 0.0;   // vs 1e-15
  double max_functional_equation_residual = 0.0; // vs 1e-12
  double max_geometric_series_residual = 0.0;    // vs 1e-12
  bool pass = false;
};

IdentityReport algebraic_identity_checks();

struct FdDeviation {
  double a = 0.0;
  double b = 0.0;
  double analytic_da = 0.0;
  double analytic_db = 0.0;
  double fd_da = 0.0;
  double fd_db = 0.0;
  double deviation = 0.0;
};

struct FdReport {
  std::string model_name;
  double h = 0.0;
  double tol = 0.0;
  double max_deviation = 0.0;
  std::vector<FdDeviation> flagged;

  bool pass() const noexcept { return flagged.empty(); }
};

/// Centered finite differences of the model against its analytic
/// gradient. Points must be interior with margin greater than h; models
/// without an analytic gradient are rejected with DomainError.
FdReport fd_gradient_check(const JamesianModel& model,
                           const std::vector<MatchupPoint>& points, double h,
                           double tol);

}  // namespace jamesian
