#include "jamesian/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "jamesian/james.hpp"
#include "jamesian/rng.hpp"

namespace jamesian {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v, const char* spec = "%.9g") {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// Grid of model values v[i][j] = J(i/k, j/k); NaN at the two undefined
// corners.
struct ValueGrid {
  int k;
  std::vector<std::vector<double>> v;

  double x(int i) const { return static_cast<double>(i) / k; }
  bool defined(int i, int j) const {
    return !((i == 0 && j == 0) || (i == k && j == k));
  }
};

ValueGrid tabulate(const JamesianModel& model, int k) {
  ValueGrid grid{k, std::vector<std::vector<double>>(
                        k + 1, std::vector<double>(k + 1, kNaN))};
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) {
      if (!grid.defined(i, j)) continue;
      grid.v[i][j] = evaluate(model, grid.x(i), grid.x(j));
    }
  }
  return grid;
}

void check_identity_at_half(const JamesianModel& model, const ValueGrid& grid,
                            const char* id, double tol,
                            std::vector<Violation>& out) {
  // P(a, 1/2) = a, evaluated on the grid column when 1/2 is a node.
  for (int i = 0; i <= grid.k; ++i) {
    const double a = grid.x(i);
    const double value = (grid.k % 2 == 0) ? grid.v[i][grid.k / 2]
                                           : evaluate(model, a, 0.5);
    const double residual = std::abs(value - a);
    if (residual > tol) out.push_back({id, a, 0.5, residual});
  }
}

void check_complement(const ValueGrid& grid, const char* id, double tol,
                      std::vector<Violation>& out) {
  // P(b,a) = 1 - P(a,b) over every legal ordered pair.
  for (int i = 0; i <= grid.k; ++i) {
    for (int j = i; j <= grid.k; ++j) {
      if (!grid.defined(i, j) || !grid.defined(j, i)) continue;
      const double residual = std::abs(grid.v[j][i] - (1.0 - grid.v[i][j]));
      if (residual > tol) out.push_back({id, grid.x(i), grid.x(j), residual});
    }
  }
}

void check_loss_symmetry(const ValueGrid& grid, double tol,
                         std::vector<Violation>& out) {
  // P(1-b, 1-a) = P(a,b); the partner of node (i,j) is (k-j, k-i).
  const int k = grid.k;
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) {
      if (!grid.defined(i, j) || !grid.defined(k - j, k - i)) continue;
      if (std::make_pair(i, j) > std::make_pair(k - j, k - i)) continue;
      const double residual = std::abs(grid.v[k - j][k - i] - grid.v[i][j]);
      if (residual > tol) out.push_back({"d", grid.x(i), grid.x(j), residual});
    }
  }
}

void check_monotone(const ValueGrid& grid, const char* id,
                    std::vector<Violation>& out) {
  // Non-decreasing in a for every b; strictly increasing for 0 < b < 1.
  // Adjacent-pair comparison with zero margin.
  const int k = grid.k;
  for (int j = 0; j <= k; ++j) {
    const bool strict = (j > 0 && j < k);
    for (int i = 0; i + 1 <= k; ++i) {
      if (!grid.defined(i, j) || !grid.defined(i + 1, j)) continue;
      const double diff = grid.v[i + 1][j] - grid.v[i][j];
      if (diff < 0.0 || (strict && diff <= 0.0)) {
        out.push_back({id, grid.x(i + 1), grid.x(j), -diff});
      }
    }
  }
}

void audit_james(const JamesianModel& model, const ValueGrid& grid, double tol,
                 std::vector<Violation>& out) {
  check_identity_at_half(model, grid, "a", tol, out);
  for (int i = 1; i <= grid.k; ++i) {
    const double residual = std::abs(grid.v[i][0] - 1.0);
    if (residual > tol) out.push_back({"b", grid.x(i), 0.0, residual});
  }
  check_complement(grid, "c", tol, out);
  check_loss_symmetry(grid, tol, out);
  check_monotone(grid, "e", out);
}

void audit_proto(const JamesianModel& model, const ValueGrid& grid, double tol,
                 std::vector<Violation>& out) {
  const int k = grid.k;
  for (int i = 1; i < k; ++i) {
    const double residual = std::abs(grid.v[i][i] - 0.5);
    if (residual > tol) out.push_back({"1", grid.x(i), grid.x(i), residual});
  }
  check_identity_at_half(model, grid, "2", tol, out);
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) {
      if (!grid.defined(i, j)) continue;
      const double a = grid.x(i);
      const double b = grid.x(j);
      const double v = grid.v[i][j];
      if (i > j && !(v > 0.5)) out.push_back({"3", a, b, 0.5 - v});
      if (i < j && !(v < 0.5)) out.push_back({"3", a, b, v - 0.5});
      if (i > 0 && i < k) {
        if (b < 0.5 && !(v > a)) out.push_back({"4", a, b, a - v});
        if (b > 0.5 && !(v < a)) out.push_back({"4", a, b, v - a});
      }
      if (v < 0.0 || v > 1.0) {
        out.push_back({"5", a, b, std::max(-v, v - 1.0)});
      }
    }
  }
  for (int i = 1; i < k; ++i) {
    const double at_zero = std::abs(grid.v[i][0] - 1.0);
    if (at_zero > tol) out.push_back({"5", grid.x(i), 0.0, at_zero});
    const double at_one = std::abs(grid.v[i][k]);
    if (at_one > tol) out.push_back({"5", grid.x(i), 1.0, at_one});
  }
  check_complement(grid, "6", tol, out);
}

void audit_involutive(const JamesianModel& model, const ValueGrid& grid,
                      double tol, std::vector<Violation>& out) {
  const int k = grid.k;
  for (int i = 1; i < k; ++i) {
    for (int j = 0; j <= k; ++j) {
      if (!grid.defined(i, j)) continue;
      const double inner = grid.v[i][j];
      const double outer = evaluate(model, grid.x(i), inner);
      const double residual = std::abs(outer - grid.x(j));
      if (residual > tol) out.push_back({"i", grid.x(i), grid.x(j), residual});
    }
  }
  check_complement(grid, "ii", tol, out);
  check_monotone(grid, "iii", out);
}

}  // namespace

std::string to_string(ConditionList list) {
  switch (list) {
    case ConditionList::James: return "james";
    case ConditionList::Proto: return "proto";
    case ConditionList::Involutive: return "involutive";
    case ConditionList::GeneratorSelfcheck: return "generator-selfcheck";
  }
  return "unknown";
}

ConditionList condition_list_from_string(const std::string& id) {
  if (id == "james") return ConditionList::James;
  if (id == "proto") return ConditionList::Proto;
  if (id == "involutive") return ConditionList::Involutive;
  throw ParamError("unknown condition list '" + id + "'");
}

const Violation* ConditionReport::worst() const noexcept {
  const Violation* best = nullptr;
  for (const Violation& v : violations) {
    if (best == nullptr || v.magnitude > best->magnitude) best = &v;
  }
  return best;
}

std::string ConditionReport::to_text(std::size_t max_listed) const {
  std::string out;
  out += "model = " + model_name + "\n";
  out += "list = " + to_string(list) + "\n";
  out += "mesh = " + fmt(grid_mesh, "%.15g") + "\n";
  out += "tolerance = " + fmt(tolerance, "%.15g") + "\n";
  out += "violations = " + std::to_string(violations.size()) + "\n";
  if (const Violation* w = worst()) {
    out += "worst = condition " + w->condition_id + " at (" + fmt(w->a) +
           ", " + fmt(w->b) + "): " + fmt(w->magnitude, "%.6g") + "\n";
  }
  const std::size_t shown = std::min(max_listed, violations.size());
  for (std::size_t i = 0; i < shown; ++i) {
    const Violation& v = violations[i];
    out += "  condition " + v.condition_id + " at (" + fmt(v.a) + ", " +
           fmt(v.b) + "): " + fmt(v.magnitude, "%.6g") + "\n";
  }
  if (violations.size() > shown) {
    out += "  (" + std::to_string(violations.size() - shown) +
           " more not shown)\n";
  }
  out += std::string("result = ") + (pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

ConditionReport check_conditions(const JamesianModel& model,
                                 ConditionList list, double mesh, double tol) {
  if (!(mesh > 0.0)) throw DomainError("mesh must be positive");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const int k = static_cast<int>(std::lround(1.0 / mesh));
  if (k < 10) throw DomainError("mesh must divide (0,1) into at least 10 cells");
  if (list == ConditionList::GeneratorSelfcheck) {
    throw ParamError("generator-selfcheck audits run through generator_selfcheck");
  }

  ConditionReport report;
  report.model_name = model.name;
  report.list = list;
  report.grid_mesh = 1.0 / k;
  report.tolerance = tol;

  const ValueGrid grid = tabulate(model, k);
  switch (list) {
    case ConditionList::James:
      audit_james(model, grid, tol, report.violations);
      break;
    case ConditionList::Proto:
      audit_proto(model, grid, tol, report.violations);
      break;
    case ConditionList::Involutive:
      audit_involutive(model, grid, tol, report.violations);
      break;
    case ConditionList::GeneratorSelfcheck:
      break;
  }
  return report;
}

McEstimate mc_estimate(Prob a, Prob b, std::uint64_t trials,
                       std::uint64_t seed, std::uint64_t max_rounds) {
  const double av = a.value();
  const double bv = b.value();
  if ((av == 0.0 && bv == 0.0) || (av == 1.0 && bv == 1.0)) {
    throw UndefinedMatchup("matchup probability is undefined at (0,0) and (1,1)");
  }
  if (trials < 1) throw DomainError("trials must be at least 1");
  if (max_rounds < 1) throw DomainError("max_rounds must be at least 1");

  std::uint64_t wins = 0;
  std::uint64_t ties = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 rng(substream_seed(seed, t));
    for (std::uint64_t round = 0;; ++round) {
      if (round == max_rounds) {
        throw TieLimitExceeded("trial " + std::to_string(t) + " exceeded " +
                               std::to_string(max_rounds) + " tie rounds");
      }
      const bool x = rng.uniform() < av;
      const bool y = rng.uniform() < bv;
      if (x != y) {
        if (x) ++wins;
        ties += round;
        break;
      }
    }
  }

  McEstimate out;
  out.a = av;
  out.b = bv;
  out.trials = trials;
  out.wins = wins;
  out.estimate = static_cast<double>(wins) / static_cast<double>(trials);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) /
                            static_cast<double>(trials));
  out.seed = seed;
  out.ties_resampled_total = ties;
  return out;
}

bool McValidationReport::pass() const noexcept {
  return std::none_of(points.begin(), points.end(),
                      [](const McComparison& p) { return p.flagged; });
}

McValidationReport mc_validate(const JamesianModel& model,
                               const std::vector<MatchupPoint>& points,
                               std::uint64_t trials, std::uint64_t seed,
                               double z) {
  if (!(z > 0.0)) throw DomainError("z threshold must be positive");
  McValidationReport report;
  report.model_name = model.name;
  report.trials = trials;
  report.seed = seed;
  report.z_threshold = z;
  report.points.reserve(points.size());
  for (std::size_t idx = 0; idx < points.size(); ++idx) {
    const MatchupPoint& p = points[idx];
    const double av = p.a.value();
    const double bv = p.b.value();
    if (!(av > 0.0 && av < 1.0 && bv > 0.0 && bv < 1.0)) {
      throw DomainError("mc_validate points must be interior");
    }
    const McEstimate est =
        mc_estimate(p.a, p.b, trials, substream_seed(seed, idx));
    const double model_value = evaluate(model, p.a, p.b);
    McComparison cmp;
    cmp.a = av;
    cmp.b = bv;
    cmp.estimate = est.estimate;
    cmp.std_error = est.std_error;
    cmp.model_value = model_value;
    if (est.std_error > 0.0) {
      cmp.z = (est.estimate - model_value) / est.std_error;
      cmp.flagged = std::abs(cmp.z) > z;
    } else {
      const bool exact = est.estimate == model_value;
      cmp.z = exact ? 0.0 : std::numeric_limits<double>::infinity();
      cmp.flagged = !exact;
    }
    report.points.push_back(cmp);
  }
  return report;
}

IdentityReport algebraic_identity_checks() {
  IdentityReport report;
  const int k = 20;
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) {
      const double a = static_cast<double>(i) / k;
      const double b = static_cast<double>(j) / k;
      const double same = a * b + (1.0 - a) * (1.0 - b);
      const double differ = a * (1.0 - b) + b * (1.0 - a);
      report.max_total_probability_residual =
          std::max(report.max_total_probability_residual,
                   std::abs(same + differ - 1.0));
      if ((a == 0.0 && b == 0.0) || (a == 1.0 && b == 1.0)) continue;
      const double p = james_p(a, b);
      report.max_functional_equation_residual =
          std::max(report.max_functional_equation_residual,
                   std::abs(p - (a * (1.0 - b) + same * p)));
      const double geometric = a * (1.0 - b) /
                               (1.0 - a * b - (1.0 - a) * (1.0 - b));
      report.max_geometric_series_residual =
          std::max(report.max_geometric_series_residual,
                   std::abs(geometric - p));
    }
  }
  report.pass = report.max_total_probability_residual <= 1e-15 &&
                report.max_functional_equation_residual <= 1e-12 &&
                report.max_geometric_series_residual <= 1e-12;
  return report;
}

FdReport fd_gradient_check(const JamesianModel& model,
                           const std::vector<MatchupPoint>& points, double h,
                           double tol) {
  if (!model.analytic_gradient) {
    throw DomainError("model '" + model.name + "' has no analytic gradient");
  }
  if (!(h > 0.0) || !(tol > 0.0)) {
    throw DomainError("step and tolerance must be positive");
  }
  FdReport report;
  report.model_name = model.name;
  report.h = h;
  report.tol = tol;
  for (const MatchupPoint& p : points) {
    const double a = p.a.value();
    const double b = p.b.value();
    if (!(a > h && a < 1.0 - h && b > h && b < 1.0 - h)) {
      throw DomainError("fd_gradient_check points must be interior with margin > h");
    }
    const auto grad = model.analytic_gradient(a, b);
    FdDeviation dev;
    dev.a = a;
    dev.b = b;
    dev.analytic_da = grad[0];
    dev.analytic_db = grad[1];
    dev.fd_da =
        (evaluate(model, a + h, b) - evaluate(model, a - h, b)) / (2.0 * h);
    dev.fd_db =
        (evaluate(model, a, b + h) - evaluate(model, a, b - h)) / (2.0 * h);
    dev.deviation = std::max(std::abs(dev.fd_da - dev.analytic_da),
                             std::abs(dev.fd_db - dev.analytic_db));
    report.max_deviation = std::max(report.max_deviation, dev.deviation);
    if (dev.deviation > tol) report.flagged.push_back(dev);
  }
  return report;
}

}  // namespace jamesian
