#include "jamesian/curves.hpp"

#include <algorithm>
#include <cmath>

namespace jamesian {

namespace {

constexpr double kMargin = 1e-3;      // interior margin for all curve work
constexpr double kStripLo = 1e-12;    // admissible ODE strip for b
constexpr double kStripHi = 1.0 - 1e-12;

double rhs(const Generator& gen, double a, double b) {
  if (!(b > kStripLo && b < kStripHi)) {
    throw StepError("level-curve trajectory left the admissible strip");
  }
  return gen.g_prime(a) / gen.g_prime(b);
}

// Fixed-step RK4 sweep from (from_a, b0) to to_a; emits every step
// endpoint, final partial step included. The start point is not emitted.
std::vector<std::array<double, 2>> sweep(const Generator& gen, double from_a,
                                         double to_a, double b0, double step) {
  std::vector<std::array<double, 2>> out;
  const double direction = (to_a >= from_a) ? 1.0 : -1.0;
  const double span = std::abs(to_a - from_a);
  if (span == 0.0) return out;
  // Full steps strictly inside the span; the slack keeps a span that is
  // a near-exact multiple of the step from overshooting the endpoint.
  const auto full_steps =
      static_cast<std::size_t>(std::max(0.0, span / step - 1e-9));
  out.reserve(full_steps + 1);
  double a = from_a;
  double b = b0;
  for (std::size_t i = 1; i <= full_steps + 1; ++i) {
    const double next_a =
        (i <= full_steps) ? from_a + direction * step * static_cast<double>(i)
                          : to_a;
    const double h = next_a - a;
    if (h == 0.0) break;
    const double k1 = rhs(gen, a, b);
    const double k2 = rhs(gen, a + 0.5 * h, b + 0.5 * h * k1);
    const double k3 = rhs(gen, a + 0.5 * h, b + 0.5 * h * k2);
    const double k4 = rhs(gen, a + h, b + h * k3);
    b += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!(b > kStripLo && b < kStripHi)) {
      throw StepError("level-curve trajectory left the admissible strip");
    }
    a = next_a;
    out.push_back({a, b});
  }
  return out;
}

}  // namespace

CurveSamples sample_level_curve(const JamesianModel& model, Prob c, int n) {
  const double cv = c.value();
  if (!(cv > 0.0 && cv < 1.0)) {
    throw DomainError("level value must satisfy 0 < c < 1");
  }
  if (n < 2) throw DomainError("need at least two curve samples");

  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n) + 1);
  const double width = 1.0 - 2.0 * kMargin;
  for (int i = 0; i < n; ++i) {
    grid.push_back(kMargin + width * static_cast<double>(i) / (n - 1));
  }
  const bool have_anchor =
      std::any_of(grid.begin(), grid.end(),
                  [cv](double a) { return std::abs(a - cv) < 1e-12; });
  if (!have_anchor) {
    grid.insert(std::upper_bound(grid.begin(), grid.end(), cv), cv);
  }

  CurveSamples samples;
  samples.level_c = cv;
  samples.method = CurveMethod::ClosedForm;
  samples.points.reserve(grid.size());
  for (double a : grid) {
    const double b = model.level_curve ? model.level_curve(a, cv)
                                       : evaluate(model, a, cv);
    samples.points.push_back({a, b});
  }
  return samples;
}

CurveSamples integrate_level_curve_ode(const Generator& gen, Prob c,
                                       std::array<double, 2> a_range,
                                       double step) {
  if (!gen.g_prime) {
    throw DomainError("ODE integration requires a generator derivative");
  }
  const double cv = c.value();
  if (!(cv > 0.0 && cv < 1.0)) {
    throw DomainError("level value must satisfy 0 < c < 1");
  }
  if (!(step > 0.0)) throw DomainError("step must be positive");
  const double lo = a_range[0];
  const double hi = a_range[1];
  if (!(lo < hi) || lo < kMargin - 1e-15 || hi > 1.0 - kMargin + 1e-15) {
    throw DomainError("a_range must lie within [1e-3, 1-1e-3]");
  }
  if (!(lo <= cv && cv <= hi)) {
    throw DomainError("a_range must contain the initial abscissa c");
  }

  const auto right = sweep(gen, cv, hi, 0.5, step);
  const auto left = sweep(gen, cv, lo, 0.5, step);

  CurveSamples samples;
  samples.level_c = cv;
  samples.method = CurveMethod::Ode;
  samples.points.reserve(left.size() + right.size() + 1);
  for (auto it = left.rbegin(); it != left.rend(); ++it) {
    samples.points.push_back(*it);
  }
  samples.points.push_back({cv, 0.5});
  for (const auto& p : right) samples.points.push_back(p);
  return samples;
}

std::vector<FieldSample> sample_gradient_field(const JamesianModel& model,
                                               double mesh) {
  if (!model.analytic_gradient) {
    throw DomainError("model '" + model.name + "' has no analytic gradient");
  }
  if (!(mesh > 0.0)) throw DomainError("mesh must be positive");
  const int k = static_cast<int>(std::lround(1.0 / mesh));
  if (k < 2) throw DomainError("mesh too coarse for an interior field");

  std::vector<FieldSample> field;
  field.reserve(static_cast<std::size_t>(k - 1) * (k - 1));
  for (int i = 1; i < k; ++i) {
    for (int j = 1; j < k; ++j) {
      const double a = static_cast<double>(i) / k;
      const double b = static_cast<double>(j) / k;
      const auto grad = model.analytic_gradient(a, b);
      const double norm = std::hypot(grad[0], grad[1]);
      field.push_back({a, b, grad[0] / norm, grad[1] / norm});
    }
  }
  return field;
}

}  // namespace jamesian
