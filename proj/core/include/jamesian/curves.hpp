#pragma once

#include <array>
#include <vector>

#include "jamesian/core.hpp"
#include "jamesian/generators.hpp"

namespace jamesian {

enum class CurveMethod { ClosedForm, Ode };

/// An ordered trace of one level curve: a-coordinates strictly
/// increasing, every b in (0,1).
struct CurveSamples {
  double level_c = 0.0;
  CurveMethod method = CurveMethod::ClosedForm;
  std::vector<std::array<double, 2>> points;  // (a, b)
};

/// Samples the level curve J(a,b) = c at n points uniform on
/// [1e-3, 1-1e-3]. The anchor a = c (where b = 1/2) is inserted when it
/// is not already on the grid. Models with a dedicated level-curve
/// section use it; otherwise b = evaluate(a, c).
CurveSamples sample_level_curve(const JamesianModel& model, Prob c, int n);

/// Integrates the level-curve ODE db/da = g'(a)/g'(b) with classical
/// fixed-step RK4 in both directions from the initial point (c, 1/2),
/// covering a_range (final partial steps included). a_range must lie
/// within [1e-3, 1-1e-3] and contain c. Throws StepError if any
/// intermediate b leaves (1e-12, 1-1e-12).
CurveSamples integrate_level_curve_ode(const Generator& gen, Prob c,
                                       std::array<double, 2> a_range,
                                       double step);

struct FieldSample {
  double a = 0.0;
  double b = 0.0;
  double ga = 0.0;  // unit-length gradient direction
  double gb = 0.0;
};

/// Unit gradient directions of the model on the interior mesh.
/// Requires an analytic gradient.
std::vector<FieldSample> sample_gradient_field(const JamesianModel& model,
                                               double mesh);

}  // namespace jamesian
