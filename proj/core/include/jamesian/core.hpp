#pragma once

#include <array>
#include <functional>
#include <string>

#include "jamesian/errors.hpp"

namespace jamesian {

/// A winning percentage (or any probability), validated to lie in [0,1].
///
/// Values are stored exactly as given: nothing is snapped to the
/// endpoints, and boundary semantics apply to exact 0 and exact 1 only.
class Prob {
 public:
  // Intentionally implicit so numeric literals flow into the API.
  Prob(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw DomainError("probability must lie in [0,1]");
    }
  }

  operator double() const noexcept { return value_; }
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// A pair of winning percentages. (0,0) and (1,1) are constructible but
/// carry no defined matchup probability.
struct MatchupPoint {
  Prob a;
  Prob b;

  bool undefined() const noexcept {
    return (a.value() == 0.0 && b.value() == 0.0) ||
           (a.value() == 1.0 && b.value() == 1.0);
  }
};

/// Where a point sits relative to the boundary rules shared by every
/// Jamesian model: interior, forced to 0 or 1 by an edge, or undefined
/// at the two excluded corners.
struct BoundaryDisposition {
  enum class Kind { Interior, Forced, Undefined };

  Kind kind = Kind::Interior;
  double forced_value = 0.0;  // 0 or 1, meaningful only when kind == Forced

  static BoundaryDisposition interior() noexcept { return {Kind::Interior, 0.0}; }
  static BoundaryDisposition forced(double v) noexcept { return {Kind::Forced, v}; }
  static BoundaryDisposition undefined() noexcept { return {Kind::Undefined, 0.0}; }

  bool is_interior() const noexcept { return kind == Kind::Interior; }
  bool is_forced() const noexcept { return kind == Kind::Forced; }
  bool is_undefined() const noexcept { return kind == Kind::Undefined; }

  friend bool operator==(const BoundaryDisposition&, const BoundaryDisposition&) = default;
};

/// Classifies (a,b) against the shared boundary rules:
///   - (0,0) and (1,1) are undefined;
///   - an opponent at 0 loses outright, a team at 1 wins outright
///     (value forced to 1), and symmetrically for forced 0;
///   - everything else is interior.
BoundaryDisposition classify_boundary(Prob a, Prob b);

enum class Provenance { ClosedForm, GeneratorBased, Piecewise };

/// An evaluatable matchup-probability model.
///
/// The interior kernel is only ever called with 0 < a,b < 1; boundary
/// dispatch is centralized in evaluate(), so kernels never see the
/// indeterminate corner forms. Models are immutable after construction
/// and all evaluations are pure.
struct JamesianModel {
  std::string name;
  Provenance provenance = Provenance::ClosedForm;

  /// Matchup probability on the open square.
  std::function<double(double, double)> interior_kernel;

  /// Optional: analytic (dJ/da, dJ/db) at an interior point.
  std::function<std::array<double, 2>(double, double)> analytic_gradient;

  /// Optional closed-form level-curve section (a, c) -> b. When absent,
  /// level curves are sampled as b = evaluate(a, c), which is the curve
  /// itself for every involutive model.
  std::function<double(double, double)> level_curve;

  double operator()(Prob a, Prob b) const;
};

/// Evaluates a model at (a,b): forced value on the boundary, interior
/// kernel otherwise. Throws UndefinedMatchup at (0,0) and (1,1).
double evaluate(const JamesianModel& model, Prob a, Prob b);

}  // namespace jamesian
