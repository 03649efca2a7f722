#include "jamesian/piecewise.hpp"

namespace jamesian {

namespace {

double kernel(double a, double b) {
  const bool above_diagonal = b >= a;
  const bool below_antidiagonal = a + b <= 1.0;
  if (above_diagonal && below_antidiagonal) return a / (2.0 * b);
  if (!above_diagonal && below_antidiagonal) return (2.0 * a - b) / (2.0 * a);
  if (above_diagonal) return (1.0 - b) / (2.0 * (1.0 - a));
  return (1.0 + a - 2.0 * b) / (2.0 * (1.0 - b));
}

}  // namespace

Region region_classify(Prob a, Prob b) {
  const double av = a.value();
  const double bv = b.value();
  if (!(av > 0.0 && av < 1.0 && bv > 0.0 && bv < 1.0)) {
    throw DomainError("regions are defined on the open square only");
  }
  const bool above_diagonal = bv >= av;
  const bool below_antidiagonal = av + bv <= 1.0;
  if (above_diagonal && below_antidiagonal) return Region::I;
  if (!above_diagonal && below_antidiagonal) return Region::II;
  if (above_diagonal) return Region::III;
  return Region::IV;
}

double piecewise_j(Prob a, Prob b) {
  const BoundaryDisposition d = classify_boundary(a, b);
  if (d.is_undefined()) {
    throw UndefinedMatchup("matchup probability is undefined at (0,0) and (1,1)");
  }
  if (d.is_forced()) return d.forced_value;
  return kernel(a.value(), b.value());
}

double piecewise_level_curve(Prob c, Prob a) {
  const double cv = c.value();
  const double av = a.value();
  if (!(cv > 0.0 && cv < 1.0 && av > 0.0 && av < 1.0)) {
    throw DomainError("level curves are defined for 0 < c < 1 and 0 < a < 1");
  }
  if (cv <= 0.5) {
    const double split = 2.0 * cv / (1.0 + 2.0 * cv);
    if (av <= split) return av / (2.0 * cv);
    return 2.0 * cv * av + 1.0 - 2.0 * cv;
  }
  const double split = 1.0 / (3.0 - 2.0 * cv);
  if (av <= split) return (2.0 - 2.0 * cv) * av;
  return (av + 1.0 - 2.0 * cv) / (2.0 - 2.0 * cv);
}

JamesianModel piecewise_model() {
  JamesianModel model;
  model.name = "piecewise";
  model.provenance = Provenance::Piecewise;
  model.interior_kernel = [](double a, double b) { return kernel(a, b); };
  // Not involutive, so b = J(a,c) does not trace the level curve; the
  // explicit j_c family does.
  model.level_curve = [](double a, double c) {
    return piecewise_level_curve(c, a);
  };
  return model;
}

}  // namespace jamesian
