#include "jamesian/james.hpp"

namespace jamesian {

namespace {

double kernel(double a, double b) {
  const double num = a * (1.0 - b);
  return num / (num + b * (1.0 - a));
}

void require_interior(double a, double b, const char* what) {
  if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0)) {
    throw DomainError(std::string(what) + " is defined on the open square only");
  }
}

}  // namespace

double james_p(Prob a, Prob b) {
  const BoundaryDisposition d = classify_boundary(a, b);
  if (d.is_undefined()) {
    throw UndefinedMatchup("matchup probability is undefined at (0,0) and (1,1)");
  }
  if (d.is_forced()) return d.forced_value;
  return kernel(a.value(), b.value());
}

double log5_worth(Prob a, double c) {
  const double av = a.value();
  if (!(av > 0.0 && av < 1.0)) {
    throw DomainError("worth is defined for 0 < a < 1");
  }
  if (!(c > 0.0)) {
    throw DomainError("reference worth must be positive");
  }
  return c * av / (1.0 - av);
}

Partials james_partials(Prob a, Prob b) {
  const double av = a.value();
  const double bv = b.value();
  require_interior(av, bv, "james_partials");
  const double d = av * (1.0 - bv) + bv * (1.0 - av);
  const double d2 = d * d;
  return {bv * (1.0 - bv) / d2, -av * (1.0 - av) / d2};
}

SecondPartials james_second_partials(Prob a, Prob b) {
  const double av = a.value();
  const double bv = b.value();
  require_interior(av, bv, "james_second_partials");
  const double d = av * (1.0 - bv) + bv * (1.0 - av);
  const double d3 = d * d * d;
  return {-2.0 * bv * (1.0 - bv) * (1.0 - 2.0 * bv) / d3,
          2.0 * av * (1.0 - av) * (1.0 - 2.0 * av) / d3,
          (av - bv) / d3};
}

std::array<double, 2> james_gradient_direction(Prob a, Prob b) {
  const double av = a.value();
  const double bv = b.value();
  const bool a_edge = (av == 0.0 || av == 1.0);
  const bool b_edge = (bv == 0.0 || bv == 1.0);
  if (a_edge && b_edge) {
    throw DomainError("gradient direction is undefined at the four corners");
  }
  return {bv * (1.0 - bv), -av * (1.0 - av)};
}

double james_involution_partner(Prob a, Prob b) {
  const double av = a.value();
  if (!(av > 0.0 && av < 1.0)) {
    throw DomainError("involution partner is defined for 0 < a < 1");
  }
  return james_p(a, b);
}

double james_level_curve(Prob a, Prob c) {
  const double av = a.value();
  const double cv = c.value();
  if (!(av > 0.0 && av < 1.0 && cv > 0.0 && cv < 1.0)) {
    throw DomainError("level curves are defined for 0 < a < 1 and 0 < c < 1");
  }
  const double num = av * (1.0 - cv);
  return num / (num + cv * (1.0 - av));
}

JamesianModel james_model() {
  JamesianModel model;
  model.name = "james";
  model.provenance = Provenance::ClosedForm;
  model.interior_kernel = [](double a, double b) { return kernel(a, b); };
  model.analytic_gradient = [](double a, double b) -> std::array<double, 2> {
    const Partials p = james_partials(a, b);
    return {p.dp_da, p.dp_db};
  };
  return model;
}

}  // namespace jamesian
