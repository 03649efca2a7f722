#include "jamesian/core.hpp"

namespace jamesian {

BoundaryDisposition classify_boundary(Prob a, Prob b) {
  const double av = a.value();
  const double bv = b.value();
  if ((av == 0.0 && bv == 0.0) || (av == 1.0 && bv == 1.0)) {
    return BoundaryDisposition::undefined();
  }
  if ((bv == 0.0 && av > 0.0) || (av == 1.0 && bv < 1.0)) {
    return BoundaryDisposition::forced(1.0);
  }
  if ((av == 0.0 && bv > 0.0) || (bv == 1.0 && av < 1.0)) {
    return BoundaryDisposition::forced(0.0);
  }
  return BoundaryDisposition::interior();
}

double evaluate(const JamesianModel& model, Prob a, Prob b) {
  const BoundaryDisposition d = classify_boundary(a, b);
  switch (d.kind) {
    case BoundaryDisposition::Kind::Undefined:
      throw UndefinedMatchup("matchup probability is undefined at (0,0) and (1,1)");
    case BoundaryDisposition::Kind::Forced:
      return d.forced_value;
    case BoundaryDisposition::Kind::Interior:
      break;
  }
  if (!model.interior_kernel) {
    throw ParamError("model '" + model.name + "' has no interior kernel");
  }
  return model.interior_kernel(a.value(), b.value());
}

double JamesianModel::operator()(Prob a, Prob b) const {
  return evaluate(*this, a, b);
}

}  // namespace jamesian
