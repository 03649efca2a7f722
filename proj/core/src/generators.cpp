#include "jamesian/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <vector>

#include "jamesian/normal.hpp"
#include "jamesian/quadrature.hpp"

namespace jamesian {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPowerQuadratureTol = 1e-10;
constexpr int kQuadratureDepthCap = 60;
constexpr double kKernelInversionTol = 1e-12;

// Finite stand-in for g -> -inf at 0. Probed at a = 1e-8; the slowest
// diverging builtin (probit) reaches about -5.61 there, while any
// bounded generator stays near its infimum.
constexpr double kDivergenceProxyBound = -5.0;

double logistic(double s) { return 1.0 / (1.0 + std::exp(-s)); }

void validate_power_exponent(double n) {
  if (!(n >= 1.0) || !std::isfinite(n)) {
    throw ParamError("power-family exponent must satisfy n >= 1");
  }
}

double power_integrand(double n, double t) {
  const double p = t * (1.0 - t);
  if (n == 1.0) return 1.0 / p;
  if (n == 2.0) return 1.0 / (p * p);
  if (n == 1.5) return 1.0 / (p * std::sqrt(p));
  return std::pow(p, -n);
}

std::string power_name(double n) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "power:%.12g", n);
  return buf;
}

void require_interior(double a, double b, const char* what) {
  if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0)) {
    throw DomainError(std::string(what) + " is defined on the open square only");
  }
}

// Chebyshev-spaced tabulation of g_n with exact nodal derivatives,
// evaluated by cubic Hermite interpolation. First-kind nodes keep the
// table clear of the divergent endpoints.
struct PowerTable {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> d;

  double eval(double a) const {
    if (!(a >= x.front() && a <= x.back())) {
      throw DomainError("cached power generator evaluated outside its table");
    }
    const auto it = std::upper_bound(x.begin(), x.end(), a);
    const std::size_t hi = std::min<std::size_t>(
        x.size() - 1, std::max<std::size_t>(1, it - x.begin()));
    const std::size_t lo = hi - 1;
    const double h = x[hi] - x[lo];
    const double t = (a - x[lo]) / h;
    const double t2 = t * t;
    const double omt = 1.0 - t;
    const double h00 = (1.0 + 2.0 * t) * omt * omt;
    const double h10 = t * omt * omt;
    const double h01 = t2 * (3.0 - 2.0 * t);
    const double h11 = t2 * (t - 1.0);
    return h00 * y[lo] + h10 * h * d[lo] + h01 * y[hi] + h11 * h * d[hi];
  }
};

std::shared_ptr<const PowerTable> build_power_table(double n) {
  constexpr int kNodes = 4097;
  auto table = std::make_shared<PowerTable>();
  table->x.resize(kNodes);
  table->y.resize(kNodes);
  table->d.resize(kNodes);
  for (int k = 0; k < kNodes; ++k) {
    const double theta = kPi * (k + 0.5) / kNodes;
    const double xk = 0.5 * (1.0 - std::cos(theta));
    table->x[k] = xk;
    table->y[k] = eval_g_power(n, xk, kPowerQuadratureTol);
    table->d[k] = power_integrand(n, xk);
  }
  return table;
}

}  // namespace

Generator logit_generator() {
  Generator gen;
  gen.name = "logit";
  gen.mode = EvaluationMode::ClosedForm;
  gen.g = [](double a) { return std::log(a / (1.0 - a)); };
  gen.g_inverse = logistic;
  gen.g_prime = [](double a) { return 1.0 / (a * (1.0 - a)); };
  return gen;
}

Generator rational_generator() {
  Generator gen;
  gen.name = "rational";
  gen.mode = EvaluationMode::ClosedForm;
  gen.g = [](double a) { return (2.0 * a - 1.0) / (a * (1.0 - a)); };
  // Algebraically (s - 2 + sqrt(s^2+4)) / (2s), rearranged to stay
  // cancellation-free for every s including s = 0.
  gen.g_inverse = [](double s) {
    return 0.5 * (1.0 + s / (2.0 + std::sqrt(s * s + 4.0)));
  };
  gen.g_prime = [](double a) {
    const double u = a * (1.0 - a);
    return (2.0 * a * a - 2.0 * a + 1.0) / (u * u);
  };
  return gen;
}

Generator cot_generator() {
  Generator gen;
  gen.name = "cot";
  gen.mode = EvaluationMode::ClosedForm;
  // -cot(pi a) == tan(pi (a - 1/2)); the shifted form is exactly odd
  // about 1/2 in floating point.
  gen.g = [](double a) { return std::tan(kPi * (a - 0.5)); };
  gen.g_inverse = [](double s) { return 0.5 + std::atan(s) / kPi; };
  gen.g_prime = [](double a) {
    const double t = std::tan(kPi * (a - 0.5));
    return kPi * (1.0 + t * t);
  };
  return gen;
}

Generator probit_generator() {
  Generator gen;
  gen.name = "probit";
  gen.mode = EvaluationMode::ClosedForm;
  gen.g = [](double a) { return normal_quantile(a); };
  gen.g_inverse = [](double s) { return normal_cdf(s); };
  gen.g_prime = [](double a) { return 1.0 / normal_pdf(normal_quantile(a)); };
  return gen;
}

Generator power_generator(double n) {
  validate_power_exponent(n);
  Generator gen;
  gen.name = power_name(n);
  gen.mode = EvaluationMode::Quadrature;
  gen.g = [n](double a) { return eval_g_power(n, a, kPowerQuadratureTol); };
  gen.g_prime = [n](double a) { return power_integrand(n, a); };
  if (n == 1.0) {
    gen.g_inverse = logistic;
  } else if (n == 1.5) {
    gen.g_inverse = [](double s) {
      return 0.5 + s / (2.0 * std::sqrt(s * s + 16.0));
    };
  }
  return gen;
}

Generator power_generator_cached(double n) {
  validate_power_exponent(n);
  auto table = build_power_table(n);
  Generator gen;
  gen.name = power_name(n) + ":cached";
  gen.mode = EvaluationMode::Quadrature;
  gen.g = [table](double a) { return table->eval(a); };
  gen.g_prime = [n](double a) { return power_integrand(n, a); };
  return gen;
}

Generator builtin_generator(const std::string& id) {
  if (id == "logit") return logit_generator();
  if (id == "rational") return rational_generator();
  if (id == "cot") return cot_generator();
  if (id == "probit") return probit_generator();
  if (id.rfind("power:", 0) == 0) {
    const std::string arg = id.substr(6);
    char* end = nullptr;
    const double n = std::strtod(arg.c_str(), &end);
    if (arg.empty() || end != arg.c_str() + arg.size()) {
      throw ParamError("malformed power-family exponent '" + arg + "'");
    }
    return power_generator(n);
  }
  throw ParamError("unknown generator id '" + id + "'");
}

double eval_g_power(double n, Prob a, double tol) {
  validate_power_exponent(n);
  if (!(tol > 0.0)) {
    throw DomainError("quadrature tolerance must be positive");
  }
  const double av = a.value();
  if (av == 0.0 || av == 1.0) {
    throw DomainError("g_n diverges at the endpoints");
  }
  return adaptive_simpson([n](double t) { return power_integrand(n, t); }, 0.5,
                          av, tol, kQuadratureDepthCap);
}

double invert_monotone(const Generator& gen, double s, double tol) {
  if (!std::isfinite(s)) throw DomainError("inversion target must be finite");
  if (!(tol > 0.0)) throw DomainError("inversion tolerance must be positive");
  if (gen.g_inverse) return gen.g_inverse(s);
  if (!gen.g) throw ParamError("generator has no forward map");

  constexpr double kLoClamp = 1e-15;
  constexpr double kHiClamp = 1.0 - 1e-15;
  double lo = 0.25;
  double hi = 0.75;
  double g_lo = gen.g(lo);
  double g_hi = gen.g(hi);
  while (g_lo > s) {
    if (lo <= kLoClamp) {
      throw ConvergenceError("bracket cannot enclose target from below");
    }
    lo = std::max(kLoClamp, 0.5 * lo);
    g_lo = gen.g(lo);
  }
  while (g_hi < s) {
    if (hi >= kHiClamp) {
      throw ConvergenceError("bracket cannot enclose target from above");
    }
    hi = std::min(kHiClamp, 0.5 * (1.0 + hi));
    g_hi = gen.g(hi);
  }

  const double residual_bound = tol * std::max(1.0, std::abs(s));
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 256; ++iter) {
    const double gx = gen.g(x);
    if (std::abs(gx - s) <= residual_bound) return x;
    if (gx < s) {
      lo = x;
    } else {
      hi = x;
    }
    double next = std::numeric_limits<double>::quiet_NaN();
    if (gen.g_prime) {
      const double slope = gen.g_prime(x);
      if (std::isfinite(slope) && slope > 0.0) {
        next = x - (gx - s) / slope;
      }
    }
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x) next = 0.5 * (lo + hi);
    if (hi - lo < std::numeric_limits<double>::epsilon() * 0.25) {
      // Interval exhausted at double resolution.
      if (std::abs(gen.g(next) - s) <= residual_bound) return next;
      throw ConvergenceError("inversion interval collapsed before meeting tolerance");
    }
    x = next;
  }
  throw ConvergenceError("inversion did not meet tolerance in 256 iterations");
}

JamesianModel jamesian_from_generator(const Generator& gen) {
  if (!gen.g) throw ParamError("generator has no forward map");
  JamesianModel model;
  model.name = gen.name;
  model.provenance = Provenance::GeneratorBased;
  const Generator captured = gen;
  model.interior_kernel = [captured](double a, double b) {
    const double s = captured.g(a) - captured.g(b);
    return invert_monotone(captured, s, kKernelInversionTol);
  };
  if (gen.g_prime) {
    const auto kernel = model.interior_kernel;
    const auto g_prime = gen.g_prime;
    model.analytic_gradient =
        [kernel, g_prime](double a, double b) -> std::array<double, 2> {
      const double j = kernel(a, b);
      const double denom = g_prime(j);
      return {g_prime(a) / denom, -g_prime(b) / denom};
    };
  }
  return model;
}

ConditionReport generator_selfcheck(const Generator& gen, int gridsize,
                                    double tol) {
  if (gridsize < 3) throw DomainError("selfcheck gridsize must be at least 3");
  if (!(tol > 0.0)) throw DomainError("selfcheck tolerance must be positive");
  if (!gen.g) throw ParamError("generator has no forward map");

  ConditionReport report;
  report.model_name = gen.name;
  report.list = ConditionList::GeneratorSelfcheck;
  report.grid_mesh = 1.0 / (gridsize + 1);
  report.tolerance = tol;

  const int cells = gridsize + 1;
  std::vector<double> xs(gridsize);
  std::vector<double> gs(gridsize);
  for (int k = 0; k < gridsize; ++k) {
    xs[k] = static_cast<double>(k + 1) / cells;
    gs[k] = gen.g(xs[k]);
  }

  for (int k = 0; k + 1 < gridsize; ++k) {
    if (!(gs[k + 1] > gs[k])) {
      report.violations.push_back(
          {"monotone", xs[k], xs[k + 1], gs[k] - gs[k + 1]});
    }
  }

  for (int k = 0; k < gridsize / 2; ++k) {
    const int mirror = gridsize - 1 - k;
    const double residual = std::abs(gs[mirror] + gs[k]);
    if (residual > tol) {
      report.violations.push_back({"odd-symmetry", xs[k], xs[mirror], residual});
    }
  }

  const double center = std::abs(gen.g(0.5));
  if (center > 1e-12) {
    report.violations.push_back({"center-zero", 0.5, 0.5, center});
  }

  const double near_zero = gen.g(1e-8);
  if (!(near_zero < kDivergenceProxyBound)) {
    report.violations.push_back(
        {"divergence-proxy", 1e-8, 0.0, near_zero - kDivergenceProxyBound});
  }

  for (int k = 0; k < gridsize; ++k) {
    double back;
    try {
      back = gen.g_inverse ? gen.g_inverse(gs[k])
                           : invert_monotone(gen, gs[k], kKernelInversionTol);
    } catch (const ConvergenceError&) {
      report.violations.push_back(
          {"inverse-roundtrip", xs[k], 0.0,
           std::numeric_limits<double>::infinity()});
      continue;
    }
    const double residual = std::abs(back - xs[k]);
    if (residual > tol) {
      report.violations.push_back({"inverse-roundtrip", xs[k], back, residual});
    }
  }

  if (gen.g_prime) {
    for (int k = 0; k < gridsize; ++k) {
      const double x = xs[k];
      const double h = std::min(1e-6, 0.25 * std::min(x, 1.0 - x));
      const double fd = (gen.g(x + h) - gen.g(x - h)) / (2.0 * h);
      const double analytic = gen.g_prime(x);
      const double allowance = 1e-4 * std::max(1.0, std::abs(analytic));
      const double residual = std::abs(fd - analytic);
      if (residual > allowance) {
        report.violations.push_back({"derivative-fd", x, 0.0, residual});
      }
    }
  }

  return report;
}

double h32_closed_form(Prob a, Prob b) {
  const double av = a.value();
  const double bv = b.value();
  require_interior(av, bv, "h32_closed_form");
  const double u = av * (1.0 - av);
  const double v = bv * (1.0 - bv);
  const double up = 1.0 - 2.0 * av;
  const double vp = 1.0 - 2.0 * bv;
  const double radicand =
      u + v - 4.0 * u * v - 2.0 * up * vp * std::sqrt(u * v);
  return 0.5 + (vp * std::sqrt(u) - up * std::sqrt(v)) /
                   (2.0 * std::sqrt(radicand));
}

std::array<double, 2> generator_gradient(const Generator& gen, Prob a,
                                         Prob b) {
  if (!gen.g_prime) {
    throw DomainError("generator '" + gen.name + "' has no derivative");
  }
  const double av = a.value();
  const double bv = b.value();
  require_interior(av, bv, "generator_gradient");
  const double s = gen.g(av) - gen.g(bv);
  const double j = invert_monotone(gen, s, kKernelInversionTol);
  const double denom = gen.g_prime(j);
  return {gen.g_prime(av) / denom, -gen.g_prime(bv) / denom};
}

}  // namespace jamesian
