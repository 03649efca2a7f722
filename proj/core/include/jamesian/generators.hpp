#pragma once

#include <array>
#include <functional>
#include <string>

#include "jamesian/core.hpp"
#include "jamesian/verify.hpp"

namespace jamesian {

enum class EvaluationMode { ClosedForm, Quadrature };

/// A generator g: (0,1) -> R. Strictly increasing, odd about 1/2
/// (g(1-a) = -g(a)), with g -> -inf at 0; any such function seeds an
/// involutive model via J(a,b) = g^{-1}(g(a) - g(b)).
///
/// g_inverse and g_prime are optional; when g_inverse is absent the
/// inverse is realized numerically by invert_monotone. Generators are
/// immutable and safe to share across threads.
struct Generator {
  std::string name;
  EvaluationMode mode = EvaluationMode::ClosedForm;
  std::function<double(double)> g;
  std::function<double(double)> g_inverse;
  std::function<double(double)> g_prime;
};

/// g(a) = log(a/(1-a)), inverse logistic. Generates the James function.
Generator logit_generator();

/// g(a) = (2a-1)/(a(1-a)) with its closed-form inverse.
Generator rational_generator();

/// g(a) = -cot(pi a), inverse (1/pi) arccot(-s) valued in (0,1).
Generator cot_generator();

/// g = standard normal quantile, inverse the normal distribution
/// function (the Thurstone–Mosteller-style model).
Generator probit_generator();

/// The power family g_n(a) = integral_{1/2}^{a} dt/(t(1-t))^n, n >= 1,
/// evaluated by adaptive quadrature. Closed-form inverses exist for
/// n = 1 (logistic) and n = 3/2 only. Throws ParamError for n < 1.
Generator power_generator(double n);

/// Power-family generator backed by a Chebyshev-spaced table of g_n
/// (4097 nodes, cubic Hermite interpolation with exact derivatives).
/// Intended for bulk sampling workloads; single evaluations and all
/// verification paths use the exact quadrature generator above.
Generator power_generator_cached(double n);

/// Resolves "logit", "rational", "cot", "probit" or "power:<n>".
/// Throws ParamError for anything else.
Generator builtin_generator(const std::string& id);

/// g_n(a) by adaptive Simpson quadrature from 1/2 to a with absolute
/// error target tol. Negative for a < 1/2. Throws DomainError at the
/// divergent endpoints a = 0, 1 and ParamError for n < 1.
double eval_g_power(double n, Prob a, double tol = 1e-10);

/// Solves g(x) = s for x in (0,1): uses the closed-form inverse when the
/// generator has one, otherwise expands a bracket from [1/4, 3/4] toward
/// the clamps [1e-15, 1-1e-15] and runs bisection with Newton polishing
/// (when g_prime is available) until |g(x) - s| <= tol * max(1, |s|).
/// Throws ConvergenceError if the bracket cannot enclose s.
double invert_monotone(const Generator& gen, double s, double tol);

/// The involutive model J(a,b) = g^{-1}(g(a) - g(b)). When the generator
/// carries g_prime the model gets the analytic gradient
/// (g'(a)/g'(J), -g'(b)/g'(J)). Callers are expected to hand in a
/// generator that passes generator_selfcheck.
JamesianModel jamesian_from_generator(const Generator& gen);

/// Audits a generator on `gridsize` interior points: strict
/// monotonicity, odd symmetry within tol, g(1/2) = 0 within 1e-12, a
/// divergence proxy at a = 1e-8, the inverse round-trip within tol, and
/// (when g_prime is present) the derivative against centered
/// differences.
ConditionReport generator_selfcheck(const Generator& gen, int gridsize,
                                    double tol);

/// The explicit closed form of the n = 3/2 hyper-James function, written
/// with u = a(1-a), v = b(1-b), u' = 1-2a, v' = 1-2b. Interior only.
double h32_closed_form(Prob a, Prob b);

/// Analytic gradient (g'(a)/g'(J), -g'(b)/g'(J)) of the generator model
/// at an interior point. Requires g_prime.
std::array<double, 2> generator_gradient(const Generator& gen, Prob a,
                                         Prob b);

}  // namespace jamesian
