#include "jamesian/normal.hpp"

#include <cmath>

#include "jamesian/errors.hpp"

namespace jamesian {

namespace {

constexpr double kSqrt2Pi = 2.506628274631000502;
constexpr double kInvSqrt2 = 0.7071067811865475244;

// Rational minimax coefficients for the initial quantile guess
// (relative error ~1.15e-9 before refinement).
constexpr double kA[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                          -2.759285104469687e+02, 1.383577518672690e+02,
                          -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double kB[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                          -1.556989798598866e+02, 6.680131188771972e+01,
                          -1.328068155288572e+01};
constexpr double kC[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                          -2.400758277161838e+00, -2.549732539343734e+00,
                          4.374664141464968e+00,  2.938163982698783e+00};
constexpr double kD[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                          2.445134137142996e+00, 3.754408661907416e+00};

double tail_guess(double q) {
  return (((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q +
          kC[5]) /
         ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
}

// Quantile for 0 < p <= 1/2. With x <= 0 the Halley residual uses
// erfc of a non-negative argument, so the tail stays cancellation-free.
double quantile_lower_half(double p) {
  constexpr double kLow = 0.02425;
  double x;
  if (p < kLow) {
    x = tail_guess(std::sqrt(-2.0 * std::log(p)));
  } else {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((kA[0] * r + kA[1]) * r + kA[2]) * r + kA[3]) * r + kA[4]) * r +
         kA[5]) *
        q /
        (((((kB[0] * r + kB[1]) * r + kB[2]) * r + kB[3]) * r + kB[4]) * r +
         1.0);
  }
  // One Halley step against the exact distribution function.
  const double e = 0.5 * std::erfc(-x * kInvSqrt2) - p;
  const double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / kSqrt2Pi;
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("normal quantile is defined for 0 < p < 1");
  }
  // 1 - p is exact for p >= 1/2, so the upper half mirrors the lower.
  return p > 0.5 ? -quantile_lower_half(1.0 - p) : quantile_lower_half(p);
}

}  // namespace jamesian
