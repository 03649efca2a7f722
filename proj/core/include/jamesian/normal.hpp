#pragma once

namespace jamesian {

/// Standard normal distribution function, computed through the
/// complementary error function (absolute error at machine level).
double normal_cdf(double x);

/// Standard normal quantile: a rational minimax first guess refined by
/// one Halley step against normal_cdf. Absolute error well below 1e-9
/// across (0,1). Throws DomainError outside the open interval.
double normal_quantile(double p);

/// Standard normal density.
double normal_pdf(double x);

}  // namespace jamesian
