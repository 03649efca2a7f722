#pragma once

#include "jamesian/core.hpp"

namespace jamesian {

/// The four subsets of the square cut by the diagonal b = a and the
/// antidiagonal a + b = 1. Ties break toward the lower-numbered region;
/// the four formulas coincide on the shared boundaries.
enum class Region { I, II, III, IV };

/// I: b >= a, a+b <= 1.  II: b <= a, a+b <= 1.
/// III: b >= a, a+b >= 1. IV: b <= a, a+b >= 1.
/// Interior points only.
Region region_classify(Prob a, Prob b);

/// The piecewise Jamesian function
///   I: a/(2b)   II: (2a-b)/(2a)   III: (1-b)/(2(1-a))   IV: (1+a-2b)/(2(1-b)).
/// Continuous, satisfies all James conditions, but not involutive and
/// not differentiable across b = 1-a.
double piecewise_j(Prob a, Prob b);

/// The level curve j_c(a) of the piecewise function:
///   c <= 1/2: a/(2c) up to a = 2c/(1+2c), then 2ca + 1 - 2c;
///   c >  1/2: (2-2c)a up to a = 1/(3-2c), then (a+1-2c)/(2-2c).
/// Satisfies piecewise_j(a, j_c(a)) = c and j_c(c) = 1/2.
double piecewise_level_curve(Prob c, Prob a);

JamesianModel piecewise_model();

}  // namespace jamesian
