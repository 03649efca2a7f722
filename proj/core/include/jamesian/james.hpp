#pragma once

#include <array>

#include "jamesian/core.hpp"

namespace jamesian {

/// First partial derivatives of the James function.
struct Partials {
  double dp_da;  // >= 0 on the interior
  double dp_db;  // <= 0 on the interior
};

/// Second partial derivatives of the James function. The mixed partial
/// carries the sign of a - b.
struct SecondPartials {
  double d2p_da2;
  double d2p_db2;
  double d2p_dadb;
};

/// The James function P(a,b) = a(1-b) / (a(1-b) + b(1-a)): the
/// probability that a team with winning percentage a beats a team with
/// winning percentage b. Boundary rules per classify_boundary; throws
/// UndefinedMatchup at (0,0) and (1,1).
double james_p(Prob a, Prob b);

/// The worth q_c(a) = c*a/(1-a) assigned to a team with winning
/// percentage a against a reference worth c > 0 ("log5" when c = 1/2).
/// Satisfies a = q/(q+c). Requires 0 < a < 1.
double log5_worth(Prob a, double c);

/// dP/da = b(1-b)/D^2 and dP/db = -a(1-a)/D^2 with D = a(1-b)+b(1-a).
/// Interior points only.
Partials james_partials(Prob a, Prob b);

/// d2P/da2 = -2b(1-b)(1-2b)/D^3, d2P/db2 = 2a(1-a)(1-2a)/D^3,
/// d2P/dadb = (a-b)/D^3. Interior points only.
SecondPartials james_second_partials(Prob a, Prob b);

/// Unnormalized gradient direction <b(1-b), -a(1-a)>. Defined everywhere
/// except the four corners where both coordinates are 0 or 1.
std::array<double, 2> james_gradient_direction(Prob a, Prob b);

/// The involution partner c = P(a,b), which satisfies P(a,c) = b for any
/// fixed 0 < a < 1.
double james_involution_partner(Prob a, Prob b);

/// The level curve P(a,b) = c expressed as b = a(1-c)/(a(1-c)+c(1-a)).
/// Requires 0 < a < 1 and 0 < c < 1.
double james_level_curve(Prob a, Prob c);

/// The closed-form James model with its analytic gradient.
JamesianModel james_model();

}  // namespace jamesian
