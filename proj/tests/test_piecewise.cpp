#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "jamesian/piecewise.hpp"
#include "jamesian/verify.hpp"
#include "oracle_helpers.hpp"

using namespace jamesian;

namespace {

double region_formula(Region r, double a, double b) {
  switch (r) {
    case Region::I: return a / (2.0 * b);
    case Region::II: return (2.0 * a - b) / (2.0 * a);
    case Region::III: return (1.0 - b) / (2.0 * (1.0 - a));
    case Region::IV: return (1.0 + a - 2.0 * b) / (2.0 * (1.0 - b));
  }
  return -1.0;
}

}  // namespace

TEST_CASE("region_classify: examples and tie-breaking") {
  CHECK(region_classify(1.0 / 3.0, 0.25) == Region::II);
  CHECK(region_classify(1.0 / 3.0, 0.625) == Region::I);
  CHECK(region_classify(0.5, 0.5) == Region::I);
  CHECK(region_classify(0.2, 0.7) == Region::I);
  CHECK(region_classify(0.7, 0.8) == Region::III);
  CHECK(region_classify(0.8, 0.4) == Region::IV);
  // Ties break toward the lower-numbered region.
  CHECK(region_classify(0.3, 0.3) == Region::I);
  CHECK(region_classify(0.7, 0.7) == Region::III);
  CHECK(region_classify(0.7, 0.3) == Region::II);
  CHECK_THROWS_AS(region_classify(0.0, 0.5), DomainError);
  CHECK_THROWS_AS(region_classify(0.5, 1.0), DomainError);
}

TEST_CASE("piecewise_j: exact reference values") {
  CHECK(piecewise_j(1.0 / 3.0, 0.25) ==
        doctest::Approx(0.625).epsilon(1e-15));
  CHECK(piecewise_j(1.0 / 3.0, 0.625) ==
        doctest::Approx(4.0 / 15.0).epsilon(1e-15));
}

TEST_CASE("piecewise_j: diagonal, boundary and range") {
  for (double a : oracle::linspace(0.1, 0.9, 9)) {
    CHECK(piecewise_j(a, a) == doctest::Approx(0.5).epsilon(1e-15));
  }
  CHECK(piecewise_j(0.5, 0.0) == 1.0);
  CHECK(piecewise_j(0.0, 0.5) == 0.0);
  CHECK_THROWS_AS(piecewise_j(0.0, 0.0), UndefinedMatchup);
  for (const auto& [a, b] : oracle::random_interior_points(200, 61)) {
    const double v = piecewise_j(a, b);
    CHECK(v > 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("the four formulas agree on the region boundaries") {
  for (double a : oracle::linspace(0.01, 0.99, 99)) {
    // Along b = a: regions I/II below the antidiagonal, III/IV above.
    if (a + a <= 1.0) {
      CHECK(region_formula(Region::I, a, a) ==
            doctest::Approx(region_formula(Region::II, a, a)).epsilon(1e-12));
    }
    if (a + a >= 1.0) {
      CHECK(region_formula(Region::III, a, a) ==
            doctest::Approx(region_formula(Region::IV, a, a)).epsilon(1e-12));
    }
    // Along b = 1 - a: I/III on the left half, II/IV on the right.
    const double b = 1.0 - a;
    if (b >= a) {
      CHECK(region_formula(Region::I, a, b) ==
            doctest::Approx(region_formula(Region::III, a, b)).epsilon(1e-12));
    }
    if (b <= a) {
      CHECK(region_formula(Region::II, a, b) ==
            doctest::Approx(region_formula(Region::IV, a, b)).epsilon(1e-12));
    }
  }
}

TEST_CASE("piecewise_level_curve: anchors and branch values") {
  for (double c : oracle::linspace(0.1, 0.9, 9)) {
    CHECK(piecewise_level_curve(c, c) == doctest::Approx(0.5).epsilon(1e-13));
  }
  for (double a : oracle::linspace(0.05, 0.95, 19)) {
    CHECK(piecewise_level_curve(0.5, a) == doctest::Approx(a).epsilon(1e-15));
  }
  // c = 1/4, a = 0.2 sits on the first branch: b = a/(2c) = 0.4.
  CHECK(piecewise_level_curve(0.25, 0.2) ==
        doctest::Approx(0.4).epsilon(1e-15));
  CHECK(piecewise_j(0.2, 0.4) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("piecewise_level_curve: round trip through piecewise_j") {
  for (const auto& [c, a] : oracle::random_interior_points(300, 67)) {
    const double b = piecewise_level_curve(c, a);
    CHECK(b > 0.0);
    CHECK(b < 1.0);
    CHECK(piecewise_j(a, b) == doctest::Approx(c).epsilon(1e-12));
  }
  CHECK_THROWS_AS(piecewise_level_curve(0.0, 0.5), DomainError);
  CHECK_THROWS_AS(piecewise_level_curve(0.5, 1.0), DomainError);
}

TEST_CASE("piecewise model passes the James-conditions audit") {
  const ConditionReport report =
      check_conditions(piecewise_model(), ConditionList::James, 1.0 / 20,
                       1e-10);
  CHECK(report.pass());
  if (!report.pass()) MESSAGE(report.to_text());
}

TEST_CASE("piecewise is not involutive: exact residual at (1/3, 1/4)") {
  const double inner = piecewise_j(1.0 / 3.0, 0.25);
  const double outer = piecewise_j(1.0 / 3.0, inner);
  // J(1/3, 5/8) = 4/15, so the involution misses 1/4 by exactly 1/60.
  CHECK(std::abs(outer - 0.25) ==
        doctest::Approx(1.0 / 60.0).epsilon(1e-12));
}

TEST_CASE("piecewise involution residual grows large elsewhere") {
  const double inner = piecewise_j(0.9, 0.1);
  const double outer = piecewise_j(0.9, inner);
  CHECK(std::abs(outer - 0.1) > 0.1);
}

TEST_CASE("one-sided derivatives split across b = 1 - a") {
  const double h = 1e-6;
  for (double a0 : {0.25, 0.75}) {
    const double b0 = 1.0 - a0;
    const double left =
        (piecewise_j(a0, b0) - piecewise_j(a0 - h, b0)) / h;
    const double right =
        (piecewise_j(a0 + h, b0) - piecewise_j(a0, b0)) / h;
    CHECK(std::abs(right - left) > 0.05);
  }
}

TEST_CASE("one-sided derivatives agree at the center") {
  const double h = 1e-6;
  const double left = (piecewise_j(0.5, 0.5) - piecewise_j(0.5 - h, 0.5)) / h;
  const double right = (piecewise_j(0.5 + h, 0.5) - piecewise_j(0.5, 0.5)) / h;
  CHECK(std::abs(right - left) < 0.01);
}
