#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "jamesian/generators.hpp"
#include "jamesian/james.hpp"
#include "jamesian/piecewise.hpp"
#include "oracle_helpers.hpp"

using namespace jamesian;

namespace {

std::vector<JamesianModel> all_builtin_models() {
  return {james_model(),
          piecewise_model(),
          jamesian_from_generator(logit_generator()),
          jamesian_from_generator(rational_generator()),
          jamesian_from_generator(cot_generator()),
          jamesian_from_generator(probit_generator()),
          jamesian_from_generator(power_generator(1.5)),
          jamesian_from_generator(power_generator(2.0))};
}

}  // namespace

TEST_CASE("Prob rejects values outside [0,1]") {
  CHECK_NOTHROW(Prob(0.0));
  CHECK_NOTHROW(Prob(1.0));
  CHECK_NOTHROW(Prob(0.5));
  CHECK_THROWS_AS(Prob(-0.1), DomainError);
  CHECK_THROWS_AS(Prob(1.0000001), DomainError);
  CHECK_THROWS_AS(Prob(std::nan("")), DomainError);
}

TEST_CASE("Prob keeps near-boundary values unsnapped") {
  const Prob p(1e-16);
  CHECK(p.value() == 1e-16);
  CHECK(classify_boundary(p, 0.5).is_interior());
}

TEST_CASE("MatchupPoint flags the two excluded corners") {
  CHECK(MatchupPoint{0.0, 0.0}.undefined());
  CHECK(MatchupPoint{1.0, 1.0}.undefined());
  CHECK_FALSE(MatchupPoint{0.0, 1.0}.undefined());
  CHECK_FALSE(MatchupPoint{0.3, 0.7}.undefined());
}

TEST_CASE("classify_boundary: forced and undefined cases") {
  CHECK(classify_boundary(0.5, 0.0) == BoundaryDisposition::forced(1.0));
  CHECK(classify_boundary(0.0, 0.0) == BoundaryDisposition::undefined());
  CHECK(classify_boundary(0.3, 0.7) == BoundaryDisposition::interior());
  CHECK(classify_boundary(1.0, 0.25) == BoundaryDisposition::forced(1.0));

  CHECK(classify_boundary(1.0, 1.0) == BoundaryDisposition::undefined());
  CHECK(classify_boundary(0.0, 0.4) == BoundaryDisposition::forced(0.0));
  CHECK(classify_boundary(0.4, 1.0) == BoundaryDisposition::forced(0.0));
  // The two forced rules agree where they overlap.
  CHECK(classify_boundary(1.0, 0.0) == BoundaryDisposition::forced(1.0));
  CHECK(classify_boundary(0.0, 1.0) == BoundaryDisposition::forced(0.0));
}

TEST_CASE("classify_boundary: swap and complement symmetry") {
  const auto edge_points = [] {
    std::vector<std::pair<double, double>> pts;
    for (double t : oracle::linspace(0.1, 0.9, 9)) {
      pts.push_back({t, 0.0});
      pts.push_back({t, 1.0});
      pts.push_back({0.0, t});
      pts.push_back({1.0, t});
    }
    pts.push_back({1.0, 0.0});
    pts.push_back({0.0, 1.0});
    return pts;
  }();
  for (const auto& [a, b] : edge_points) {
    const auto d = classify_boundary(a, b);
    REQUIRE(d.is_forced());
    const auto swapped = classify_boundary(b, a);
    REQUIRE(swapped.is_forced());
    CHECK(swapped.forced_value == 1.0 - d.forced_value);
    const auto complemented = classify_boundary(1.0 - b, 1.0 - a);
    REQUIRE(complemented.is_forced());
    CHECK(complemented.forced_value == d.forced_value);
  }
}

TEST_CASE("evaluate dispatches boundaries uniformly for every model") {
  for (const auto& model : all_builtin_models()) {
    CAPTURE(model.name);
    CHECK(evaluate(model, 0.5, 0.0) == 1.0);
    CHECK(evaluate(model, 0.25, 0.0) == 1.0);
    CHECK(evaluate(model, 1.0, 0.5) == 1.0);
    CHECK(evaluate(model, 1.0, 0.0) == 1.0);
    CHECK(evaluate(model, 0.0, 0.5) == 0.0);
    CHECK(evaluate(model, 0.0, 1.0) == 0.0);
    CHECK(evaluate(model, 0.5, 1.0) == 0.0);
    CHECK(evaluate(model, 0.75, 1.0) == 0.0);
    CHECK_THROWS_AS(evaluate(model, 0.0, 0.0), UndefinedMatchup);
    CHECK_THROWS_AS(evaluate(model, 1.0, 1.0), UndefinedMatchup);
  }
}

TEST_CASE("evaluate: equal strength gives 1/2 for every model") {
  for (const auto& model : all_builtin_models()) {
    CAPTURE(model.name);
    CHECK(evaluate(model, 0.4, 0.4) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(evaluate(model, 0.25, 0.25) == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("evaluate stays strictly inside (0,1) on the open square") {
  const auto points = oracle::random_interior_points(100, 20240601, 0.01);
  for (const auto& model : all_builtin_models()) {
    CAPTURE(model.name);
    for (const auto& [a, b] : points) {
      const double v = evaluate(model, a, b);
      CHECK(v > 0.0);
      CHECK(v < 1.0);
    }
  }
}

TEST_CASE("james model satisfies P(a,1/2) = a through evaluate") {
  const auto model = james_model();
  CHECK(evaluate(model, 0.6, 0.5) == doctest::Approx(0.6).epsilon(1e-15));
}
