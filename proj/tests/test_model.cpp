#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "adsgp/model.hpp"

using namespace adsgp;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("classify_regime thresholds") {
  CHECK(classify_regime(0.5, 1.0).kind == RegimeKind::Subcritical);
  CHECK(classify_regime(1.0, 1.0).kind == RegimeKind::Critical);
  CHECK(classify_regime(2.0, 1.0).kind == RegimeKind::Supercritical);
  CHECK(classify_regime(0.0, 4.0).kind == RegimeKind::Subcritical);

  const Regime r = classify_regime(3.0, 0.5);
  CHECK(r.a_ell == doctest::Approx(1.5));
  CHECK(r.tol > 0.0);
}

TEST_CASE("classify_regime critical band") {
  CHECK(classify_regime(1.0 + 1e-13, 1.0).kind == RegimeKind::Critical);
  CHECK(classify_regime(1.0 - 1e-13, 1.0).kind == RegimeKind::Critical);
  CHECK(classify_regime(1.0 + 1e-11, 1.0).kind == RegimeKind::Supercritical);
  CHECK(classify_regime(1.0 - 1e-11, 1.0).kind == RegimeKind::Subcritical);
}

TEST_CASE("classify_regime rejects bad inputs") {
  CHECK_THROWS_AS(classify_regime(-1.0, 1.0), ValidationError);
  CHECK_THROWS_AS(classify_regime(1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(classify_regime(std::numeric_limits<double>::quiet_NaN(), 1.0),
                  ValidationError);
  CHECK_THROWS_AS(classify_regime(std::numeric_limits<double>::infinity(), 1.0),
                  ValidationError);
}

TEST_CASE("classify_regime is monotone in a_ell") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  std::vector<double> xs(400);
  for (auto& x : xs) x = u(rng);
  std::sort(xs.begin(), xs.end());
  int prev = 0;
  for (const double x : xs) {
    const int idx = static_cast<int>(classify_regime(x, 1.0).kind);
    CHECK(idx >= prev);
    prev = idx;
  }
}

TEST_CASE("nondimensionalize products") {
  AtomParams atom{2.0, 0.1, 0.3};
  ScenarioConfig cfg{Spacetime::AdS, 0.5, 3.0, 1};
  const auto g = nondimensionalize(atom, cfg);
  REQUIRE(g.a_ell.has_value());
  REQUIRE(g.omega0_ell.has_value());
  CHECK(*g.a_ell == doctest::Approx(1.5));
  CHECK(*g.omega0_ell == doctest::Approx(1.0));
  CHECK(g.theta == doctest::Approx(0.3));
  CHECK(g.mu == doctest::Approx(0.1));
  REQUIRE(g.zeta.has_value());
  CHECK(*g.zeta == 1);
}

TEST_CASE("nondimensionalize de Sitter drops zeta") {
  AtomParams atom{1.0, 0.1, 0.3};
  ScenarioConfig cfg{Spacetime::DeSitter, 1.0, 0.0, 0};
  const auto g = nondimensionalize(atom, cfg);
  CHECK(*g.a_ell == doctest::Approx(0.0));
  CHECK(*g.omega0_ell == doctest::Approx(1.0));
  CHECK_FALSE(g.zeta.has_value());
}

TEST_CASE("nondimensionalize Minkowski marks radius groups absent") {
  AtomParams atom{1.0, 0.1, 0.3};
  ScenarioConfig cfg{Spacetime::Minkowski, 0.0, 0.0, 0};
  const auto g = nondimensionalize(atom, cfg);
  CHECK_FALSE(g.a_ell.has_value());
  CHECK_FALSE(g.omega0_ell.has_value());
  CHECK_FALSE(g.zeta.has_value());
}

TEST_CASE("atom validation") {
  CHECK_NOTHROW(validate(AtomParams{1.0, 0.1, 0.0}));
  CHECK_NOTHROW(validate(AtomParams{1.0, 0.1, kPi}));
  CHECK_THROWS_AS(validate(AtomParams{1.0, 0.1, -0.1}), ValidationError);
  CHECK_THROWS_AS(validate(AtomParams{1.0, 0.1, kPi + 0.1}), ValidationError);
  CHECK_THROWS_AS(validate(AtomParams{0.0, 0.1, 0.5}), ValidationError);
  CHECK_THROWS_AS(validate(AtomParams{1.0, 0.0, 0.5}), ValidationError);
}

TEST_CASE("scenario validation") {
  CHECK_THROWS_AS(validate(ScenarioConfig{Spacetime::AdS, 0.0, 1.0, 0}), ValidationError);
  CHECK_THROWS_AS(validate(ScenarioConfig{Spacetime::AdS, 1.0, 1.0, 2}), ValidationError);
  CHECK_THROWS_AS(validate(ScenarioConfig{Spacetime::DeSitter, -1.0, 0.0, 0}),
                  ValidationError);
  // zeta is ignored outside AdS
  CHECK_NOTHROW(validate(ScenarioConfig{Spacetime::DeSitter, 1.0, 0.0, 5}));
  CHECK_NOTHROW(validate(ScenarioConfig{Spacetime::Minkowski, 0.0, 0.0, 0}));
}

TEST_CASE("name parsing round-trips") {
  CHECK(parse_spacetime("ads") == Spacetime::AdS);
  CHECK(parse_spacetime("ds") == Spacetime::DeSitter);
  CHECK(parse_spacetime("minkowski") == Spacetime::Minkowski);
  CHECK_THROWS_AS(parse_spacetime("euclidean"), ValidationError);
  for (int z : {-1, 0, 1}) CHECK(parse_boundary(boundary_name(z)) == z);
  CHECK_THROWS_AS(parse_boundary("robin"), ValidationError);
}
