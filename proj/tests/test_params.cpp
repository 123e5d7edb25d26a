#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rc3bp/params.hpp"

using namespace rc3bp;
using doctest::Approx;

TEST_CASE("reduce: uncharged primaries give the classical problem") {
  const SystemParams p = reduce({2.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0});
  CHECK(p.mu == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(p.beta1 == 1.0);
  CHECK(p.beta2 == 1.0);
  CHECK(p.admissible);
  CHECK_FALSE(p.swapped);
}

TEST_CASE("reduce: unit charge-to-mass ratios cancel gravity and are inadmissible") {
  const SystemParams p = reduce({1.5, 0.5, 0.0, 1.5, 0.5, 2.0, 1.0, 1.0});
  CHECK(p.beta1 == Approx(0.0));
  CHECK(p.beta2 == Approx(0.0));
  CHECK_FALSE(p.admissible);
}

TEST_CASE("reduce: zero primary coupling is inadmissible for either sign of q3") {
  for (double q3 : {1.0, -1.0}) {
    const PhysicalSystem sys{1.0, 1.0, 0.0, 1.0, 1.0, q3, 1.0, 1.0};
    CHECK(primary_coupling(sys) == 0.0);
    CHECK_FALSE(reduce(sys).admissible);
  }
}

TEST_CASE("reduce: only the sign of q3 and the ratio k/G matter") {
  const SystemParams a = reduce({3.0, 1.0, 0.0, 0.6, -0.2, 1e-3, 4.0, 9.0});
  const SystemParams b = reduce({3.0, 1.0, 5.0, 0.6, -0.2, 7.0, 4.0, 9.0});
  CHECK(a.beta1 == b.beta1);
  CHECK(a.beta2 == b.beta2);
  CHECK(a.beta1 == Approx(1.0 - 0.2 * 1.5));
  CHECK(a.beta2 == Approx(1.0 + 0.2 * 1.5));
  const SystemParams c = reduce({3.0, 1.0, 0.0, 0.6, -0.2, -1.0, 4.0, 9.0});
  CHECK(c.beta1 == Approx(1.0 + 0.2 * 1.5));
}

TEST_CASE("reduce: errors") {
  CHECK_THROWS_AS(reduce({1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0}), Error);
  try {
    reduce({1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 1.0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroThirdCharge);
  }
  for (auto [m1, m2] : {std::pair{0.0, 1.0}, {1.0, -1.0}}) {
    try {
      reduce({m1, m2, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0});
      FAIL("expected NonpositiveMass");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonpositiveMass);
    }
  }
  CHECK_THROWS_AS(reduce({1.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0}), Error);
  CHECK_THROWS_AS(reduce({1.0, 1.0, -1.0, 0.0, 0.0, 1.0, 1.0, 1.0}), Error);
}

TEST_CASE("is_admissible examples") {
  CHECK(is_admissible(1.0, 1.0));
  CHECK_FALSE(is_admissible(2.0, 2.0));
  // (-6)(-0.5) = 3
  CHECK_FALSE(is_admissible(-5.0, 0.5));
  CHECK(is_admissible(-1.0, 0.6));
  CHECK_FALSE(is_admissible(-1.0, -1.0));
  CHECK_FALSE(is_admissible(0.0, 0.0));
}

TEST_CASE("force_regime examples") {
  CHECK(force_regime(1.0) == ForceRegime::NoCoulomb);
  CHECK(force_regime(0.0) == ForceRegime::BalancedRepulsive);
  CHECK(force_regime(1.5) == ForceRegime::CoulombAttractive);
  CHECK(force_regime(-0.1) == ForceRegime::CoulombDominatesRepulsive);
  CHECK(force_regime(0.5) == ForceRegime::GravityDominates);
  CHECK(force_regime(std::nextafter(1.0, 2.0)) == ForceRegime::CoulombAttractive);
  CHECK(force_regime(-0.0) == ForceRegime::BalancedRepulsive);
}

TEST_CASE("SystemParams::make validates and exposes cube roots") {
  const auto p = SystemParams::make(0.3, 8.0, -27.0);
  CHECK(p.delta1() == Approx(2.0));
  CHECK(p.delta2() == Approx(-3.0));
  CHECK(p.admissible);
  CHECK(p.folded());
  CHECK_THROWS_AS(SystemParams::make(0.0, 1.0, 1.0), Error);
  CHECK_THROWS_AS(SystemParams::make(1.0, 1.0, 1.0), Error);
  CHECK_THROWS_AS(SystemParams::make(0.3, NAN, 1.0), Error);
  CHECK_FALSE(SystemParams::make(0.7, 1.0, 1.0).folded());
}

TEST_CASE("property: admissibility is symmetric") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 10000; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    CHECK(is_admissible(a, b) == is_admissible(b, a));
  }
}

TEST_CASE("property: reduce is swap consistent") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> um(0.1, 5.0);
  std::uniform_real_distribution<double> uq(-3.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const PhysicalSystem s{um(rng), um(rng), 0.0, uq(rng), uq(rng), uq(rng), um(rng), um(rng)};
    PhysicalSystem t = s;
    std::swap(t.m1, t.m2);
    std::swap(t.q1, t.q2);
    const SystemParams a = reduce(s);
    const SystemParams b = reduce(t);
    REQUIRE(a.mu <= 0.5);
    CHECK(a.mu == b.mu);
    CHECK(a.beta1 == b.beta1);
    CHECK(a.beta2 == b.beta2);
    CHECK(a.admissible == b.admissible);
    CHECK(a.swapped != b.swapped);
  }
  // Equal masses never fold, so the betas exchange.
  const SystemParams a = reduce({1.0, 1.0, 0.0, 0.3, -0.7, 1.0, 1.0, 1.0});
  const SystemParams b = reduce({1.0, 1.0, 0.0, -0.7, 0.3, 1.0, 1.0, 1.0});
  CHECK(a.beta1 == b.beta2);
  CHECK(a.beta2 == b.beta1);
  CHECK(a.mu == 0.5);
}

TEST_CASE("property: admissible iff the primary coupling is positive") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> um(0.1, 5.0);
  std::uniform_real_distribution<double> uq(-4.0, 4.0);
  int positive = 0;
  for (int i = 0; i < 10000; ++i) {
    const PhysicalSystem s{um(rng), um(rng), um(rng), uq(rng), uq(rng), uq(rng), um(rng), um(rng)};
    const double c = primary_coupling(s);
    if (std::abs(c) < 1e-9) continue;
    positive += c > 0.0;
    CHECK(reduce(s).admissible == (c > 0.0));
  }
  CHECK(positive > 100);
  CHECK(positive < 9900);
}
