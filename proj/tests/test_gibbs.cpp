#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "semibound/gibbs.hpp"
#include "semibound/opt.hpp"
#include "semibound/simplex.hpp"

using namespace semibound;

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

TEST_CASE("energy sequence validation and accessors") {
  CHECK_THROWS_AS(EnergySequence({1.0, 0.5}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(EnergySequence({0.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(EnergySequence({-1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(EnergySequence({}, 1.0), std::invalid_argument);

  const EnergySequence osc = EnergySequence::oscillator();
  CHECK(osc.level(0) == 0.0);
  CHECK(osc.level(7) == 7.0);
  CHECK(osc.ground_multiplicity() == 1);
  CHECK(osc.is_arithmetic());

  const EnergySequence h({0.0, 0.0, 1.0}, 1.0);
  CHECK(h.ground_multiplicity() == 2);
  CHECK_FALSE(h.is_arithmetic());
  CHECK(h.level(3) == 2.0);
}

TEST_CASE("drop_prefix and prepend_zero") {
  const EnergySequence osc = EnergySequence::oscillator();
  const EnergySequence d2 = osc.drop_prefix(2);
  CHECK(d2.prefix() == std::vector<double>{2.0});
  CHECK(d2.step() == 1.0);
  CHECK(osc.drop_prefix(0).level(3) == osc.level(3));

  const EnergySequence h({0.0, 0.0, 1.0}, 1.0);
  CHECK(h.drop_prefix(1).prefix() == std::vector<double>{0.0, 1.0});

  const EnergySequence hz = h.prepend_zero();
  CHECK(hz.prefix() == std::vector<double>{0.0, 0.0, 0.0, 1.0});
  const EnergySequence back = hz.drop_prefix(1);
  for (std::size_t i = 0; i < 6; ++i) CHECK(back.level(i) == h.level(i));
}

TEST_CASE("partition sums for the number levels") {
  const EnergySequence osc = EnergySequence::oscillator();
  const PartitionSums ps = partition_sum(osc, kLn2);
  CHECK(ps.Z == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(ps.mean == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ps.trunc_error <= 1e-14 * ps.Z);
  CHECK_THROWS_AS(partition_sum(osc, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(partition_sum(osc, -1.0), std::invalid_argument);
}

TEST_CASE("dominant ground term at large beta") {
  const EnergySequence h({0.5, 0.5, 1.0}, 1.0);
  const PartitionSums ps = partition_sum(h, 60.0);
  CHECK(ps.Z == doctest::Approx(2.0 * std::exp(-60.0 * 0.5)).epsilon(1e-12));
  CHECK(ps.mean == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("mean is strictly decreasing in beta") {
  for (const auto& h :
       {EnergySequence::oscillator(), EnergySequence({0.0, 0.4, 1.2}, 0.7),
        EnergySequence({0.5, 0.5, 2.0}, 1.3)}) {
    double prev = partition_sum(h, 1.0 / 64.0).mean;
    for (double beta = 1.0 / 32.0; beta <= 8.0; beta *= 2.0) {
      const double cur = partition_sum(h, beta).mean;
      CHECK(cur < prev);
      prev = cur;
    }
    // Past that the mean saturates at the ground level to double precision.
    for (double beta = 16.0; beta <= 64.0; beta *= 2.0) {
      const double cur = partition_sum(h, beta).mean;
      CHECK(cur <= prev);
      CHECK(cur >= h.ground());
      prev = cur;
    }
  }
}

TEST_CASE("Gibbs parameter for the number levels") {
  const EnergySequence osc = EnergySequence::oscillator();
  SUBCASE("closed-form beta and Z") {
    for (double E : {0.1, 0.5, 1.0, 5.0, 10.0}) {
      const GibbsPoint pt = solve_beta(osc, E);
      CHECK(pt.beta == doctest::Approx(std::log((E + 1.0) / E)).epsilon(1e-10));
      CHECK(pt.Z == doctest::Approx(E + 1.0).epsilon(1e-9));
      CHECK(pt.F == doctest::Approx(pt.beta * pt.E + std::log(pt.Z))
                        .epsilon(1e-12));
    }
  }
  SUBCASE("ground boundary") {
    const GibbsPoint pt = solve_beta(osc, 0.0);
    CHECK(pt.at_ground);
    CHECK(std::isinf(pt.beta));
    CHECK(pt.F == 0.0);
  }
  SUBCASE("degenerate ground boundary") {
    const GibbsPoint pt = solve_beta(EnergySequence({0.0, 0.0, 1.0}, 1.0), 0.0);
    CHECK(pt.F == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  }
  SUBCASE("below ground rejected") {
    CHECK_THROWS_AS(solve_beta(osc, -0.1), std::domain_error);
    CHECK_THROWS_AS(solve_beta(EnergySequence({2.0}, 1.0), 1.0),
                    std::domain_error);
  }
}

TEST_CASE("max entropy agrees with g on the number levels") {
  const EnergySequence osc = EnergySequence::oscillator();
  CHECK(max_entropy_F(osc, 1.0) == doctest::Approx(2.0 * kLn2).epsilon(1e-10));
  CHECK(max_entropy_F(osc, 0.0) == 0.0);
  CHECK(max_entropy_F(osc, 5.0) ==
        doctest::Approx(6.0 * std::log(6.0) - 5.0 * std::log(5.0))
            .epsilon(1e-10));
  for (double E = 0.25; E <= 100.0; E *= 2.0)
    CHECK(std::abs(max_entropy_F(osc, E) - g_function(E)) <= 1e-9);
}

TEST_CASE("F is nondecreasing and concave in E") {
  for (const auto& h :
       {EnergySequence::oscillator(), EnergySequence({0.0, 0.4, 1.2}, 0.7)}) {
    const double base = h.ground();
    double prev = max_entropy_F(h, base + 0.05);
    std::vector<double> values;
    for (int i = 1; i <= 40; ++i) {
      const double cur = max_entropy_F(h, base + 0.05 + 0.25 * i);
      CHECK(cur >= prev - 1e-12);
      values.push_back(cur);
      prev = cur;
    }
    for (std::size_t i = 1; i + 1 < values.size(); ++i)
      CHECK(values[i] >= 0.5 * (values[i - 1] + values[i + 1]) - 1e-9);
  }
}

TEST_CASE("pointwise larger levels shrink the feasible set") {
  const EnergySequence lo = EnergySequence::oscillator();
  const EnergySequence hi({0.5}, 1.0);  // 0.5, 1.5, 2.5, ... >= 0, 1, 2, ...
  for (double E : {0.6, 1.0, 3.0, 9.0})
    CHECK(max_entropy_F(hi, E) <= max_entropy_F(lo, E) + 1e-12);
}

TEST_CASE("g function basics") {
  CHECK(g_function(0.0) == 0.0);
  CHECK(g_function(1.0) == doctest::Approx(2.0 * kLn2).epsilon(1e-15));
  // Direct evaluation of the defining expression.
  const double direct =
      (1e4 + 1.0) * std::log(1e4 + 1.0) - 1e4 * std::log(1e4);
  CHECK(g_function(1e4) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(g_function(1e4) / 1e4 < 1.1e-3);
  CHECK_THROWS_AS(g_function(-0.5), std::invalid_argument);
  double prev = 0.0;
  for (double x = 0.125; x <= 64.0; x *= 2.0) {
    CHECK(g_function(x) > prev);
    prev = g_function(x);
  }
  for (double x = 0.25; x <= 32.0; x *= 2.0)  // midpoint concavity
    CHECK(g_function(x) >=
          0.5 * (g_function(x - 0.125) + g_function(x + 0.125)));
}

TEST_CASE("solver error bound stays tiny at solved points") {
  for (const auto& h :
       {EnergySequence::oscillator(), EnergySequence({0.5, 1.7}, 0.9)})
    for (double off : {0.01, 1.0, 20.0}) {
      const GibbsPoint pt = solve_beta(h, h.ground() + off);
      CHECK(pt.trunc_error >= 0.0);
      CHECK(pt.trunc_error < 1e-10);
    }
}

TEST_CASE("crossover point a_zero") {
  const EnergySequence tail = EnergySequence::oscillator().drop_prefix(1);
  CHECK(a_zero(tail, 1.0) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(a_zero(tail, 3.0) == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(a_zero(EnergySequence({0.7}, 1.0), 0.0) == 0.0);
  CHECK_THROWS_AS(a_zero(tail, -1.0), std::invalid_argument);
}

TEST_CASE("composition identity for the zero-prepended sequence") {
  for (const auto& h : {EnergySequence::oscillator().drop_prefix(1),
                        EnergySequence({0.5, 1.7}, 0.9)}) {
    for (double E : {0.4, 1.0, 4.0}) {
      const double lhs = max_entropy_F(h.prepend_zero(), E);
      const double h1 = h.ground();
      const double cap = std::min(1.0, E / h1);
      const auto phi = [&](double x) {
        return x * max_entropy_F(h, std::max(E / x, h1)) + binary_entropy(x);
      };
      const LineMax lm = golden_max_logx(phi, 1e-12, cap);
      CHECK(lhs == doctest::Approx(lm.value).epsilon(1e-8));
      const double a = a_zero(h, E);
      CHECK(lm.x == doctest::Approx(a).epsilon(1e-6));
      CHECK(lhs == doctest::Approx(phi(a)).epsilon(1e-10));
    }
  }
}
