#include <stdexcept>

#include "doctest.h"
#include "semibound/gibbs.hpp"
#include "semibound/majdim.hpp"

using namespace semibound;

TEST_CASE("dimension of the number levels at full relative error") {
  const MajDimResult r =
      sufficient_majorization_dim(EnergySequence::oscillator(), 1.0, 1.0);
  CHECK(r.m_bound == 1);
  CHECK(r.lhs_at_m <= r.rhs);
}

TEST_CASE("returned m is exact for the criterion") {
  const EnergySequence osc = EnergySequence::oscillator();
  for (double E : {0.1, 1.0, 10.0})
    for (double eps : {1.0, 0.25, 1.0 / 32.0}) {
      const MajDimResult r = sufficient_majorization_dim(osc, E, eps);
      CHECK(majdim_lhs(osc, E, r.m_bound) <= r.rhs);
      if (r.m_bound > 1) CHECK(majdim_lhs(osc, E, r.m_bound - 1) > r.rhs);
    }
}

TEST_CASE("nonincreasing in eps") {
  const EnergySequence osc = EnergySequence::oscillator();
  for (double E : {0.1, 1.0, 10.0}) {
    long prev = 0;
    for (int k = 0; k <= 8; ++k) {
      const double eps = 1.0 / static_cast<double>(1 << k);
      const long m = sufficient_majorization_dim(osc, E, eps).m_bound;
      CHECK(m >= prev);
      prev = m;
    }
  }
}

TEST_CASE("full-F fallback can only grow the answer") {
  const EnergySequence osc = EnergySequence::oscillator();
  MajDimOptions fallback;
  fallback.fallback_full_F = true;
  for (double E : {0.5, 1.0, 5.0})
    for (double eps : {1.0, 0.5, 0.125}) {
      const long standard = sufficient_majorization_dim(osc, E, eps).m_bound;
      const long loose =
          sufficient_majorization_dim(osc, E, eps, fallback).m_bound;
      CHECK(loose >= standard);
      CHECK(majdim_lhs(osc, E, 2, true) >= majdim_lhs(osc, E, 2, false));
    }
}

TEST_CASE("criterion lhs equals the zero-prepended max entropy") {
  for (const auto& h : {EnergySequence::oscillator(),
                        EnergySequence({0.0, 0.4, 1.2}, 0.7)}) {
    for (long m : {1L, 2L, 4L})
      for (double E : {1.0, 3.0}) {
        const double lhs = majdim_lhs(h, E, m);
        const EnergySequence dropped =
            h.drop_prefix(static_cast<std::size_t>(m) + 1);
        const double direct = max_entropy_F(dropped.prepend_zero(), E);
        CHECK(lhs == doctest::Approx(direct).epsilon(1e-6));
      }
  }
}

TEST_CASE("the search can include m = 0") {
  MajDimOptions opts;
  opts.include_m0 = true;
  const MajDimResult r = sufficient_majorization_dim(
      EnergySequence::oscillator(), 0.05, 1.0, opts);
  CHECK(r.m_bound >= 0);
}

TEST_CASE("domain validation") {
  const EnergySequence osc = EnergySequence::oscillator();
  CHECK_THROWS_AS(sufficient_majorization_dim(osc, 0.0, 0.5),
                  std::domain_error);
  CHECK_THROWS_AS(sufficient_majorization_dim(EnergySequence({2.0}, 1.0), 1.0,
                                              0.5),
                  std::domain_error);
  CHECK_THROWS_AS(sufficient_majorization_dim(osc, 1.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(sufficient_majorization_dim(osc, 1.0, 1.5),
                  std::invalid_argument);
}

TEST_CASE("non-arithmetic sequences go through the solver") {
  const EnergySequence h({0.0, 0.7, 0.9}, 1.4, "bent");
  const MajDimResult r = sufficient_majorization_dim(h, 2.0, 0.5);
  CHECK(r.m_bound >= 1);
  CHECK(r.lhs_at_m <= r.rhs);
  if (r.m_bound > 1) CHECK(majdim_lhs(h, 2.0, r.m_bound - 1) > r.rhs);
}
