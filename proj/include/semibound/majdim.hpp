#pragma once

#include "semibound/gibbs.hpp"

namespace semibound {

struct MajDimResult {
  long m_bound = 0;
  double eps = 0.0;
  double E = 0.0;
  double lhs_at_m = 0.0;  // maximized expression at the returned m
  double rhs = 0.0;       // eps * F_h(E)
};

struct MajDimOptions {
  // The search normally starts at m = 1; this admits m = 0 as well.
  bool include_m0 = false;
  // Use F_h in place of F_{h_m} inside the maximization. Cheaper when the
  // dropped-tail functions are unavailable, at the cost of a larger bound.
  bool fallback_full_F = false;
  long m_cap = 100000;
};

// The maximized left-hand side of the dimension criterion at a given m:
//   max over x in [0, min{1, E/h_{m+2}}] of x F_{h_m}(E/x) + h(x),
// where h_m drops the first m+1 levels. Exposed for cross-checks and the
// sweep outputs.
double majdim_lhs(const EnergySequence& h, double E, long m,
                  bool fallback_full_F = false);

// Smallest m (>= 1 unless include_m0) with majdim_lhs(h, E, m) <= eps F_h(E).
// The left side is nonincreasing in m, so a linear upward search terminates;
// past m_cap a diagnostic error is thrown.
MajDimResult sufficient_majorization_dim(const EnergySequence& h, double E,
                                         double eps,
                                         const MajDimOptions& opts = {});

}  // namespace semibound
