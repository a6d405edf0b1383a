#pragma once

#include "semibound/gibbs.hpp"
#include "semibound/simplex.hpp"

namespace semibound {

// Delta(m, eps) = h(eps) - h((m+1) eps)/(m+1) >= 0, the distance between the
// small-eps bound and the achieved gap of the witness pairs below. Requires
// (m+1) eps <= 1; Delta(0, .) = 0.
double delta_gap(long m, double eps);

struct ExtremalPair {
  ProbDist p;
  ProbDist q;
  long m = 0;
  double eps = 0.0;
  double achieved_gap = 0.0;   // H(p) - H(q), computed from the entries
  double predicted_gap = 0.0;  // closed-form value of the same difference
  double delta = 0.0;          // Delta(m, eps)
  // Set when eps = 1/(m+1) makes the (1 - (m+1) eps)/(m+1) entry vanish and
  // the support drops by one.
  bool support_reduced = false;
};

// Witness pair for the rank bound: p has support d with head
// (1/(m+1), ..., (1-(m+1)eps)/(m+1)) and a uniform eps-tail, q is uniform on
// m+1 points. TV(p, q) = eps, q is m-partially majorized by p, and
//   H(p) - H(q) = eps ln(d-m-1) + h((m+1) eps)/(m+1)
//               = rank_bound(d, m, eps) - Delta(m, eps)
// whenever eps <= 1 - 1/(d-m). Requires m + 1 < d and eps in (0, 1/(m+1)].
ExtremalPair extremal_pair_rank(long d, long m, double eps);

// Witness pair for the energy bound: the eps-tail carries the Gibbs weights
// of h_tail at mean E_m/eps, so sum_i h_i p_{m+1+i} = E_m and
//   H(p) - H(q) = eps F_{h_tail}(E_m/eps) + h((m+1) eps)/(m+1).
// Requires E_m/eps >= h_1 and eps in (0, 1/(m+1)].
ExtremalPair extremal_pair_energy(const EnergySequence& h_tail, double E_m,
                                  long m, double eps);

// Materialized Gibbs weights e^{-beta(E) h_i}/Z, truncated so the discarded
// mass stays below 1e-14 and the discarded mean energy below 1e-13 max(1,E).
// Entropy matches F_h(E) within 1e-8 and the mean matches E within 1e-9.
ProbDist gibbs_distribution(const EnergySequence& h, double E);

}  // namespace semibound
