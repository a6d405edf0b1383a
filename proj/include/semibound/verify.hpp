#pragma once

#include <cstdint>
#include <vector>

#include "semibound/gibbs.hpp"

namespace semibound {

// Brute-force max entropy over an explicit finite level list: exhaustive
// scan of the simplex grid {k/K} under sum h_i p_i <= E, followed by one
// local mass-transfer refinement pass. Deliberately shares no code with the
// Gibbs solver. Supports 2..4 levels and K <= 400; accuracy O(1/K) before
// refinement, far better after.
double brute_force_F(const std::vector<double>& levels, double E, int grid_K);

struct FuzzConfig {
  long trials = 10000;
  std::uint64_t seed = 42;
  long m_max = 5;
  long d_max = 12;
  std::vector<EnergySequence> sequences;  // defaulted if empty
};

struct FuzzReport {
  long trials = 0;
  long violations = 0;
  // Bound fuzzers: min over trials of (bound - gap). Identity suites: the
  // smallest remaining slack (tolerance - deviation). Nonnegative on a pass.
  double worst_margin = 0.0;
  std::uint64_t seed = 0;
  long rejected = 0;  // resampled candidates (acceptance-rate diagnostic)
};

// Samples admissible (p, q, m, eps) tuples - q m-partially majorized by p,
// eps = TV(p, q) or an inflation of it - and asserts H(p) - H(q) against
// every applicable bound (rank, energy, and both state-dependent variants)
// at slack 1e-10. Fully deterministic for a given seed.
FuzzReport fuzz_bound_validity(const FuzzConfig& config);

// Fuzzes the reduction lemma: on every admissible (p, q, m) the output of
// vsl_reduce must satisfy the componentwise floor on the first m+1 entries,
// TV non-expansion and entropy non-increase, all at slack 1e-12.
FuzzReport fuzz_lemma_reduction(const FuzzConfig& config);

// Deterministic identity checks: the composition identities for F_{h_0},
// the reconstruction through a_{h_0}, the number-level closed form, the
// monotone chain under prefix drops, the sublinear growth of F, and the
// eps g(E/eps - 1) = E h(eps/E) identity.
FuzzReport identity_suite();

}  // namespace semibound
