#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semibound/gibbs.hpp"
#include "semibound/simplex.hpp"

namespace semibound {

enum class BoundBranch { small_eps, plateau, degenerate_zero };

const char* to_string(BoundBranch b);

struct BoundInputs {
  double eps = 0.0;
  std::optional<long> m;
  std::optional<long> d;
  std::optional<double> energy;
  bool energy_is_Em = true;
  std::optional<double> eps_effective;  // eps_m for the state-dependent forms
  std::string sequence_id;
};

struct BoundResult {
  double value = 0.0;  // nats
  BoundBranch branch = BoundBranch::degenerate_zero;
  std::optional<double> x_star;  // maximizer of the underlying x-form
  BoundInputs inputs;
};

// Upper bound on H(p) - H(q) when |p| = d, q is m-partially majorized by p
// and TV(p, q) <= eps:
//   eps ln(d-m-1) + h(eps)   for eps <= 1 - 1/(d-m),
//   ln(d-m)                  above.
// For m >= d-1 partial majorization is full majorization and the bound is 0.
BoundResult rank_bound(long d, long m, double eps);

// Energy-type bound. h_tail is the level sequence already shifted past the
// first m+1 entries of p (see quantum_energy_params) and E_m the matching
// tail energy sum_i h_i p_{m+1+i}. Value:
//   max over x in (0, min{eps, E_m/h_1}] of x F_{h_tail}(E_m/x) + h(x),
// which equals the two-branch closed form with crossover a_{h0}(E_m):
// for eps below the crossover the maximum sits at x = eps and is evaluated
// directly; above it the interior maximum is located by golden section.
BoundResult energy_bound(const EnergySequence& h_tail, double E_m, double eps);

// Pure max-over-x evaluation of the same quantity (golden section over the
// whole feasible interval). Second route for the branch-consistency check.
double energy_bound_max_form(const EnergySequence& h_tail, double E_m,
                             double eps);

struct QuantumEnergyParams {
  double E;    // sum_i h_i lambda_i
  double E_m;  // sum_{i>m+1} h_i lambda_i = E - sum_{i<=m+1} h_i lambda_i
  EnergySequence h_tail;  // h_full with the first m+1 levels dropped
};

// Reduces a sorted spectrum plus full level sequence to the tail data the
// energy bound consumes.
QuantumEnergyParams quantum_energy_params(const ProbDist& spectrum,
                                          const EnergySequence& h_full,
                                          long m);

// Piecewise-linear function through the given nodes (x ascending, starting
// at (0, 0)), constant after the last node.
struct PiecewiseLinear {
  std::vector<double> x;
  std::vector<double> y;
  double operator()(double t) const;
};

struct StateDependentParams {
  double eps_m = 0.0;     // min{eps, sum_{i>m+1} min{p_i, eps}}
  PiecewiseLinear E_m_of_x;  // x -> sum_j h_j min{p_{m+1+j}, x}
  double eps_star = 0.0;  // max{x in (0,1] : E_m_of_x(x)/x >= h_1}, 0 if none
};

// Spectrum-dependent parameters of the improved bounds. E_m_of_x is exact
// (breakpoints at the distinct tail values of p) and eps_star is found by a
// breakpoint scan, not by root iteration. h_tail may be omitted when only
// eps_m is needed.
StateDependentParams state_dependent_params(
    const ProbDist& p, const std::optional<EnergySequence>& h_tail, long m,
    double eps);

// Rank bound evaluated at eps_m instead of eps; never above rank_bound.
// Requires m + 1 < support_size(p), otherwise the plain Schur inequality
// already applies and the call is rejected.
BoundResult rank_bound_sd(const ProbDist& p, long m, double eps);

// State-dependent energy bound:
//   max over x in (0, min{eps_m, eps_star}] of x F_{h_tail}(E_m^x/x) + h(x).
// The objective is concave (a perspective of the concave F composed with the
// concave E_m^x), so golden section applies.
BoundResult energy_bound_sd(const ProbDist& p, const EnergySequence& h_tail,
                            long m, double eps);

// Dense-grid evaluation of the state-dependent objective (log-spaced grid
// plus local ternary refinement). Diagnostic cross-check for the golden
// route above.
double energy_bound_sd_grid(const ProbDist& p, const EnergySequence& h_tail,
                            long m, double eps, int grid_points = 4096);

// Number-level specialization, in closed form through g:
//   max over x in (0, min{eps, arg/(m+1)}] of x g(arg/x - m - 1) + h(x).
// arg_is_Em records whether the energy argument is the tail energy E_m or
// the full mean E (using E is valid and never smaller).
BoundResult oscillator_bound(double energy_arg, long m, double eps,
                             bool arg_is_Em = true);

// State-dependent number-level bound: for m = 0 the objective is written as
// E_0^x h(x/E_0^x) + h(x) (equal to x g(E_0^x/x - 1) + h(x)), for m >= 1 as
// x g(E_m^x/x - m - 1) + h(x), maximized over (0, min{eps_m, eps_star}].
BoundResult oscillator_bound_sd(const ProbDist& p, long m, double eps);

}  // namespace semibound
