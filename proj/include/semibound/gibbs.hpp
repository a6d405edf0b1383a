#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace semibound {

// Nondecreasing nonnegative energy levels: an explicit prefix h_1..h_n
// followed by an arithmetic tail h_{n+k} = h_n + step*k. Since step > 0 the
// sequence diverges, so sum exp(-beta h_i) converges for every beta > 0 and
// the max-entropy machinery below is always well posed.
class EnergySequence {
 public:
  EnergySequence(std::vector<double> prefix, double step,
                 std::string label = {});

  // The number levels {0, 1, 2, ...}.
  static EnergySequence oscillator();

  double level(std::size_t i) const;  // 0-based
  double ground() const { return prefix_.front(); }
  std::size_t ground_multiplicity() const;
  const std::vector<double>& prefix() const { return prefix_; }
  double step() const { return step_; }

  // True when the prefix already follows the tail rule, i.e. the whole
  // sequence is ground + step*i. Shifting then gives the closed form
  // F(E) = g((E - ground)/step).
  bool is_arithmetic() const;

  // Sequence with the first k levels removed.
  EnergySequence drop_prefix(std::size_t k) const;
  // Sequence with a fresh zero level in front.
  EnergySequence prepend_zero() const;

  const std::string& label() const { return label_; }

 private:
  std::vector<double> prefix_;
  double step_ = 1.0;
  std::string label_;
};

struct PartitionSums {
  double Z;            // sum_i exp(-beta h_i)
  double mean;         // sum_i h_i exp(-beta h_i) / Z
  double trunc_error;  // rounding bound on Z; the tail is summed exactly
  double log_Z;
  double log_Z_shifted;  // ln sum_i exp(-beta (h_i - h_1)), overflow-safe
};

// Partition sum and mean energy at inverse temperature beta > 0. The prefix
// is summed term by term in extended precision and the arithmetic tail in
// closed (geometric) form, so trunc_error reflects rounding only and stays
// below 1e-14 * Z.
PartitionSums partition_sum(const EnergySequence& h, double beta);

struct GibbsPoint {
  double E;
  double beta;  // +infinity at the ground boundary E = h_1
  // Partition sum; at the boundary this is the beta->inf limit of the
  // ground-shifted sum, i.e. the ground multiplicity.
  double Z;
  double F;  // max entropy in nats
  double trunc_error;
  bool at_ground;
};

// Solves sum h_i e^{-beta h_i} = E sum e^{-beta h_i} for beta. The mean is
// strictly decreasing in beta, so a doubling/halving bracket from beta = 1
// followed by bisection (relative mean tolerance 1e-12, at most 200 steps)
// always converges. E = h_1 returns the boundary point with F equal to the
// log of the ground multiplicity; E < h_1 is a domain error.
GibbsPoint solve_beta(const EnergySequence& h, double E);

// F_h(E): the maximum Shannon entropy over distributions p with
// sum h_i p_i <= E. Equals beta(E) E + ln Z; nondecreasing, concave, o(E).
double max_entropy_F(const EnergySequence& h, double E);

// g(x) = (x+1) ln(x+1) - x ln x, the max-entropy function of the number
// levels; g(0) = 0, strictly increasing and concave.
double g_function(double x);

// a_{h_0}(E) = 1 - 1/Z_{h_0}(E) where h_0 = {0} ++ h. This is the crossover
// point between the two branches of the energy-type bound and the unique
// maximizer of x F_h(E/x) + h(x) on [0, min{1, E/h_1}].
double a_zero(const EnergySequence& h, double E);

}  // namespace semibound
