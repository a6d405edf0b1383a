#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace semibound {

// eta(x) = -x ln x with eta(0) = 0.
double eta(double x);

// Binary entropy h(x) = eta(x) + eta(1 - x) in nats, defined on [0, 1].
double binary_entropy(double x);

// A finite probability vector. Entries must be nonnegative and sum to 1
// within 1e-12; entries below 1e-300 are clamped to zero so that eta never
// underflows. A non-increasing rearrangement (stable for ties) is kept
// alongside the original order.
class ProbDist {
 public:
  explicit ProbDist(std::vector<double> weights);

  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& sorted() const { return sorted_; }
  std::size_t size() const { return weights_.size(); }
  std::size_t support_size() const { return support_size_; }

 private:
  std::vector<double> weights_;
  std::vector<double> sorted_;
  std::size_t support_size_ = 0;
};

// Shannon entropy in nats; lies in [0, ln(support_size)].
double shannon_entropy(const ProbDist& p);

// Total variation distance (1/2) sum |p_i - q_i|; the shorter vector is
// treated as zero-padded.
double tv_distance(const ProbDist& p, const ProbDist& q);

// Non-increasing rearrangement as a distribution of its own.
ProbDist sort_desc(const ProbDist& p);

struct MajorizationReport {
  std::size_t m_requested = 0;
  bool holds = true;
  // Smallest prefix length r (1-based) whose gap drops below -1e-14.
  std::optional<std::size_t> first_violation;
  // sum_{i<=r} (p_i^down - q_i^down) for r = 1..m.
  std::vector<double> prefix_gaps;
};

// Checks whether p m-partially majorizes q: every prefix sum of the sorted
// view of p dominates q's for r = 1..m. Holds trivially for m = 0.
MajorizationReport partial_majorizes(const ProbDist& p, const ProbDist& q,
                                     std::size_t m);

// Reduction step behind the semicontinuity bounds. Given p and q (their
// sorted views are used) such that sum_{i<=r} q_i <= sum_{i<=r} p_i for
// r = 1..m, builds q* with
//   q*_i >= p_i for i = 1..m+1,  TV(p, q*) <= TV(p, q),  H(q*) <= H(q).
// For m = 0 no hypothesis is needed: q* is q with its head lifted to p_1 and
// the rest rescaled (or q itself when q_1 >= p_1 already).
ProbDist vsl_reduce(const ProbDist& p, const ProbDist& q, std::size_t m);

struct PerturbationGap {
  double lhs;  // H(x)
  double rhs;  // H(y) + eps H((1/eps)[x-y]_+) + h(eps), eps = TV(x, y)
};

// Evaluates both sides of the perturbation inequality lhs <= rhs at
// eps = TV(x, y) > 0. Identical inputs are rejected (the caller should
// report 0 <= 0 itself).
PerturbationGap perturbation_gap(const ProbDist& x, const ProbDist& y);

}  // namespace semibound
