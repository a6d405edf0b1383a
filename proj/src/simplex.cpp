#include "semibound/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace semibound {

namespace {

double at_or_zero(const std::vector<double>& v, std::size_t i) {
  return i < v.size() ? v[i] : 0.0;
}

}  // namespace

double eta(double x) {
  if (x == 0.0) return 0.0;
  return -x * std::log(x);
}

double binary_entropy(double x) {
  // Tolerate rounding just outside the unit interval.
  if (x < 0.0 && x >= -1e-12) x = 0.0;
  if (x > 1.0 && x <= 1.0 + 1e-12) x = 1.0;
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("binary_entropy: argument outside [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  // -(1-x) ln(1-x) via log1p keeps full precision for small x.
  return -x * std::log(x) - (1.0 - x) * std::log1p(-x);
}

ProbDist::ProbDist(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty())
    throw std::invalid_argument("ProbDist: empty weight vector");
  long double sum = 0.0L;
  for (double& w : weights_) {
    if (!(w >= 0.0))
      throw std::invalid_argument("ProbDist: negative or NaN entry");
    if (w < 1e-300) w = 0.0;
    sum += w;
  }
  const double off = static_cast<double>(sum - 1.0L);
  if (std::abs(off) > 1e-12)
    throw std::invalid_argument("ProbDist: weights sum to 1" +
                                std::string(off > 0 ? "+" : "-") +
                                std::to_string(std::abs(off)));
  sorted_ = weights_;
  std::stable_sort(sorted_.begin(), sorted_.end(), std::greater<double>());
  support_size_ = static_cast<std::size_t>(
      std::count_if(weights_.begin(), weights_.end(),
                    [](double w) { return w > 0.0; }));
}

double shannon_entropy(const ProbDist& p) {
  long double acc = 0.0L;
  for (double w : p.weights()) acc += eta(w);
  return static_cast<double>(acc);
}

double tv_distance(const ProbDist& p, const ProbDist& q) {
  const auto& a = p.weights();
  const auto& b = q.weights();
  const std::size_t n = std::max(a.size(), b.size());
  long double acc = 0.0L;
  for (std::size_t i = 0; i < n; ++i)
    acc += std::abs(at_or_zero(a, i) - at_or_zero(b, i));
  return static_cast<double>(0.5L * acc);
}

ProbDist sort_desc(const ProbDist& p) { return ProbDist(p.sorted()); }

MajorizationReport partial_majorizes(const ProbDist& p, const ProbDist& q,
                                     std::size_t m) {
  MajorizationReport report;
  report.m_requested = m;
  const auto& ps = p.sorted();
  const auto& qs = q.sorted();
  long double sp = 0.0L, sq = 0.0L;
  for (std::size_t r = 1; r <= m; ++r) {
    sp += at_or_zero(ps, r - 1);
    sq += at_or_zero(qs, r - 1);
    const double gap = static_cast<double>(sp - sq);
    report.prefix_gaps.push_back(gap);
    if (gap < -1e-14 && report.holds) {
      report.holds = false;
      report.first_violation = r;
    }
  }
  return report;
}

ProbDist vsl_reduce(const ProbDist& p_in, const ProbDist& q_in,
                    std::size_t m) {
  const auto& p = p_in.sorted();
  const auto& q = q_in.sorted();

  if (m == 0) {
    const double p1 = at_or_zero(p, 0);
    const double q1 = at_or_zero(q, 0);
    std::vector<double> out(q.begin(), q.end());
    if (q1 >= p1) return ProbDist(std::move(out));
    // Lift the head to p_1; q_1 < p_1 <= 1 keeps the scale well defined.
    const double c = (1.0 - p1) / (1.0 - q1);
    out[0] = p1;
    for (std::size_t i = 1; i < out.size(); ++i) out[i] *= c;
    return ProbDist(std::move(out));
  }

  // Hypothesis: the first m prefix sums of q stay below p's.
  long double sp = 0.0L, sq = 0.0L;
  for (std::size_t r = 0; r < m; ++r) {
    sp += at_or_zero(p, r);
    sq += at_or_zero(q, r);
    if (static_cast<double>(sq - sp) > 1e-14)
      throw std::invalid_argument(
          "vsl_reduce: prefix-domination hypothesis fails at r=" +
          std::to_string(r + 1));
  }

  const std::size_t n = std::max({p.size(), q.size(), m + 1});
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) out[i] = at_or_zero(q, i);

  long double dm = 0.0L;
  for (std::size_t i = 0; i < m; ++i) {
    out[i] = at_or_zero(p, i);
    dm += static_cast<long double>(at_or_zero(p, i)) - at_or_zero(q, i);
  }
  if (dm < 0.0L) dm = 0.0L;  // hypothesis guarantees this up to rounding

  const double qm1 = at_or_zero(q, m);
  const double pm1 = at_or_zero(p, m);
  if (static_cast<double>(dm) >= qm1 - pm1) {
    out[m] = pm1;
    const long double dmp1 = dm + static_cast<long double>(pm1) - qm1;
    long double tail = 0.0L;
    for (std::size_t i = m + 1; i < n; ++i) tail += at_or_zero(q, i);
    if (tail > 0.0L) {
      double c = static_cast<double>(1.0L - dmp1 / tail);
      if (c < 0.0) c = 0.0;
      for (std::size_t i = m + 1; i < n; ++i) out[i] = at_or_zero(q, i) * c;
    } else if (std::abs(static_cast<double>(dmp1)) > 1e-12) {
      throw std::logic_error("vsl_reduce: no tail mass left to rebalance");
    }
  } else {
    out[m] = qm1 - static_cast<double>(dm);
  }
  return ProbDist(std::move(out));  // ctor re-asserts normalization to 1e-12
}

PerturbationGap perturbation_gap(const ProbDist& x, const ProbDist& y) {
  const double eps = tv_distance(x, y);
  if (eps <= 0.0)
    throw std::invalid_argument(
        "perturbation_gap: identical distributions (report 0 <= 0 instead)");
  const auto& a = x.weights();
  const auto& b = y.weights();
  const std::size_t n = std::max(a.size(), b.size());
  std::vector<double> plus(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = at_or_zero(a, i) - at_or_zero(b, i);
    plus[i] = d > 0.0 ? d / eps : 0.0;
  }
  const ProbDist t(std::move(plus));
  PerturbationGap gap;
  gap.lhs = shannon_entropy(x);
  gap.rhs = shannon_entropy(y) + eps * shannon_entropy(t) + binary_entropy(eps);
  return gap;
}

}  // namespace semibound
