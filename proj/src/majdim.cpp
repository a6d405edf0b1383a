#include "semibound/majdim.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "semibound/opt.hpp"
#include "semibound/simplex.hpp"

namespace semibound {

namespace {

// F_h(E) with the closed form g((E - ground)/step) whenever the whole
// sequence is arithmetic (shifting and scaling the levels maps the problem
// onto the number levels); the Gibbs solver otherwise.
double fast_F(const EnergySequence& h, double E) {
  if (h.is_arithmetic())
    return g_function(std::max(E - h.ground(), 0.0) / h.step());
  return max_entropy_F(h, E);
}

}  // namespace

double majdim_lhs(const EnergySequence& h, double E, long m,
                  bool fallback_full_F) {
  if (m < 0) throw std::invalid_argument("majdim_lhs: m must be >= 0");
  const EnergySequence h_m = h.drop_prefix(static_cast<std::size_t>(m) + 1);
  const double hm2 = h_m.ground();
  const double cap = hm2 > 0.0 ? std::min(1.0, E / hm2) : 1.0;
  if (!(cap > 0.0)) return 0.0;
  const EnergySequence& seq = fallback_full_F ? h : h_m;
  const double seq_ground = seq.ground();
  const auto phi = [&](double x) {
    const double arg = std::max(E / x, seq_ground);
    return x * fast_F(seq, arg) + binary_entropy(x);
  };
  return golden_max_logx(phi, std::min(1e-12, cap), cap).value;
}

MajDimResult sufficient_majorization_dim(const EnergySequence& h, double E,
                                         double eps,
                                         const MajDimOptions& opts) {
  if (!(E > h.ground()))
    throw std::domain_error(
        "sufficient_majorization_dim: E must exceed the ground level");
  if (!(eps > 0.0) || eps > 1.0 + 1e-12)
    throw std::invalid_argument(
        "sufficient_majorization_dim: eps must lie in (0, 1]");
  eps = std::min(eps, 1.0);

  const double rhs = eps * fast_F(h, E);
  // The lhs is nonincreasing in m (dropping levels only shrinks the
  // constraint set), so the first admissible m is the answer.
  for (long m = opts.include_m0 ? 0 : 1; m <= opts.m_cap; ++m) {
    const double lhs = majdim_lhs(h, E, m, opts.fallback_full_F);
    if (lhs <= rhs) return {m, eps, E, lhs, rhs};
  }
  throw std::runtime_error(
      "sufficient_majorization_dim: no m <= " + std::to_string(opts.m_cap) +
      " satisfies the criterion (eps=" + std::to_string(eps) + ")");
}

}  // namespace semibound
