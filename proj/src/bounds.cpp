#include "semibound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "semibound/opt.hpp"

namespace semibound {

namespace {

double clamp_unit(double eps, const char* who) {
  if (eps < 0.0 && eps >= -1e-12) eps = 0.0;
  if (eps > 1.0 && eps <= 1.0 + 1e-12) eps = 1.0;
  if (!(eps >= 0.0 && eps <= 1.0))
    throw std::invalid_argument(std::string(who) + ": eps outside [0, 1]");
  return eps;
}

BoundResult zero_result(BoundBranch branch, BoundInputs inputs) {
  BoundResult r;
  r.value = 0.0;
  r.branch = branch;
  r.inputs = std::move(inputs);
  return r;
}

// Two-branch closed form shared by the E_m = 0, zero-ground case and the
// rank bound: eps ln(k) + h(eps) capped at ln(k+1).
BoundResult flat_levels_bound(long k, double eps, BoundInputs inputs) {
  BoundResult r;
  r.inputs = std::move(inputs);
  const double threshold = 1.0 - 1.0 / static_cast<double>(k + 1);
  if (eps <= threshold) {
    r.value = eps * std::log(static_cast<double>(k)) + binary_entropy(eps);
    r.branch = BoundBranch::small_eps;
    r.x_star = eps;
  } else {
    r.value = std::log(static_cast<double>(k + 1));
    r.branch = BoundBranch::plateau;
    r.x_star = threshold;
  }
  return r;
}

}  // namespace

const char* to_string(BoundBranch b) {
  switch (b) {
    case BoundBranch::small_eps: return "small_eps";
    case BoundBranch::plateau: return "plateau";
    case BoundBranch::degenerate_zero: return "degenerate_zero";
  }
  return "?";
}

BoundResult rank_bound(long d, long m, double eps) {
  if (d < 1) throw std::invalid_argument("rank_bound: d must be >= 1");
  if (m < 0) throw std::invalid_argument("rank_bound: m must be >= 0");
  eps = clamp_unit(eps, "rank_bound");
  BoundInputs inputs;
  inputs.eps = eps;
  inputs.m = m;
  inputs.d = d;
  if (m >= d - 1)  // partial majorization is full majorization here
    return zero_result(BoundBranch::degenerate_zero, std::move(inputs));
  if (eps == 0.0)
    return zero_result(BoundBranch::small_eps, std::move(inputs));
  return flat_levels_bound(d - m - 1, eps, std::move(inputs));
}

BoundResult energy_bound(const EnergySequence& h_tail, double E_m,
                         double eps) {
  if (!(E_m >= 0.0))
    throw std::invalid_argument("energy_bound: E_m must be >= 0");
  eps = clamp_unit(eps, "energy_bound");
  BoundInputs inputs;
  inputs.eps = eps;
  inputs.energy = E_m;
  inputs.energy_is_Em = true;
  inputs.sequence_id = h_tail.label();

  if (eps == 0.0)
    return zero_result(BoundBranch::small_eps, std::move(inputs));

  const double h1 = h_tail.ground();
  if (E_m == 0.0) {
    if (h1 > 0.0)
      return zero_result(BoundBranch::degenerate_zero, std::move(inputs));
    // Zero tail energy with zero levels present: only the flat part of the
    // spectrum is reachable, so the bound collapses to the rank form over
    // the d0 zero levels.
    const long d0 = static_cast<long>(h_tail.ground_multiplicity());
    return flat_levels_bound(d0, eps, std::move(inputs));
  }

  const double cap = h1 > 0.0 ? std::min(1.0, E_m / h1) : 1.0;
  const double crossover = a_zero(h_tail, E_m);

  BoundResult r;
  r.inputs = std::move(inputs);
  if (eps <= crossover) {
    // The objective x F(E_m/x) + h(x) increases up to the crossover, so the
    // maximum over (0, eps] sits exactly at the endpoint.
    const double arg = std::max(E_m / eps, h1);
    r.value = eps * max_entropy_F(h_tail, arg) + binary_entropy(eps);
    r.branch = BoundBranch::small_eps;
    r.x_star = eps;
    return r;
  }
  const auto objective = [&](double x) {
    const double arg = std::max(E_m / x, h1);
    return x * max_entropy_F(h_tail, arg) + binary_entropy(x);
  };
  const LineMax lm =
      golden_max_logx(objective, std::min(1e-12, cap), cap);
  r.value = lm.value;
  r.branch = BoundBranch::plateau;
  r.x_star = lm.x;
  return r;
}

double energy_bound_max_form(const EnergySequence& h_tail, double E_m,
                             double eps) {
  eps = clamp_unit(eps, "energy_bound_max_form");
  if (eps == 0.0 || E_m < 0.0) return 0.0;
  const double h1 = h_tail.ground();
  if (E_m == 0.0 && h1 > 0.0) return 0.0;
  const double cap =
      std::min(eps, h1 > 0.0 ? std::min(1.0, E_m / h1) : 1.0);
  if (!(cap > 0.0)) return 0.0;
  const auto objective = [&](double x) {
    const double arg = std::max(E_m / x, h1);
    return x * max_entropy_F(h_tail, arg) + binary_entropy(x);
  };
  return golden_max_logx(objective, std::min(1e-12, cap), cap).value;
}

QuantumEnergyParams quantum_energy_params(const ProbDist& spectrum,
                                          const EnergySequence& h_full,
                                          long m) {
  if (m < 0)
    throw std::invalid_argument("quantum_energy_params: m must be >= 0");
  const auto& sp = spectrum.sorted();
  long double e = 0.0L, em = 0.0L;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    const long double term =
        static_cast<long double>(h_full.level(i)) * sp[i];
    e += term;
    if (i >= static_cast<std::size_t>(m) + 1) em += term;
  }
  return {static_cast<double>(e), static_cast<double>(em),
          h_full.drop_prefix(static_cast<std::size_t>(m) + 1)};
}

double PiecewiseLinear::operator()(double t) const {
  if (x.empty() || t <= x.front()) return 0.0;  // nodes start at (0, 0)
  if (t >= x.back()) return y.back();
  const auto it = std::upper_bound(x.begin(), x.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - x.begin());
  const double slope = (y[k] - y[k - 1]) / (x[k] - x[k - 1]);
  return y[k - 1] + slope * (t - x[k - 1]);
}

StateDependentParams state_dependent_params(
    const ProbDist& p, const std::optional<EnergySequence>& h_tail, long m,
    double eps) {
  if (m < 0)
    throw std::invalid_argument("state_dependent_params: m must be >= 0");
  eps = clamp_unit(eps, "state_dependent_params");
  const auto& sp = p.sorted();
  const std::size_t first_tail = static_cast<std::size_t>(m) + 1;

  StateDependentParams out;
  long double acc = 0.0L;
  for (std::size_t i = first_tail; i < sp.size(); ++i)
    acc += std::min(sp[i], eps);
  out.eps_m = std::min(eps, static_cast<double>(acc));

  out.E_m_of_x.x = {0.0};
  out.E_m_of_x.y = {0.0};
  if (!h_tail.has_value()) {
    out.eps_star = 1.0;
    return out;
  }

  // Tail entries paired with their levels, zero entries dropped (they never
  // contribute to sum_j h_j min{p_j, x}).
  std::vector<std::pair<double, double>> vw;  // (p value, level)
  for (std::size_t i = first_tail; i < sp.size(); ++i)
    if (sp[i] > 0.0)
      vw.emplace_back(sp[i], h_tail->level(i - first_tail));
  const double h1 = h_tail->ground();
  if (vw.empty()) {
    out.eps_star = h1 == 0.0 ? 1.0 : 0.0;
    return out;
  }
  std::sort(vw.begin(), vw.end());

  // Nodes at the distinct tail values; the slope drops by the level weight
  // of every entry passed.
  long double slope = 0.0L;
  for (const auto& [v, w] : vw) slope += w;
  auto& pl = out.E_m_of_x;
  long double yacc = 0.0L;
  double prev = 0.0;
  std::size_t i = 0;
  while (i < vw.size()) {
    const double v = vw[i].first;
    yacc += slope * (v - prev);
    pl.x.push_back(v);
    pl.y.push_back(static_cast<double>(yacc));
    while (i < vw.size() && vw[i].first == v) {
      slope -= vw[i].second;
      ++i;
    }
    prev = v;
  }

  // eps_star: largest x in (0, 1] with E_m_of_x(x) - h1 x >= 0. The function
  // is concave and zero at the origin, so a single downward crossing exists
  // whenever it goes negative; scan the breakpoints for it.
  if (h1 == 0.0) {
    out.eps_star = 1.0;
    return out;
  }
  const auto phi = [&](double t) { return pl(t) - h1 * t; };
  if (phi(1.0) >= 0.0) {
    out.eps_star = 1.0;
    return out;
  }
  double eps_star = 0.0;
  for (std::size_t k = 0; k + 1 <= pl.x.size(); ++k) {
    const double xa = pl.x[k];
    const double xb = k + 1 < pl.x.size() ? pl.x[k + 1] : 1.0;
    if (xa >= 1.0) break;
    const double pa = phi(xa);
    const double pb = phi(std::min(xb, 1.0));
    if (pa >= 0.0 && pb < 0.0) {
      const double seg_slope =
          k + 1 < pl.x.size()
              ? (pl.y[k + 1] - pl.y[k]) / (pl.x[k + 1] - pl.x[k])
              : 0.0;
      eps_star = xa + pa / (h1 - seg_slope);
      break;
    }
    if (pb >= 0.0) eps_star = std::min(xb, 1.0);
  }
  out.eps_star = std::min(eps_star, 1.0);
  return out;
}

BoundResult rank_bound_sd(const ProbDist& p, long m, double eps) {
  if (m < 0) throw std::invalid_argument("rank_bound_sd: m must be >= 0");
  eps = clamp_unit(eps, "rank_bound_sd");
  const long d = static_cast<long>(p.support_size());
  if (m + 1 >= d)
    throw std::invalid_argument(
        "rank_bound_sd: m+1 >= support size (plain Schur regime)");
  const StateDependentParams params =
      state_dependent_params(p, std::nullopt, m, eps);
  BoundResult r = rank_bound(d, m, params.eps_m);
  r.inputs.eps = eps;
  r.inputs.eps_effective = params.eps_m;
  return r;
}

namespace {

BoundResult maximize_sd_objective(const std::function<double(double)>& phi,
                                  double xmax, BoundInputs inputs) {
  BoundResult r;
  r.inputs = std::move(inputs);
  if (!(xmax > 0.0)) {
    r.value = 0.0;
    r.branch = BoundBranch::degenerate_zero;
    return r;
  }
  const LineMax lm = golden_max_logx(phi, std::min(1e-12, xmax), xmax);
  r.value = lm.value;
  r.x_star = lm.x;
  r.branch = lm.x >= xmax * (1.0 - 1e-9) ? BoundBranch::small_eps
                                         : BoundBranch::plateau;
  return r;
}

}  // namespace

BoundResult energy_bound_sd(const ProbDist& p, const EnergySequence& h_tail,
                            long m, double eps) {
  eps = clamp_unit(eps, "energy_bound_sd");
  const StateDependentParams params =
      state_dependent_params(p, h_tail, m, eps);
  BoundInputs inputs;
  inputs.eps = eps;
  inputs.m = m;
  inputs.energy = params.E_m_of_x.y.empty() ? 0.0 : params.E_m_of_x.y.back();
  inputs.eps_effective = params.eps_m;
  inputs.sequence_id = h_tail.label();
  const double xmax = std::min(params.eps_m, params.eps_star);
  const double h1 = h_tail.ground();
  const auto phi = [&](double x) {
    const double arg = std::max(params.E_m_of_x(x) / x, h1);
    return x * max_entropy_F(h_tail, arg) + binary_entropy(x);
  };
  return maximize_sd_objective(phi, xmax, std::move(inputs));
}

double energy_bound_sd_grid(const ProbDist& p, const EnergySequence& h_tail,
                            long m, double eps, int grid_points) {
  eps = clamp_unit(eps, "energy_bound_sd_grid");
  const StateDependentParams params =
      state_dependent_params(p, h_tail, m, eps);
  const double xmax = std::min(params.eps_m, params.eps_star);
  if (!(xmax > 0.0)) return 0.0;
  const double h1 = h_tail.ground();
  const auto phi = [&](double x) {
    const double arg = std::max(params.E_m_of_x(x) / x, h1);
    return x * max_entropy_F(h_tail, arg) + binary_entropy(x);
  };
  const double lo = std::min(1e-12, xmax);
  if (lo >= xmax) return phi(xmax);
  const int n = std::max(grid_points, 8);
  const double la = std::log(lo), lb = std::log(xmax);
  std::vector<double> xs(static_cast<std::size_t>(n));
  double best = -1.0;
  int best_i = 0;
  for (int i = 0; i < n; ++i) {
    xs[static_cast<std::size_t>(i)] =
        std::exp(la + (lb - la) * static_cast<double>(i) /
                          static_cast<double>(n - 1));
    const double v = phi(xs[static_cast<std::size_t>(i)]);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  // Local ternary refinement around the best grid point.
  double a = xs[static_cast<std::size_t>(std::max(best_i - 1, 0))];
  double b = xs[static_cast<std::size_t>(std::min(best_i + 1, n - 1))];
  for (int it = 0; it < 200 && (b - a) > 1e-14 * b; ++it) {
    const double m1 = a + (b - a) / 3.0;
    const double m2 = b - (b - a) / 3.0;
    if (phi(m1) < phi(m2))
      a = m1;
    else
      b = m2;
  }
  return std::max(best, phi(0.5 * (a + b)));
}

BoundResult oscillator_bound(double energy_arg, long m, double eps,
                             bool arg_is_Em) {
  if (!(energy_arg >= 0.0))
    throw std::invalid_argument("oscillator_bound: energy must be >= 0");
  if (m < 0) throw std::invalid_argument("oscillator_bound: m must be >= 0");
  eps = clamp_unit(eps, "oscillator_bound");
  BoundInputs inputs;
  inputs.eps = eps;
  inputs.m = m;
  inputs.energy = energy_arg;
  inputs.energy_is_Em = arg_is_Em;
  inputs.sequence_id = "oscillator";

  if (eps == 0.0)
    return zero_result(BoundBranch::small_eps, std::move(inputs));
  if (energy_arg == 0.0)  // the shifted tail has ground level m+1 > 0
    return zero_result(BoundBranch::degenerate_zero, std::move(inputs));

  const double mp1 = static_cast<double>(m + 1);
  const double cap = std::min(1.0, energy_arg / mp1);
  const auto phi = [&](double x) {
    const double u = std::max(energy_arg / x - mp1, 0.0);
    return x * g_function(u) + binary_entropy(x);
  };
  const LineMax lm = golden_max_logx(phi, std::min(1e-12, cap), cap);
  BoundResult r;
  r.inputs = std::move(inputs);
  if (eps < lm.x) {
    r.value = phi(eps);
    r.branch = BoundBranch::small_eps;
    r.x_star = eps;
  } else {
    r.value = lm.value;
    r.branch = BoundBranch::plateau;
    r.x_star = lm.x;
  }
  return r;
}

BoundResult oscillator_bound_sd(const ProbDist& p, long m, double eps) {
  if (m < 0)
    throw std::invalid_argument("oscillator_bound_sd: m must be >= 0");
  eps = clamp_unit(eps, "oscillator_bound_sd");
  const EnergySequence tail =
      EnergySequence::oscillator().drop_prefix(static_cast<std::size_t>(m) +
                                               1);
  const StateDependentParams params = state_dependent_params(p, tail, m, eps);
  BoundInputs inputs;
  inputs.eps = eps;
  inputs.m = m;
  inputs.eps_effective = params.eps_m;
  inputs.sequence_id = "oscillator";

  const double xmax = std::min(params.eps_m, params.eps_star);
  const double mp1 = static_cast<double>(m + 1);
  std::function<double(double)> phi;
  if (m == 0) {
    // E_0^x h(x/E_0^x) + h(x); identical to x g(E_0^x/x - 1) + h(x) but the
    // h-form keeps precision when E_0^x/x sits near 1.
    phi = [params](double x) {
      const double f = params.E_m_of_x(x);
      if (f <= 0.0) return binary_entropy(x);
      const double ratio = std::min(x / f, 1.0);
      return f * binary_entropy(ratio) + binary_entropy(x);
    };
  } else {
    phi = [params, mp1](double x) {
      const double u = std::max(params.E_m_of_x(x) / x - mp1, 0.0);
      return x * g_function(u) + binary_entropy(x);
    };
  }
  return maximize_sd_objective(phi, xmax, std::move(inputs));
}

}  // namespace semibound
