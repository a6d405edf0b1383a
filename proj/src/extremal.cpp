#include "semibound/extremal.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace semibound {

double delta_gap(long m, double eps) {
  if (m < 0) throw std::invalid_argument("delta_gap: m must be >= 0");
  if (!(eps >= 0.0))
    throw std::invalid_argument("delta_gap: eps must be >= 0");
  const double mp1 = static_cast<double>(m + 1);
  double scaled = mp1 * eps;
  if (scaled > 1.0 + 1e-12)
    throw std::domain_error("delta_gap: (m+1) eps exceeds 1");
  scaled = std::min(scaled, 1.0);
  return binary_entropy(eps) - binary_entropy(scaled) / mp1;
}

namespace {

void check_eps_range(long m, double eps, const char* who) {
  if (!(eps > 0.0))
    throw std::invalid_argument(std::string(who) + ": eps must be positive");
  if (static_cast<double>(m + 1) * eps > 1.0 + 1e-12)
    throw std::domain_error(std::string(who) +
                            ": eps exceeds 1/(m+1), no witness exists");
}

ProbDist uniform_head(long mp1) {
  std::vector<double> q(static_cast<std::size_t>(mp1),
                        1.0 / static_cast<double>(mp1));
  return ProbDist(std::move(q));
}

}  // namespace

ExtremalPair extremal_pair_rank(long d, long m, double eps) {
  if (m < 0 || m + 1 >= d)
    throw std::invalid_argument("extremal_pair_rank: need 0 <= m < d-1");
  check_eps_range(m, eps, "extremal_pair_rank");

  const long mp1 = m + 1;
  const double head = 1.0 / static_cast<double>(mp1);
  double pivot = (1.0 - static_cast<double>(mp1) * eps) /
                 static_cast<double>(mp1);
  bool reduced = false;
  if (pivot < 1e-15) {  // eps = 1/(m+1): the pivot entry vanishes
    pivot = 0.0;
    reduced = true;
  }
  std::vector<double> pw;
  pw.reserve(static_cast<std::size_t>(d));
  for (long i = 0; i < mp1 - 1; ++i) pw.push_back(head);
  pw.push_back(pivot);
  const double tail = eps / static_cast<double>(d - mp1);
  for (long i = mp1; i < d; ++i) pw.push_back(tail);

  ExtremalPair pair{ProbDist(std::move(pw)), uniform_head(mp1), m, eps,
                    0.0,  0.0, delta_gap(m, eps), reduced};
  pair.achieved_gap = shannon_entropy(pair.p) - shannon_entropy(pair.q);
  pair.predicted_gap =
      eps * std::log(static_cast<double>(d - mp1)) +
      binary_entropy(std::min(static_cast<double>(mp1) * eps, 1.0)) /
          static_cast<double>(mp1);
  return pair;
}

ExtremalPair extremal_pair_energy(const EnergySequence& h_tail, double E_m,
                                  long m, double eps) {
  if (m < 0) throw std::invalid_argument("extremal_pair_energy: m >= 0");
  check_eps_range(m, eps, "extremal_pair_energy");
  if (!(E_m >= 0.0))
    throw std::invalid_argument("extremal_pair_energy: E_m must be >= 0");
  const double target = E_m / eps;
  if (target < h_tail.ground())
    throw std::domain_error(
        "extremal_pair_energy: E_m/eps below the tail ground level");

  const ProbDist w = gibbs_distribution(h_tail, target);
  const long mp1 = m + 1;
  const double head = 1.0 / static_cast<double>(mp1);
  double pivot = (1.0 - static_cast<double>(mp1) * eps) /
                 static_cast<double>(mp1);
  bool reduced = false;
  if (pivot < 1e-15) {
    pivot = 0.0;
    reduced = true;
  }
  std::vector<double> pw;
  pw.reserve(static_cast<std::size_t>(mp1) + w.size());
  for (long i = 0; i < mp1 - 1; ++i) pw.push_back(head);
  pw.push_back(pivot);
  for (double wi : w.weights()) pw.push_back(eps * wi);

  ExtremalPair pair{ProbDist(std::move(pw)), uniform_head(mp1), m, eps,
                    0.0,  0.0, delta_gap(m, eps), reduced};
  pair.achieved_gap = shannon_entropy(pair.p) - shannon_entropy(pair.q);
  pair.predicted_gap =
      eps * max_entropy_F(h_tail, target) +
      binary_entropy(std::min(static_cast<double>(mp1) * eps, 1.0)) /
          static_cast<double>(mp1);
  return pair;
}

ProbDist gibbs_distribution(const EnergySequence& h, double E) {
  const GibbsPoint point = solve_beta(h, E);
  if (point.at_ground) {
    // beta -> infinity limit: uniform over the ground levels.
    const std::size_t mult = h.ground_multiplicity();
    std::vector<double> w(mult, 1.0 / static_cast<double>(mult));
    return ProbDist(std::move(w));
  }
  const double beta = point.beta;
  const double h1 = h.ground();
  // F = beta (E - h1) + ln(shifted Z) by construction.
  const long double zs =
      expl(static_cast<long double>(point.F - beta * (E - h1)));
  const double mass_target = 1e-14;
  const double energy_target = 1e-13 * std::max(1.0, E);

  std::vector<double> w;
  w.reserve(256);
  const std::size_t n0 = h.prefix().size();
  const double s = h.step();
  const long double r = expl(-static_cast<long double>(beta) * s);
  const long double em = -expm1l(-static_cast<long double>(beta) * s);
  for (std::size_t i = 0; i < n0; ++i)
    w.push_back(static_cast<double>(
        expl(-static_cast<long double>(beta) * (h.level(i) - h1)) / zs));
  // Tail terms shrink geometrically; stop once both the analytic remaining
  // mass and the remaining mean-energy weight are negligible.
  long double term =
      expl(-static_cast<long double>(beta) * (h.level(n0 - 1) - h1)) / zs;
  bool truncated = false;
  for (std::size_t k = 0; k < 5000000; ++k) {
    term *= r;
    const double lvl = h.level(n0 + k);
    w.push_back(static_cast<double>(term));
    const long double rest_mass = term * r / em;
    const long double rest_energy = rest_mass * (lvl + s / em);
    if (rest_mass <= mass_target && rest_energy <= energy_target) {
      truncated = true;
      break;
    }
  }
  if (!truncated)
    throw std::runtime_error("gibbs_distribution: truncation too long");
  return ProbDist(std::move(w));
}

}  // namespace semibound
