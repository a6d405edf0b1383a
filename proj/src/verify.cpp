#include "semibound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "semibound/bounds.hpp"
#include "semibound/extremal.hpp"
#include "semibound/opt.hpp"
#include "semibound/simplex.hpp"

namespace semibound {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent generator per trial: parallel and serial runs see the same
// stream.
std::mt19937_64 trial_rng(std::uint64_t seed, long trial) {
  return std::mt19937_64(
      splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial) + 1)));
}

double uniform01(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(
      std::numeric_limits<double>::min(), 1.0)(rng);
}

// Exponential weights normalized onto the simplex; power > 1 sharpens the
// spectrum.
std::vector<double> sample_simplex(std::mt19937_64& rng, long d, int power) {
  std::vector<double> w(static_cast<std::size_t>(d));
  long double sum = 0.0L;
  for (auto& v : w) {
    v = -std::log(uniform01(rng));
    for (int k = 1; k < power; ++k) v *= v;
    sum += v;
  }
  for (auto& v : w) v = static_cast<double>(v / static_cast<double>(sum));
  // Normalize the rounding residue into the largest entry.
  long double s2 = 0.0L;
  for (double v : w) s2 += v;
  auto it = std::max_element(w.begin(), w.end());
  *it += static_cast<double>(1.0L - s2);
  return w;
}

ProbDist sorted_dist(std::vector<double> w) {
  std::sort(w.begin(), w.end(), std::greater<double>());
  return ProbDist(std::move(w));
}

std::vector<EnergySequence> default_sequences() {
  return {EnergySequence::oscillator(),
          EnergySequence({0.0, 0.3, 1.1}, 0.8, "custom-a"),
          EnergySequence({0.5, 0.5, 2.0}, 1.3, "custom-b")};
}

// Draws q with sorted prefix sums dominated by p's up to r = m (candidate
// generators plus rejection; the uniform fallback is always admissible).
ProbDist sample_partially_majorized(std::mt19937_64& rng, const ProbDist& p,
                                    long m, long d_max, long* rejected) {
  const long dp = static_cast<long>(p.size());
  for (int attempt = 0; attempt < 60; ++attempt) {
    std::vector<double> cand;
    switch (rng() % 3) {
      case 0: {  // push mass from the head of sorted p toward the tail
        cand = p.sorted();
        const long moves = 1 + static_cast<long>(rng() % 4);
        for (long t = 0; t < moves; ++t) {
          const std::size_t i = rng() % cand.size();
          const std::size_t j =
              i + 1 < cand.size() ? i + 1 + rng() % (cand.size() - i - 1) : i;
          if (i == j) continue;
          const double amount = cand[i] * 0.8 * uniform01(rng);
          cand[i] -= amount;
          cand[j] += amount;
        }
        break;
      }
      case 1: {  // independent flat-ish sample
        const long dq = 2 + static_cast<long>(rng() % d_max);
        cand = sample_simplex(rng, dq, 1);
        break;
      }
      default: {  // near-uniform head, the shape of the witness pairs
        const long k =
            1 + static_cast<long>(rng() % static_cast<unsigned long>(
                                      std::max<long>(m + 2, 2)));
        cand.assign(static_cast<std::size_t>(k),
                    1.0 / static_cast<double>(k));
        break;
      }
    }
    ProbDist q = sorted_dist(std::move(cand));
    if (partial_majorizes(p, q, static_cast<std::size_t>(m)).holds) return q;
    ++*rejected;
  }
  // Uniform over at least |p| entries: sorted prefix sums of p dominate r/k.
  const long k = std::max<long>(dp, m + 1);
  return ProbDist(
      std::vector<double>(static_cast<std::size_t>(k),
                          1.0 / static_cast<double>(k)));
}

}  // namespace

double brute_force_F(const std::vector<double>& levels, double E,
                     int grid_K) {
  const std::size_t n = levels.size();
  if (n < 2 || n > 4)
    throw std::invalid_argument("brute_force_F: supports 2 to 4 levels");
  if (grid_K < 1 || grid_K > 400)
    throw std::runtime_error("brute_force_F: grid_K out of budget (1..400)");
  const double lo = *std::min_element(levels.begin(), levels.end());
  if (E < lo)
    throw std::domain_error("brute_force_F: E below the smallest level");

  const double K = static_cast<double>(grid_K);
  const double slack = 1e-12 * std::max(1.0, std::abs(E));
  double best = -1.0;
  std::vector<double> best_p(n, 0.0);

  // Exhaustive scan of the simplex grid {k/K}: the first n-1 coordinates are
  // free, the last takes the remainder.
  std::vector<int> k(n, 0);
  const auto consider = [&] {
    double energy = 0.0, entropy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double pi = static_cast<double>(k[i]) / K;
      energy += levels[i] * pi;
      entropy += eta(pi);
    }
    if (energy <= E + slack && entropy > best) {
      best = entropy;
      for (std::size_t i = 0; i < n; ++i)
        best_p[i] = static_cast<double>(k[i]) / K;
    }
  };
  if (n == 2) {
    for (k[0] = 0; k[0] <= grid_K; ++k[0]) {
      k[1] = grid_K - k[0];
      consider();
    }
  } else if (n == 3) {
    for (k[0] = 0; k[0] <= grid_K; ++k[0])
      for (k[1] = 0; k[1] <= grid_K - k[0]; ++k[1]) {
        k[2] = grid_K - k[0] - k[1];
        consider();
      }
  } else {
    for (k[0] = 0; k[0] <= grid_K; ++k[0])
      for (k[1] = 0; k[1] <= grid_K - k[0]; ++k[1])
        for (k[2] = 0; k[2] <= grid_K - k[0] - k[1]; ++k[2]) {
          k[3] = grid_K - k[0] - k[1] - k[2];
          consider();
        }
  }

  // Local refinement with shrinking step: plain pair transfers plus
  // three-point transfers that keep the energy fixed, so progress continues
  // along an active energy constraint.
  std::vector<double> p = best_p;
  auto entropy_of = [&](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += eta(x);
    return s;
  };
  auto energy_of = [&](const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += levels[i] * v[i];
    return s;
  };
  double cur = entropy_of(p);
  const auto try_candidate = [&](const std::vector<double>& cand) {
    for (double x : cand)
      if (x < 0.0) return false;
    if (energy_of(cand) > E + slack) return false;
    const double val = entropy_of(cand);
    if (val <= cur + 1e-16) return false;
    p = cand;
    cur = val;
    return true;
  };
  for (double step = 1.0 / K; step > 1e-11;) {
    bool improved = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || p[i] < step) continue;
        std::vector<double> cand = p;
        cand[i] -= step;
        cand[j] += step;
        improved |= try_candidate(cand);
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (i == j || j == k || i == k) continue;
          if (levels[j] == levels[k] || p[i] < step) continue;
          // Split the mass leaving i between j and k so that
          // h_j dj + h_k dk = h_i step: the energy stays put.
          const double dj =
              step * (levels[i] - levels[k]) / (levels[j] - levels[k]);
          const double dk = step - dj;
          if (dj < 0.0 || dk < 0.0) continue;
          std::vector<double> cand = p;
          cand[i] -= step;
          cand[j] += dj;
          cand[k] += dk;
          improved |= try_candidate(cand);
          // The reverse direction: merge from j and k back into i.
          if (p[j] >= dj && p[k] >= dk) {
            std::vector<double> rev = p;
            rev[i] += step;
            rev[j] -= dj;
            rev[k] -= dk;
            improved |= try_candidate(rev);
          }
        }
    if (!improved) step *= 0.5;
  }
  return std::max(best, cur);
}

FuzzReport fuzz_bound_validity(const FuzzConfig& config) {
  const std::vector<EnergySequence> seqs =
      config.sequences.empty() ? default_sequences() : config.sequences;
  FuzzReport report;
  report.trials = config.trials;
  report.seed = config.seed;
  report.worst_margin = std::numeric_limits<double>::infinity();

  for (long trial = 0; trial < config.trials; ++trial) {
    auto rng = trial_rng(config.seed, trial);
    const long d = 2 + static_cast<long>(rng() % (config.d_max - 1));
    const long m = static_cast<long>(rng() % (config.m_max + 1));
    const int power = 1 + static_cast<int>(rng() % 2);
    const ProbDist p = sorted_dist(sample_simplex(rng, d, power));
    const ProbDist q = sample_partially_majorized(rng, p, m, config.d_max,
                                                  &report.rejected);
    double eps = tv_distance(p, q);
    if (rng() & 1) eps = std::min(1.0, eps * (1.0 + uniform01(rng)));
    const double gap = shannon_entropy(p) - shannon_entropy(q);

    const EnergySequence& seq = seqs[static_cast<std::size_t>(trial) %
                                     seqs.size()];
    const QuantumEnergyParams qp = quantum_energy_params(p, seq, m);

    auto record = [&](double bound) {
      const double margin = bound - gap;
      if (margin < report.worst_margin) report.worst_margin = margin;
      if (margin < -1e-10) ++report.violations;
    };
    record(rank_bound(static_cast<long>(p.support_size()), m, eps).value);
    record(energy_bound(qp.h_tail, qp.E_m, eps).value);
    if (m + 1 < static_cast<long>(p.support_size()))
      record(rank_bound_sd(p, m, eps).value);
    record(energy_bound_sd(p, qp.h_tail, m, eps).value);
  }
  return report;
}

FuzzReport fuzz_lemma_reduction(const FuzzConfig& config) {
  FuzzReport report;
  report.trials = config.trials;
  report.seed = config.seed;
  report.worst_margin = std::numeric_limits<double>::infinity();

  for (long trial = 0; trial < config.trials; ++trial) {
    auto rng = trial_rng(config.seed * 0x5bf03635ULL + 17, trial);
    const long dp = 2 + static_cast<long>(rng() % (config.d_max - 1));
    const long m = static_cast<long>(rng() % (config.m_max + 1));
    const ProbDist p = sorted_dist(sample_simplex(rng, dp, 1));

    // Admissible q: sorted prefix sums below p's for r = 1..m.
    ProbDist q = [&] {
      for (int attempt = 0; attempt < 60; ++attempt) {
        const long dq = 2 + static_cast<long>(rng() % (config.d_max - 1));
        ProbDist cand = sorted_dist(sample_simplex(rng, dq, 1));
        bool ok = true;
        long double sp = 0.0L, sq = 0.0L;
        for (long r = 0; r < m; ++r) {
          sp += r < static_cast<long>(p.size()) ? p.sorted()[r] : 0.0;
          sq += r < static_cast<long>(cand.size()) ? cand.sorted()[r] : 0.0;
          if (static_cast<double>(sq - sp) > 0.0) {
            ok = false;
            break;
          }
        }
        if (ok) return cand;
        ++report.rejected;
      }
      const long k = std::max<long>(dp, m + 1);
      return ProbDist(std::vector<double>(static_cast<std::size_t>(k),
                                          1.0 / static_cast<double>(k)));
    }();

    const ProbDist reduced = vsl_reduce(p, q, static_cast<std::size_t>(m));
    const auto& ps = p.sorted();
    auto track = [&](double margin) {
      if (margin < report.worst_margin) report.worst_margin = margin;
      if (margin < -1e-12) ++report.violations;
    };
    // Componentwise floor on the first m+1 entries.
    for (long i = 0; i <= m; ++i) {
      const double pi =
          i < static_cast<long>(ps.size()) ? ps[static_cast<std::size_t>(i)]
                                           : 0.0;
      const double qi = i < static_cast<long>(reduced.size())
                            ? reduced.weights()[static_cast<std::size_t>(i)]
                            : 0.0;
      track(qi - pi);
    }
    const ProbDist p_sorted = sort_desc(p);
    const ProbDist q_sorted = sort_desc(q);
    track(tv_distance(p_sorted, q_sorted) - tv_distance(p_sorted, reduced));
    track(shannon_entropy(q) - shannon_entropy(reduced));
  }
  return report;
}

FuzzReport identity_suite() {
  FuzzReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  auto check = [&](double deviation, double tol) {
    ++report.trials;
    const double margin = tol - std::abs(deviation);
    if (margin < report.worst_margin) report.worst_margin = margin;
    if (std::abs(deviation) > tol) ++report.violations;
  };

  const std::vector<EnergySequence> seqs = {
      EnergySequence::oscillator(),
      EnergySequence::oscillator().drop_prefix(1),
      EnergySequence::oscillator().drop_prefix(4),
      EnergySequence({0.0, 0.0, 1.0}, 1.0, "double-ground"),
      EnergySequence({0.5, 1.7}, 0.9, "custom-offset"),
      EnergySequence({2.0}, 2.0, "stretched")};

  // Composition identities for the zero-prepended sequence.
  for (const auto& h : seqs) {
    const double h1 = h.ground();
    for (double offset : {0.1, 0.5, 2.0, 10.0}) {
      const double E = h1 + offset;
      const double lhs = max_entropy_F(h.prepend_zero(), E);
      const double cap = h1 > 0.0 ? std::min(1.0, E / h1) : 1.0;
      const auto phi = [&](double x) {
        return x * max_entropy_F(h, std::max(E / x, h1)) + binary_entropy(x);
      };
      const LineMax lm = golden_max_logx(phi, std::min(1e-12, cap), cap);
      const double a = a_zero(h, E);
      check(lhs - lm.value, 1e-6);
      check(lm.x - a, 1e-6);
      check(lhs - phi(a), 1e-9);
    }
  }

  // Number-level closed form through the solver.
  for (double E : {0.1, 0.3, 1.0, 5.0, 10.0, 100.0})
    check(max_entropy_F(EnergySequence::oscillator(), E) - g_function(E),
          1e-9);

  // Monotone chain under prefix drops at a common admissible energy.
  for (const auto& h : {EnergySequence::oscillator(),
                        EnergySequence({0.0, 0.4, 1.2}, 0.7, "chain-seq")}) {
    const double E = h.level(7) + 1.0;
    double prev = max_entropy_F(h, E);
    for (long m = 0; m <= 4; ++m) {
      const double cur =
          max_entropy_F(h.drop_prefix(static_cast<std::size_t>(m) + 1), E);
      check(std::min(prev - cur, 0.0), 1e-12);  // expect prev >= cur
      prev = cur;
    }
  }

  // Sublinear growth of F.
  {
    const EnergySequence osc = EnergySequence::oscillator();
    double prev_ratio = std::numeric_limits<double>::infinity();
    for (double E : {1e2, 1e3, 1e4}) {
      const double ratio = max_entropy_F(osc, E) / E;
      check(std::min(prev_ratio - ratio, 0.0), 1e-15);
      prev_ratio = ratio;
    }
    check(std::min(0.01 - max_entropy_F(osc, 1e4) / 1e4, 0.0), 1e-15);
  }

  // eps g(E/eps - 1) = E h(eps/E).
  for (double E : {0.2, 0.7, 1.0, 3.0, 12.0})
    for (double eps : {1e-4, 1e-2, 0.3, 0.9}) {
      if (eps > E) continue;
      check(eps * g_function(E / eps - 1.0) -
                E * binary_entropy(eps / E),
            1e-10);
    }

  return report;
}

}  // namespace semibound
