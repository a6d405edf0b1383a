#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "semibound/bounds.hpp"
#include "semibound/extremal.hpp"
#include "semibound/simplex.hpp"

using namespace semibound;

namespace {
constexpr double kLn2 = 0.6931471805599453;

EnergySequence osc_tail(long m) {
  return EnergySequence::oscillator().drop_prefix(static_cast<std::size_t>(m) +
                                                  1);
}
}  // namespace

TEST_CASE("delta gap") {
  CHECK(delta_gap(0, 0.3) == 0.0);
  CHECK(delta_gap(2, 0.0) == 0.0);
  CHECK(delta_gap(1, 0.25) ==
        doctest::Approx(binary_entropy(0.25) - binary_entropy(0.5) / 2.0)
            .epsilon(1e-15));
  CHECK(delta_gap(1, 0.25) == doctest::Approx(0.21576155).epsilon(1e-8));
  CHECK_THROWS_AS(delta_gap(3, 0.3), std::domain_error);
  for (long m : {0L, 1L, 4L})
    for (double eps = 0.0; eps <= 1.0 / static_cast<double>(m + 1);
         eps += 0.05)
      CHECK(delta_gap(m, eps) >= -1e-15);
}

TEST_CASE("rank witness pair") {
  SUBCASE("worked example d=3, m=1") {
    const ExtremalPair pair = extremal_pair_rank(3, 1, 0.25);
    CHECK(pair.p.weights()[0] == doctest::Approx(0.5));
    CHECK(pair.p.weights()[1] == doctest::Approx(0.25));
    CHECK(pair.p.weights()[2] == doctest::Approx(0.25));
    CHECK(pair.q.weights() == std::vector<double>{0.5, 0.5});
    CHECK(pair.achieved_gap == doctest::Approx(kLn2 / 2.0).epsilon(1e-12));
    CHECK(pair.achieved_gap == doctest::Approx(0.34657359).epsilon(1e-8));
    CHECK(pair.achieved_gap ==
          doctest::Approx(pair.predicted_gap).epsilon(1e-12));
  }
  SUBCASE("two-point pair") {
    const ExtremalPair pair = extremal_pair_rank(2, 0, 0.3);
    CHECK(pair.achieved_gap ==
          doctest::Approx(binary_entropy(0.3)).epsilon(1e-12));
  }
  SUBCASE("gap sits exactly delta below the bound") {
    for (long d : {3L, 5L, 9L, 40L})
      for (long m = 0; m + 1 < d && m <= 4; ++m)
        for (double eps :
             {0.05, 0.5 / static_cast<double>(m + 1),
              1.0 / static_cast<double>(m + 1)}) {
          const double threshold =
              1.0 - 1.0 / static_cast<double>(d - m);
          if (eps > threshold) continue;
          const ExtremalPair pair = extremal_pair_rank(d, m, eps);
          const double bound = rank_bound(d, m, eps).value;
          CHECK(bound - pair.achieved_gap ==
                doctest::Approx(delta_gap(m, eps)).epsilon(1e-9));
          CHECK(tv_distance(pair.p, pair.q) ==
                doctest::Approx(eps).epsilon(1e-13));
          CHECK(partial_majorizes(pair.p, pair.q,
                                  static_cast<std::size_t>(m))
                    .holds);
          CHECK(pair.achieved_gap <= bound + 1e-12);
        }
  }
  SUBCASE("support reduction at the eps endpoint") {
    const ExtremalPair pair = extremal_pair_rank(5, 1, 0.5);
    CHECK(pair.support_reduced);
    CHECK(pair.p.support_size() == 4);
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(extremal_pair_rank(3, 2, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(extremal_pair_rank(3, 1, 0.6), std::domain_error);
    CHECK_THROWS_AS(extremal_pair_rank(3, 1, 0.0), std::invalid_argument);
  }
}

TEST_CASE("energy witness pair") {
  SUBCASE("boundary case achieves the bound") {
    const ExtremalPair pair = extremal_pair_energy(osc_tail(0), 1.0, 0, 0.5);
    CHECK(pair.achieved_gap == doctest::Approx(2.0 * kLn2).epsilon(1e-9));
    CHECK(pair.delta == 0.0);
    CHECK(tv_distance(pair.p, pair.q) == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("gap sits exactly delta below the small-eps bound") {
    for (long m : {0L, 1L, 3L})
      for (double em : {0.8, 2.0})
        for (double frac : {0.3, 0.7, 0.95}) {
          const EnergySequence tail = osc_tail(m);
          const double crossover = a_zero(tail, em);
          double eps = frac * std::min(crossover,
                                       1.0 / static_cast<double>(m + 1));
          const ExtremalPair pair = extremal_pair_energy(tail, em, m, eps);
          const double bound = energy_bound(tail, em, eps).value;
          CHECK(bound - pair.achieved_gap ==
                doctest::Approx(delta_gap(m, eps)).epsilon(1e-8).scale(1.0));
          CHECK(tv_distance(pair.p, pair.q) ==
                doctest::Approx(eps).epsilon(1e-12));
          CHECK(partial_majorizes(pair.p, pair.q,
                                  static_cast<std::size_t>(m))
                    .holds);
          // Tail energy accounting: sum_i h_i p_{m+1+i} = E_m.
          long double tail_energy = 0.0L;
          const auto& pw = pair.p.weights();
          for (std::size_t i = static_cast<std::size_t>(m) + 1;
               i < pw.size(); ++i)
            tail_energy +=
                tail.level(i - static_cast<std::size_t>(m) - 1) * pw[i];
          CHECK(static_cast<double>(tail_energy) ==
                doctest::Approx(em).epsilon(1e-9));
        }
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(extremal_pair_energy(osc_tail(0), 0.05, 0, 0.5),
                    std::domain_error);  // E_m/eps below the tail ground
    CHECK_THROWS_AS(extremal_pair_energy(osc_tail(1), 1.0, 1, 0.8),
                    std::domain_error);  // eps beyond 1/(m+1)
  }
  SUBCASE("witness entropy decomposes as a disjoint mixture") {
    const double eps = 0.2, em = 1.5;
    const long m = 2;
    const EnergySequence tail = osc_tail(m);
    const ExtremalPair pair = extremal_pair_energy(tail, em, m, eps);
    // Head block (mass 1 - eps) and Gibbs block (mass eps) have disjoint
    // supports, so H(p) = (1-eps) H(head) + eps H(w) + h(eps) exactly.
    const auto& pw = pair.p.weights();
    std::vector<double> head(pw.begin(), pw.begin() + (m + 1));
    for (auto& v : head) v /= (1.0 - eps);
    const double hw = max_entropy_F(tail, em / eps);
    const double mixture = (1.0 - eps) * shannon_entropy(ProbDist(head)) +
                           eps * hw + binary_entropy(eps);
    CHECK(shannon_entropy(pair.p) ==
          doctest::Approx(mixture).epsilon(1e-9));
  }
}

TEST_CASE("materialized Gibbs weights") {
  const EnergySequence osc = EnergySequence::oscillator();
  SUBCASE("geometric weights at mean 1") {
    const ProbDist w = gibbs_distribution(osc, 1.0);
    for (std::size_t k = 0; k < 5; ++k)
      CHECK(w.weights()[k] ==
            doctest::Approx(std::pow(0.5, k + 1)).epsilon(1e-11));
    CHECK(shannon_entropy(w) ==
          doctest::Approx(g_function(1.0)).epsilon(1e-8).scale(1.0));
  }
  SUBCASE("mean matches the constraint") {
    for (double E : {0.2, 1.0, 7.0}) {
      const ProbDist w = gibbs_distribution(osc, E);
      long double mean = 0.0L;
      for (std::size_t i = 0; i < w.size(); ++i)
        mean += osc.level(i) * w.weights()[i];
      CHECK(static_cast<double>(mean) == doctest::Approx(E).epsilon(1e-9));
      CHECK(shannon_entropy(w) ==
            doctest::Approx(max_entropy_F(osc, E)).epsilon(1e-8));
    }
  }
  SUBCASE("ground boundary is deterministic") {
    const ProbDist w = gibbs_distribution(osc, 0.0);
    CHECK(w.size() == 1);
    CHECK(w.weights()[0] == 1.0);
  }
  SUBCASE("degenerate ground boundary is uniform") {
    const ProbDist w =
        gibbs_distribution(EnergySequence({0.5, 0.5, 1.0}, 1.0), 0.5);
    CHECK(w.size() == 2);
    CHECK(w.weights()[0] == doctest::Approx(0.5));
  }
}
