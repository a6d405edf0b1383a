#include "semibound/figures.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "semibound/bounds.hpp"
#include "semibound/io.hpp"
#include "semibound/majdim.hpp"

namespace semibound {

namespace {

std::vector<double> log_grid(int points) {
  std::vector<double> eps(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i)
    eps[static_cast<std::size_t>(i)] =
        std::pow(10.0, -4.0 + 4.0 * static_cast<double>(i) /
                                  static_cast<double>(points - 1));
  return eps;
}

// Geometric spectrum of the mean-E thermal state over the number levels:
// lambda_k = (1/(E+1)) (E/(E+1))^k, truncated below 1e-14 residual mass.
ProbDist thermal_number_spectrum(double E) {
  const double r = E / (E + 1.0);
  std::vector<double> w;
  long double acc = 0.0L;
  double cur = 1.0 / (E + 1.0);
  while (static_cast<double>(1.0L - acc) > 1e-14) {
    w.push_back(cur);
    acc += cur;
    cur *= r;
    if (w.size() > 1000000)
      throw std::runtime_error("thermal spectrum: truncation too long");
  }
  return ProbDist(std::move(w));
}

ProbDist uniform_levels(long d) {
  return ProbDist(std::vector<double>(static_cast<std::size_t>(d),
                                      1.0 / static_cast<double>(d)));
}

double tail_energy(const ProbDist& p, long m) {
  return quantum_energy_params(p, EnergySequence::oscillator(), m).E_m;
}

FigureData bound_vs_m(const std::string& name, double E, int points) {
  const ProbDist rho = thermal_number_spectrum(E);
  FigureData fig;
  fig.name = name;
  fig.columns = {"eps", "m0", "m1", "m2", "m3", "m4", "m5"};
  std::vector<double> em(6);
  for (long m = 0; m <= 5; ++m)
    em[static_cast<std::size_t>(m)] = tail_energy(rho, m);
  for (double eps : log_grid(points)) {
    std::vector<double> row{eps};
    for (long m = 0; m <= 5; ++m)
      row.push_back(
          oscillator_bound(em[static_cast<std::size_t>(m)], m, eps).value);
    fig.rows.push_back(std::move(row));
  }
  return fig;
}

FigureData majdim_sweep(int /*points*/) {
  FigureData fig;
  fig.name = "majorization-dimension";
  fig.columns = {"eps", "E0.1", "E1", "E10"};
  const EnergySequence osc = EnergySequence::oscillator();
  // Binary grid 2^0 .. 2^-10; smaller eps would push the E = 10 search past
  // the dimension cap.
  for (int k = 10; k >= 0; --k) {
    const double eps = std::pow(2.0, -k);
    std::vector<double> row{eps};
    for (double E : {0.1, 1.0, 10.0})
      row.push_back(static_cast<double>(
          sufficient_majorization_dim(osc, E, eps).m_bound));
    fig.rows.push_back(std::move(row));
  }
  return fig;
}

FigureData plain_vs_state_dependent(double E, int points) {
  const ProbDist rho = thermal_number_spectrum(E);
  const double e0 = tail_energy(rho, 0);
  FigureData fig;
  fig.name = "thermal-state-dependent";
  fig.columns = {"eps", "plain_m0", "state_dep_m0"};
  for (double eps : log_grid(points)) {
    fig.rows.push_back({eps, oscillator_bound(e0, 0, eps).value,
                        oscillator_bound_sd(rho, 0, eps).value});
  }
  return fig;
}

FigureData four_curves(long d, long m, const std::string& name, int points) {
  const ProbDist rho = uniform_levels(d);
  const double em = tail_energy(rho, m);
  FigureData fig;
  fig.name = name;
  fig.columns = {"eps", "rank", "energy", "rank_sd", "energy_sd"};
  for (double eps : log_grid(points)) {
    fig.rows.push_back({eps, rank_bound(d, m, eps).value,
                        oscillator_bound(em, m, eps).value,
                        rank_bound_sd(rho, m, eps).value,
                        oscillator_bound_sd(rho, m, eps).value});
  }
  return fig;
}

}  // namespace

FigureData make_figure(int id, int points) {
  if (points < 2) throw std::invalid_argument("make_figure: points < 2");
  switch (id) {
    case 1: return bound_vs_m("thermal-mean1-bounds", 1.0, points);
    case 2: return bound_vs_m("thermal-mean5-bounds", 5.0, points);
    case 3: return majdim_sweep(points);
    case 4: return plain_vs_state_dependent(0.3, points);
    case 5: return four_curves(2, 0, "uniform2-bounds", points);
    case 6: return four_curves(5, 3, "uniform5-m3-bounds", points);
    default:
      throw std::invalid_argument("make_figure: id must be 1..6");
  }
}

void write_csv(const FigureData& fig, std::ostream& out) {
  for (std::size_t i = 0; i < fig.columns.size(); ++i) {
    if (i) out << ",";
    out << fig.columns[i];
  }
  out << "\n";
  for (const auto& row : fig.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << format_sig9(row[i]);
    }
    out << "\n";
  }
}

}  // namespace semibound
