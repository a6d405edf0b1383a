// Command-line front end: bound evaluation, dimension sweeps, witness
// construction, figure data and the verification suites.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semibound/bounds.hpp"
#include "semibound/extremal.hpp"
#include "semibound/figures.hpp"
#include "semibound/io.hpp"
#include "semibound/majdim.hpp"
#include "semibound/verify.hpp"

namespace {

using namespace semibound;

constexpr double kLn2 = 0.6931471805599453;

std::vector<double> eps_grid(int points) {
  std::vector<double> eps(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i)
    eps[static_cast<std::size_t>(i)] =
        std::pow(10.0, -4.0 + 4.0 * static_cast<double>(i) /
                                  static_cast<double>(points - 1));
  return eps;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

struct BoundCli {
  bool rank = false;
  bool energy = false;
  bool oscillator = false;
  bool state_dependent = false;
  bool bits = false;
  long d = 0;
  long m = 0;
  double E = -1.0;
  double eps = -1.0;
  bool use_grid = false;
  int grid_points = 200;
  std::string h_file;
  std::string spectrum_file;
  std::string out;
};

int run_bound(const BoundCli& cli) {
  if (cli.rank == cli.energy)
    throw CLI::ValidationError("bound", "choose exactly one of --rank/--energy");

  std::optional<ProbDist> spectrum;
  if (!cli.spectrum_file.empty()) spectrum = load_spectrum(cli.spectrum_file);

  std::vector<double> grid;
  if (cli.use_grid)
    grid = eps_grid(cli.grid_points);
  else if (cli.eps >= 0.0)
    grid = {cli.eps};
  else
    throw CLI::ValidationError("bound", "need --eps or --eps-grid");

  std::ofstream file;
  std::ostream& out = open_output(file, cli.out);
  const double unit = cli.bits ? kLn2 : 1.0;
  out << "eps,value,branch,x_star\n";

  for (double eps : grid) {
    BoundResult r;
    if (cli.rank) {
      if (cli.state_dependent) {
        if (!spectrum)
          throw CLI::ValidationError("bound",
                                     "--state-dependent needs --spectrum-file");
        r = rank_bound_sd(*spectrum, cli.m, eps);
      } else {
        long d = cli.d;
        if (d <= 0 && spectrum) d = static_cast<long>(spectrum->support_size());
        if (d <= 0)
          throw CLI::ValidationError("bound", "--rank needs --d or --spectrum-file");
        r = rank_bound(d, cli.m, eps);
      }
    } else {
      if (cli.h_file.empty() && !cli.oscillator)
        throw CLI::ValidationError("bound",
                                   "--energy needs --oscillator or --h-file");
      const EnergySequence seq = cli.oscillator
                                     ? EnergySequence::oscillator()
                                     : load_energy_sequence(cli.h_file);
      if (cli.state_dependent) {
        if (!spectrum)
          throw CLI::ValidationError("bound",
                                     "--state-dependent needs --spectrum-file");
        if (cli.oscillator)
          r = oscillator_bound_sd(*spectrum, cli.m, eps);
        else
          r = energy_bound_sd(
              *spectrum,
              seq.drop_prefix(static_cast<std::size_t>(cli.m) + 1), cli.m,
              eps);
      } else if (spectrum) {
        const QuantumEnergyParams qp =
            quantum_energy_params(*spectrum, seq, cli.m);
        r = cli.oscillator ? oscillator_bound(qp.E_m, cli.m, eps)
                           : energy_bound(qp.h_tail, qp.E_m, eps);
      } else {
        if (cli.E < 0.0)
          throw CLI::ValidationError("bound",
                                     "--energy needs --E or --spectrum-file");
        // Without a spectrum E stands in for E_m (never smaller, so the
        // bound stays valid).
        r = cli.oscillator
                ? oscillator_bound(cli.E, cli.m, eps, /*arg_is_Em=*/false)
                : energy_bound(
                      seq.drop_prefix(static_cast<std::size_t>(cli.m) + 1),
                      cli.E, eps);
      }
    }
    out << format_sig9(eps) << "," << format_sig9(r.value / unit) << ","
        << to_string(r.branch) << ","
        << (r.x_star ? format_sig9(*r.x_star) : std::string()) << "\n";
  }
  return 0;
}

int run_majdim(const std::string& h_file, bool oscillator, double E,
               double eps, bool use_grid, bool fallback, bool include_m0,
               const std::string& out_path) {
  const EnergySequence seq = oscillator ? EnergySequence::oscillator()
                                        : load_energy_sequence(h_file);
  std::vector<double> grid;
  if (use_grid) {
    for (int k = 10; k >= 0; --k) grid.push_back(std::pow(2.0, -k));
  } else {
    grid = {eps};
  }
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  MajDimOptions opts;
  opts.fallback_full_F = fallback;
  opts.include_m0 = include_m0;
  out << "eps,m_bound,lhs,rhs\n";
  for (double e : grid) {
    const MajDimResult r = sufficient_majorization_dim(seq, E, e, opts);
    out << format_sig9(r.eps) << "," << r.m_bound << ","
        << format_sig9(r.lhs_at_m) << "," << format_sig9(r.rhs) << "\n";
  }
  return 0;
}

void print_pair_json(const ExtremalPair& pair, double bound,
                     std::ostream& out) {
  const auto vec = [](const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += format_sig9(v[i]);
    }
    return s + "]";
  };
  out << "{\n"
      << "  \"m\": " << pair.m << ",\n"
      << "  \"eps\": " << format_sig9(pair.eps) << ",\n"
      << "  \"p\": " << vec(pair.p.weights()) << ",\n"
      << "  \"q\": " << vec(pair.q.weights()) << ",\n"
      << "  \"achieved_gap\": " << format_sig9(pair.achieved_gap) << ",\n"
      << "  \"predicted_gap\": " << format_sig9(pair.predicted_gap) << ",\n"
      << "  \"delta\": " << format_sig9(pair.delta) << ",\n"
      << "  \"bound\": " << format_sig9(bound) << ",\n"
      << "  \"support_reduced\": " << (pair.support_reduced ? "true" : "false")
      << "\n}\n";
}

int run_verify(const std::string& suite, long trials, std::uint64_t seed) {
  FuzzConfig config;
  config.trials = trials;
  config.seed = seed;
  long violations = 0;
  const auto show = [&](const char* name, const FuzzReport& r) {
    std::cout << name << ": trials=" << r.trials
              << " violations=" << r.violations
              << " worst_margin=" << format_sig9(r.worst_margin)
              << " rejected=" << r.rejected << "\n";
    violations += r.violations;
  };
  if (suite == "identities" || suite == "all")
    show("identities", identity_suite());
  if (suite == "bounds" || suite == "all")
    show("bounds", fuzz_bound_validity(config));
  if (suite == "lemma" || suite == "all")
    show("lemma", fuzz_lemma_reduction(config));
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy semicontinuity bounds under partial majorization"};
  app.require_subcommand(1);

  BoundCli bound_cli;
  auto* bound = app.add_subcommand("bound", "evaluate a semicontinuity bound");
  bound->add_flag("--rank", bound_cli.rank, "rank-constrained bound");
  bound->add_flag("--energy", bound_cli.energy, "energy-constrained bound");
  bound->add_flag("--oscillator", bound_cli.oscillator,
                  "use the number levels 0,1,2,...");
  bound->add_option("--h-file", bound_cli.h_file,
                    "energy sequence JSON {\"prefix\": [...], \"step\": s}");
  bound->add_option("--d", bound_cli.d, "support size for --rank");
  bound->add_option("--m", bound_cli.m, "partial-majorization depth")
      ->check(CLI::NonNegativeNumber);
  bound->add_option("--E", bound_cli.E, "mean energy (stands in for E_m)");
  bound->add_option("--spectrum-file", bound_cli.spectrum_file,
                    "spectrum file (one probability per line or JSON array)");
  bound->add_option("--eps", bound_cli.eps, "proximity parameter in [0,1]");
  bound->add_flag("--eps-grid", bound_cli.use_grid,
                  "sweep 200 log-spaced eps values in [1e-4, 1]");
  bound->add_option("--grid-points", bound_cli.grid_points,
                    "points for --eps-grid");
  bound->add_flag("--state-dependent", bound_cli.state_dependent,
                  "use the spectrum-dependent improvement");
  bound->add_flag("--bits", bound_cli.bits, "report bits instead of nats");
  bound->add_option("--out", bound_cli.out, "output CSV path (default stdout)");

  std::string md_h_file, md_out;
  bool md_osc = false, md_fallback = false, md_include0 = false,
       md_grid = false;
  double md_E = 0.0, md_eps = 0.0;
  auto* majdim =
      app.add_subcommand("majdim", "sufficient majorization dimension");
  majdim->add_flag("--oscillator", md_osc, "number levels");
  majdim->add_option("--h-file", md_h_file, "energy sequence JSON");
  majdim->add_option("--E", md_E, "energy budget")->required();
  majdim->add_option("--eps", md_eps, "relative-error target in (0,1]");
  majdim->add_flag("--eps-grid", md_grid, "sweep eps = 2^0 .. 2^-10");
  majdim->add_flag("--fallback", md_fallback,
                   "use the full-sequence F inside the criterion");
  majdim->add_flag("--include-m0", md_include0, "allow m = 0 in the search");
  majdim->add_option("--out", md_out, "output CSV path");

  bool ex_rank = false, ex_energy = false, ex_osc = false;
  long ex_d = 0, ex_m = 0;
  double ex_eps = 0.0, ex_Em = -1.0;
  std::string ex_h_file, ex_out;
  auto* extremal =
      app.add_subcommand("extremal", "construct a tightness witness pair");
  extremal->add_flag("--rank", ex_rank, "rank witness");
  extremal->add_flag("--energy", ex_energy, "energy witness");
  extremal->add_flag("--oscillator", ex_osc, "number levels");
  extremal->add_option("--h-file", ex_h_file, "energy sequence JSON");
  extremal->add_option("--d", ex_d, "support size for --rank");
  extremal->add_option("--m", ex_m, "partial-majorization depth");
  extremal->add_option("--Em", ex_Em, "tail energy for --energy");
  extremal->add_option("--eps", ex_eps, "proximity in (0, 1/(m+1)]")
      ->required();
  extremal->add_option("--out", ex_out, "output JSON path");

  int fig_id = 0, fig_points = 200;
  std::string fig_out;
  auto* figure = app.add_subcommand("figure", "emit figure data as CSV");
  figure->add_option("--id", fig_id, "figure id 1..6")->required();
  figure->add_option("--points", fig_points, "eps grid size");
  figure->add_option("--out", fig_out, "output CSV path");

  std::string vf_suite = "all";
  long vf_trials = 10000;
  std::uint64_t vf_seed = 42;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", vf_suite, "identities|bounds|lemma|all")
      ->check(CLI::IsMember({"identities", "bounds", "lemma", "all"}));
  verify->add_option("--trials", vf_trials, "fuzz trials");
  verify->add_option("--seed", vf_seed, "fuzz seed");

  try {
    app.parse(argc, argv);

    if (bound->parsed()) return run_bound(bound_cli);
    if (majdim->parsed())
      return run_majdim(md_h_file, md_osc, md_E, md_eps, md_grid, md_fallback,
                        md_include0, md_out);
    if (extremal->parsed()) {
      if (ex_rank == ex_energy)
        throw CLI::ValidationError("extremal",
                                   "choose exactly one of --rank/--energy");
      std::ofstream file;
      std::ostream& out = open_output(file, ex_out);
      if (ex_rank) {
        const ExtremalPair pair = extremal_pair_rank(ex_d, ex_m, ex_eps);
        print_pair_json(pair, rank_bound(ex_d, ex_m, ex_eps).value, out);
      } else {
        if (ex_Em < 0.0)
          throw CLI::ValidationError("extremal", "--energy needs --Em");
        const EnergySequence seq = ex_osc ? EnergySequence::oscillator()
                                          : load_energy_sequence(ex_h_file);
        const EnergySequence tail =
            seq.drop_prefix(static_cast<std::size_t>(ex_m) + 1);
        const ExtremalPair pair =
            extremal_pair_energy(tail, ex_Em, ex_m, ex_eps);
        print_pair_json(pair, energy_bound(tail, ex_Em, ex_eps).value, out);
      }
      return 0;
    }
    if (figure->parsed()) {
      std::ofstream file;
      std::ostream& out = open_output(file, fig_out);
      write_csv(make_figure(fig_id, fig_points), out);
      return 0;
    }
    if (verify->parsed()) return run_verify(vf_suite, vf_trials, vf_seed);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
