#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "semibound/figures.hpp"
#include "semibound/io.hpp"

using namespace semibound;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("semibound_test_" + name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("spectrum files: one probability per line") {
  const TempFile f("lines.txt", "0.2\n0.5\n\n0.3\n");
  const ProbDist p = load_spectrum(f.path);
  CHECK(p.weights() == std::vector<double>{0.5, 0.3, 0.2});  // sorted on load
}

TEST_CASE("spectrum files: JSON array") {
  const TempFile f("arr.json", " [0.25, 0.5, 0.25] ");
  const ProbDist p = load_spectrum(f.path);
  CHECK(p.weights() == std::vector<double>{0.5, 0.25, 0.25});
}

TEST_CASE("spectrum files: errors") {
  CHECK_THROWS_AS(load_spectrum("no_such_file_anywhere"), std::runtime_error);
  const TempFile bad("bad.txt", "0.5 0.5\n");
  CHECK_THROWS_AS(load_spectrum(bad.path), std::runtime_error);
  const TempFile off("off.txt", "0.5\n0.4\n");
  CHECK_THROWS_AS(load_spectrum(off.path), std::invalid_argument);
}

TEST_CASE("energy sequence files") {
  CHECK(load_energy_sequence("oscillator").is_arithmetic());
  const TempFile f("seq.json", "{\"prefix\": [0, 0.5, 1.5], \"step\": 0.5}");
  const EnergySequence h = load_energy_sequence(f.path);
  CHECK(h.prefix() == std::vector<double>{0.0, 0.5, 1.5});
  CHECK(h.step() == 0.5);
  const TempFile bad("seqbad.json", "{\"step\": 1}");
  CHECK_THROWS_AS(load_energy_sequence(bad.path), std::runtime_error);
}

TEST_CASE("nine significant digits") {
  CHECK(format_sig9(0.6390318596501769) == "0.63903186");
  CHECK(format_sig9(2.0 * 0.6931471805599453) == "1.38629436");
  CHECK(format_sig9(0.0) == "0");
  CHECK(format_sig9(1e-4) == "0.0001");
}

TEST_CASE("figure CSV has a stable header and identical reruns") {
  const FigureData fig = make_figure(5, 16);
  CHECK(fig.columns ==
        std::vector<std::string>{"eps", "rank", "energy", "rank_sd",
                                 "energy_sd"});
  std::ostringstream a, b;
  write_csv(fig, a);
  write_csv(make_figure(5, 16), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().substr(0, 33) == "eps,rank,energy,rank_sd,energy_sd");
}

TEST_CASE("figure ids are validated") {
  CHECK_THROWS_AS(make_figure(0), std::invalid_argument);
  CHECK_THROWS_AS(make_figure(7), std::invalid_argument);
}
