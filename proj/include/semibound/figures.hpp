#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semibound {

struct FigureData {
  std::string name;
  std::vector<std::string> columns;  // first column is always eps
  std::vector<std::vector<double>> rows;
};

// Data behind the six reference plots:
//   1: number-level bound for the mean-1 Gibbs spectrum, m = 0..5
//   2: same for the mean-5 Gibbs spectrum
//   3: sufficient majorization dimension vs eps for E = 0.1, 1, 10
//   4: plain vs state-dependent bound for the mean-0.3 Gibbs spectrum
//   5: rank/energy bounds and their state-dependent versions for the
//      two-level uniform spectrum (m = 0)
//   6: same four curves for the five-level uniform spectrum at m = 3
// Figures 1, 2 and 4-6 use `points` log-spaced eps values in [1e-4, 1];
// figure 3 uses the binary grid eps = 2^0 .. 2^-10 (smaller eps would push
// the dimension search past its cap for E = 10).
FigureData make_figure(int id, int points = 200);

// CSV with a header row, every number printed to 9 significant digits.
void write_csv(const FigureData& fig, std::ostream& out);

}  // namespace semibound
