#pragma once

#include <string>

#include "semibound/gibbs.hpp"
#include "semibound/simplex.hpp"

namespace semibound {

// Loads a spectrum/distribution file: either one decimal probability per
// line or a JSON array of numbers. The result is sorted non-increasing.
ProbDist load_spectrum(const std::string& path);

// Loads an energy sequence. The literal "oscillator" means {0, 1, 2, ...};
// anything else is a path to a JSON object { "prefix": [...], "step": s }.
EnergySequence load_energy_sequence(const std::string& spec);

// Fixed 9-significant-digit formatting used for all numeric output.
std::string format_sig9(double v);

}  // namespace semibound
