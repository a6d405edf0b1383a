#pragma once

#include <functional>

namespace semibound {

struct LineMax {
  double x;
  double value;
};

// Maximizes a unimodal f over [lo, hi], 0 < lo <= hi, by golden-section
// search in log(x). Both endpoints are evaluated exactly and included, so a
// maximum sitting on the boundary is returned without search error.
LineMax golden_max_logx(const std::function<double(double)>& f, double lo,
                        double hi);

}  // namespace semibound
