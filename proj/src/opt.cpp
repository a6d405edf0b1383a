#include "semibound/opt.hpp"

#include <cmath>
#include <stdexcept>

namespace semibound {

LineMax golden_max_logx(const std::function<double(double)>& f, double lo,
                        double hi) {
  if (!(lo > 0.0) || !(hi > 0.0) || !(hi >= lo))
    throw std::invalid_argument("golden_max_logx: need 0 < lo <= hi");
  LineMax best{hi, f(hi)};
  if (hi == lo) return best;
  const double flo = f(lo);
  if (flo > best.value) best = {lo, flo};

  const double invphi = 0.6180339887498949;
  double a = std::log(lo), b = std::log(hi);
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(std::exp(x1));
  double f2 = f(std::exp(x2));
  for (int it = 0; it < 200 && (b - a) > 1e-12; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(std::exp(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(std::exp(x1));
    }
  }
  if (f1 > best.value) best = {std::exp(x1), f1};
  if (f2 > best.value) best = {std::exp(x2), f2};
  const double xm = std::exp(0.5 * (a + b));
  const double fm = f(xm);
  if (fm > best.value) best = {xm, fm};
  return best;
}

}  // namespace semibound
