#include "graphcrit/stats.hpp"

#include <algorithm>
#include <cmath>

#include "graphcrit/error.hpp"

namespace graphcrit {

double mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

PearsonResult pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InputError("pearson: samples differ in length");
  if (x.size() < 2) throw InputError("pearson: need at least two samples");
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  // Relative floor: a series whose spread is pure rounding noise counts as constant.
  const auto flat = [](double ss, double m, std::size_t n) {
    return ss <= 1e-24 * std::max(1.0, m * m) * static_cast<double>(n);
  };
  if (flat(sxx, mx, x.size()) || flat(syy, my, y.size())) return {0.0, true};
  return {std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0), false};
}

}  // namespace graphcrit
