#pragma once

#include <span>

namespace graphcrit {

struct PearsonResult {
  double r = 0.0;
  /// Either input had zero variance; r is reported as 0.
  bool degenerate = false;
};

/// Pearson correlation of two equally long samples (size >= 2).
PearsonResult pearson(std::span<const double> x, std::span<const double> y);

double mean(std::span<const double> x);

}  // namespace graphcrit
