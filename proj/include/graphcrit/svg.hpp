#pragma once

#include <string>
#include <vector>

#include "graphcrit/report.hpp"

namespace graphcrit::svg {

struct LineSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct ScatterPoint {
  double x = 0.0;
  double y = 0.0;
  std::size_t group = 0;
};

/// Plain SVG documents with the metadata block in a leading comment.
std::string line_chart(const Metadata& meta, const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<LineSeries>& series);
std::string scatter(const Metadata& meta, const std::string& title, const std::string& x_label,
                    const std::string& y_label, const std::vector<ScatterPoint>& points);
std::string histogram(const Metadata& meta, const std::string& title, const std::string& x_label,
                      const std::vector<double>& bin_edges, const std::vector<std::size_t>& counts);

}  // namespace graphcrit::svg
