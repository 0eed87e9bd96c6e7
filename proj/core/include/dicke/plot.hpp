#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dicke/record.hpp"

namespace dicke {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
  bool dashed = false;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  int width = 720;
  int height = 480;
};

// Self-contained SVG line chart: one polyline per series, axes with ticks,
// and a legend.
void write_svg(std::ostream& out, const std::vector<Series>& series,
               const PlotSpec& spec);
void emit_svg(const std::vector<Series>& series, const PlotSpec& spec,
              const std::string& path);

// gamma/N against alpha, one series per N; the N = 0 rows become the
// dashed "N = inf" curve.
std::vector<Series> alpha_series(const std::vector<SweepRecord>& records);

}  // namespace dicke
