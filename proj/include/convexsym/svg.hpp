#pragma once

#include <string>

#include "convexsym/harness.hpp"

namespace csym {

struct PlotOptions {
  bool log_x = false;
  bool log_y = true;
  int width = 640;
  int height = 420;
};

// Line plot of a series report as a standalone SVG document. Throws
// InvalidInput when the series is empty or has non-positive values on a log
// axis.
std::string series_svg(const PropertyReport& series, const PlotOptions& opts);

}  // namespace csym
