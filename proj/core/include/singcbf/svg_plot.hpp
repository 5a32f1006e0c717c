#pragma once

#include <string>
#include <vector>

namespace singcbf {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotPanel {
  std::string title;
  std::string x_label;  // carries units
  std::string y_label;
  std::vector<PlotSeries> series;
};

/// Standalone SVG with the panels stacked vertically: axes, ticks,
/// polylines and a small legend. No external plotting dependency.
std::string render_svg(const std::vector<PlotPanel>& panels, int width = 760,
                       int panel_height = 260);

}  // namespace singcbf
