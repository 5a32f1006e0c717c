#include "singcbf/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "singcbf/csv.hpp"
#include "singcbf/errors.hpp"

namespace singcbf {

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                         "#9467bd", "#8c564b"};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void grow(double v) {
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  void pad() {
    if (!(hi > lo)) {
      lo -= 1.0;
      hi += 1.0;
    }
    const double margin = 0.05 * (hi - lo);
    lo -= margin;
    hi += margin;
  }
};

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<PlotPanel>& panels, int width,
                       int panel_height) {
  if (panels.empty()) throw Error("render_svg: no panels");
  const int height = panel_height * static_cast<int>(panels.size());
  const double ml = 64, mr = 16, mt = 30, mb = 42;  // panel margins

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (size_t p = 0; p < panels.size(); ++p) {
    const PlotPanel& panel = panels[p];
    const double top = static_cast<double>(p) * panel_height;
    const double x0 = ml, x1 = width - mr;
    const double y0 = top + mt, y1 = top + panel_height - mb;

    Range rx, ry;
    for (const auto& s : panel.series) {
      for (double v : s.x) rx.grow(v);
      for (double v : s.y) ry.grow(v);
    }
    if (!std::isfinite(rx.lo) || !std::isfinite(ry.lo)) {
      rx = Range{0.0, 1.0};
      ry = Range{0.0, 1.0};
    }
    rx.pad();
    ry.pad();

    auto px = [&](double v) {
      return x0 + (v - rx.lo) / (rx.hi - rx.lo) * (x1 - x0);
    };
    auto py = [&](double v) {
      return y1 - (v - ry.lo) / (ry.hi - ry.lo) * (y1 - y0);
    };

    svg += "<text x=\"" + format_g9(0.5 * (x0 + x1)) + "\" y=\"" +
           format_g9(top + 16) + "\" text-anchor=\"middle\" font-size=\"13\">" +
           esc(panel.title) + "</text>\n";

    // frame and ticks
    svg += "<rect x=\"" + format_g9(x0) + "\" y=\"" + format_g9(y0) +
           "\" width=\"" + format_g9(x1 - x0) + "\" height=\"" +
           format_g9(y1 - y0) + "\" fill=\"none\" stroke=\"#444\"/>\n";
    const int n_ticks = 5;
    for (int i = 0; i <= n_ticks; ++i) {
      const double fx = rx.lo + (rx.hi - rx.lo) * i / n_ticks;
      const double fy = ry.lo + (ry.hi - ry.lo) * i / n_ticks;
      svg += "<line x1=\"" + format_g9(px(fx)) + "\" y1=\"" + format_g9(y1) +
             "\" x2=\"" + format_g9(px(fx)) + "\" y2=\"" + format_g9(y1 + 4) +
             "\" stroke=\"#444\"/>\n";
      svg += "<text x=\"" + format_g9(px(fx)) + "\" y=\"" + format_g9(y1 + 16) +
             "\" text-anchor=\"middle\">" + format_g9(fx) + "</text>\n";
      svg += "<line x1=\"" + format_g9(x0 - 4) + "\" y1=\"" + format_g9(py(fy)) +
             "\" x2=\"" + format_g9(x0) + "\" y2=\"" + format_g9(py(fy)) +
             "\" stroke=\"#444\"/>\n";
      svg += "<text x=\"" + format_g9(x0 - 6) + "\" y=\"" +
             format_g9(py(fy) + 4) + "\" text-anchor=\"end\">" + format_g9(fy) +
             "</text>\n";
    }
    svg += "<text x=\"" + format_g9(0.5 * (x0 + x1)) + "\" y=\"" +
           format_g9(y1 + 32) + "\" text-anchor=\"middle\">" +
           esc(panel.x_label) + "</text>\n";
    svg += "<text x=\"14\" y=\"" + format_g9(0.5 * (y0 + y1)) +
           "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
           format_g9(0.5 * (y0 + y1)) + ")\">" + esc(panel.y_label) +
           "</text>\n";

    for (size_t s = 0; s < panel.series.size(); ++s) {
      const PlotSeries& series = panel.series[s];
      const char* color = kColors[s % 6];
      std::string pts;
      const size_t n = std::min(series.x.size(), series.y.size());
      for (size_t i = 0; i < n; ++i) {
        if (!pts.empty()) pts += ' ';
        pts += format_g9(px(series.x[i])) + "," + format_g9(py(series.y[i]));
      }
      svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
             "\" stroke-width=\"1.2\" points=\"" + pts + "\"/>\n";
      svg += "<text x=\"" + format_g9(x1 - 8) + "\" y=\"" +
             format_g9(y0 + 14 + 14 * static_cast<double>(s)) +
             "\" text-anchor=\"end\" fill=\"" + color + "\">" +
             esc(series.label) + "</text>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace singcbf
