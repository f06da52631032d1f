// Copyright 2026 The TwinOpt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "svg_chart.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace twinopt::cli {

namespace {

constexpr double kPanelWidth = 400;
constexpr double kHeight = 320;
constexpr double kLeft = 70, kRight = 15, kTop = 35, kBottom = 55;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                   "#ff7f0e", "#9467bd", "#8c564b"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string label(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

std::string escape(const std::string& s) {
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

std::string render_panels(const std::string& x_label,
                          const std::vector<std::string>& x_ticks,
                          const std::vector<Panel>& panels) {
  const double width = kPanelWidth * static_cast<double>(panels.size());
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    num(width) + "\" height=\"" + num(kHeight) +
                    "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const double plot_w = kPanelWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const std::size_t nx = x_ticks.size();
  auto x_at = [&](double offset, std::size_t i) {
    return offset + kLeft +
           (nx <= 1 ? plot_w / 2 : plot_w * static_cast<double>(i) /
                                       static_cast<double>(nx - 1));
  };

  for (std::size_t p = 0; p < panels.size(); ++p) {
    const double offset = kPanelWidth * static_cast<double>(p);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& s : panels[p].series) {
      for (double y : s.y) {
        if (std::isnan(y)) continue;
        lo = std::min(lo, y);
        hi = std::max(hi, y);
      }
    }
    if (!(lo <= hi)) lo = 0, hi = 1;
    if (lo == hi) lo -= 0.5, hi += 0.5;
    auto y_at = [&](double y) { return kTop + plot_h * (hi - y) / (hi - lo); };

    svg += "<text x=\"" + num(offset + kPanelWidth / 2) +
           "\" y=\"20\" text-anchor=\"middle\" font-size=\"13\">" +
           escape(panels[p].title) + "</text>\n";
    svg += "<rect x=\"" + num(offset + kLeft) + "\" y=\"" + num(kTop) +
           "\" width=\"" + num(plot_w) + "\" height=\"" + num(plot_h) +
           "\" fill=\"none\" stroke=\"#444\"/>\n";
    for (int t = 0; t <= 4; ++t) {
      const double y = lo + (hi - lo) * t / 4.0;
      svg += "<text x=\"" + num(offset + kLeft - 5) + "\" y=\"" +
             num(y_at(y) + 4) + "\" text-anchor=\"end\">" + label(y) +
             "</text>\n";
    }
    for (std::size_t i = 0; i < nx; ++i) {
      svg += "<text x=\"" + num(x_at(offset, i)) + "\" y=\"" +
             num(kTop + plot_h + 15) + "\" text-anchor=\"middle\">" +
             escape(x_ticks[i]) + "</text>\n";
    }
    svg += "<text x=\"" + num(offset + kLeft + plot_w / 2) + "\" y=\"" +
           num(kHeight - 18) + "\" text-anchor=\"middle\">" + escape(x_label) +
           "</text>\n";

    for (std::size_t s = 0; s < panels[p].series.size(); ++s) {
      const auto& series = panels[p].series[s];
      const char* color = kColors[s % std::size(kColors)];
      std::string points;
      for (std::size_t i = 0; i < series.y.size() && i < nx; ++i) {
        if (std::isnan(series.y[i])) continue;
        points += num(x_at(offset, i)) + "," + num(y_at(series.y[i])) + " ";
        svg += "<circle cx=\"" + num(x_at(offset, i)) + "\" cy=\"" +
               num(y_at(series.y[i])) + "\" r=\"2.5\" fill=\"" + color +
               "\"/>\n";
      }
      svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
             "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
      const double ly = kTop + 12 + 14 * static_cast<double>(s);
      svg += "<text x=\"" + num(offset + kLeft + 8) + "\" y=\"" + num(ly) +
             "\" fill=\"" + color + "\">" + escape(series.label) + "</text>\n";
    }
  }
  return svg + "</svg>\n";
}

}  // namespace twinopt::cli
