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
#ifndef TWINOPT_TOOLS_SVG_CHART_H_
#define TWINOPT_TOOLS_SVG_CHART_H_

#include <string>
#include <vector>

namespace twinopt::cli {

struct Series {
  std::string label;
  // One value per x position; NaN leaves a gap.
  std::vector<double> y;
};

struct Panel {
  std::string title;
  std::vector<Series> series;
};

// Side-by-side line charts sharing categorical x positions.
std::string render_panels(const std::string& x_label,
                          const std::vector<std::string>& x_ticks,
                          const std::vector<Panel>& panels);

}  // namespace twinopt::cli

#endif  // TWINOPT_TOOLS_SVG_CHART_H_
