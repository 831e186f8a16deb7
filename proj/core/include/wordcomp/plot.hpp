#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wordcomp/complexity.hpp"

namespace wordcomp {

// "n,value" rows; stabilization warnings go into leading '#' comments.
std::string profile_csv(const ComplexityProfile& p);

struct PlotSeries {
  std::string name;
  std::vector<std::int64_t> values;  // indexed by n
};

// Self-contained SVG step plot of the series (no external assets).
std::string step_plot_svg(const std::string& title, std::span<const PlotSeries> series,
                          unsigned width = 880, unsigned height = 520);

}  // namespace wordcomp
