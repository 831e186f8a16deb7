#include "wordcomp/plot.hpp"

#include <algorithm>
#include <limits>

namespace wordcomp {

std::string profile_csv(const ComplexityProfile& p) {
  std::string out = "# kind: " + to_string(p.kind) + "\n";
  if (p.stabilized_upto == std::numeric_limits<std::size_t>::max()) {
    out += "# warning: no value stabilized within the prefix cap\n";
  } else if (p.stabilized_upto + 1 < p.values.size()) {
    out += "# warning: values beyond n=" + std::to_string(p.stabilized_upto) +
           " did not stabilize within the prefix cap\n";
  }
  out += "n,value\n";
  for (std::size_t n = 0; n < p.values.size(); ++n) {
    out += std::to_string(n) + "," + std::to_string(p.values[n]) + "\n";
  }
  return out;
}

std::string step_plot_svg(const std::string& title, std::span<const PlotSeries> series,
                          unsigned width, unsigned height) {
  static const char* kColors[] = {"#1f66ad", "#c23b22", "#3b8f51", "#8457a8",
                                  "#b58a2c", "#3c3c3c"};
  const double ml = 56, mr = 16, mt = 34, mb = 40;
  const double pw = width - ml - mr, ph = height - mt - mb;

  std::size_t points = 0;
  std::int64_t lo = 0, hi = 1;
  bool first = true;
  for (const auto& s : series) {
    points = std::max(points, s.values.size());
    for (std::int64_t v : s.values) {
      if (first) {
        lo = hi = v;
        first = false;
      }
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (points < 2) points = 2;
  if (hi == lo) hi = lo + 1;

  auto fx = [&](double n) { return ml + pw * n / static_cast<double>(points - 1); };
  auto fy = [&](double v) { return mt + ph * (1.0 - (v - lo) / static_cast<double>(hi - lo)); };
  auto num = [](double v) {
    std::string s = std::to_string(v);
    return s.substr(0, s.find('.') + 3);
  };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(width) + "\" height=\"" + std::to_string(height) +
                    "\" viewBox=\"0 0 " + std::to_string(width) + " " +
                    std::to_string(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(ml) + "\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" +
         title + "</text>\n";

  // axes and ticks
  svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(mt + ph) + "\" x2=\"" + num(ml + pw) +
         "\" y2=\"" + num(mt + ph) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(mt) + "\" x2=\"" + num(ml) + "\" y2=\"" +
         num(mt + ph) + "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    double n = (points - 1) * t / 4.0;
    svg += "<text x=\"" + num(fx(n) - 6) + "\" y=\"" + num(mt + ph + 16) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" +
           std::to_string(static_cast<long long>(n)) + "</text>\n";
    double v = lo + (hi - lo) * t / 4.0;
    svg += "<text x=\"" + num(ml - 40) + "\" y=\"" + num(fy(v) + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" +
           std::to_string(static_cast<long long>(v)) + "</text>\n";
  }

  std::size_t ci = 0;
  double legend_y = mt + 4;
  for (const auto& s : series) {
    const char* color = kColors[ci % (sizeof(kColors) / sizeof(kColors[0]))];
    if (!s.values.empty()) {
      std::string path = "M " + num(fx(0)) + " " + num(fy(static_cast<double>(s.values[0])));
      for (std::size_t n = 1; n < s.values.size(); ++n) {
        path += " H " + num(fx(static_cast<double>(n)));
        path += " V " + num(fy(static_cast<double>(s.values[n])));
      }
      svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"1.5\"/>\n";
    }
    svg += "<rect x=\"" + num(ml + pw - 150) + "\" y=\"" + num(legend_y) +
           "\" width=\"12\" height=\"12\" fill=\"" + color + "\"/>\n";
    svg += "<text x=\"" + num(ml + pw - 134) + "\" y=\"" + num(legend_y + 10) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + s.name + "</text>\n";
    legend_y += 18;
    ++ci;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace wordcomp
