#include "pmod/render_svg.hpp"

#include <algorithm>
#include <sstream>

namespace pmod {

namespace {

constexpr const char* kPalette[] = {
    "#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee",
    "#aa3377", "#bbbbbb", "#222255", "#225555", "#552222",
};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);
constexpr int kCell = 12;  // pixels per grid unit

}  // namespace

std::string render_svg(const std::vector<std::pair<std::string, barcode>>& modules) {
  coord_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool any = false;
  for (const auto& [name, bars] : modules) {
    for (const auto& bar : bars) {
      if (bar.dim() != 2) throw error("SVG rendering is 2-D only");
      if (!any) {
        xmin = bar.bbox_min().xs[0];
        xmax = bar.bbox_max().xs[0];
        ymin = bar.bbox_min().xs[1];
        ymax = bar.bbox_max().xs[1];
        any = true;
      } else {
        xmin = std::min(xmin, bar.bbox_min().xs[0]);
        xmax = std::max(xmax, bar.bbox_max().xs[0]);
        ymin = std::min(ymin, bar.bbox_min().xs[1]);
        ymax = std::max(ymax, bar.bbox_max().xs[1]);
      }
    }
  }
  if (!any) {
    xmin = ymin = 0;
    xmax = ymax = 4;
  }

  // One cell of margin; y flipped so the poset order points up-right.
  const coord_t w = (xmax - xmin + 3) * kCell;
  std::size_t total_bars = 0;
  for (const auto& [name, bars] : modules) total_bars += bars.size();
  const coord_t legend_h = static_cast<coord_t>(16 * (total_bars + 1));
  const coord_t h = (ymax - ymin + 3) * kCell + legend_h;
  auto px = [&](coord_t x) { return (x - xmin + 1) * kCell; };
  auto py = [&](coord_t y) { return (ymax - y + 1) * kCell; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
      << "\" height=\"" << h << "\">\n";
  svg << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";

  // Axes through the origin of the drawn window.
  svg << "<line x1=\"" << px(xmin) << "\" y1=\"" << py(ymin) + kCell << "\" x2=\"" << px(xmax) + kCell
      << "\" y2=\"" << py(ymin) + kCell << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  svg << "<line x1=\"" << px(xmin) << "\" y1=\"" << py(ymin) + kCell << "\" x2=\"" << px(xmin)
      << "\" y2=\"" << py(ymax) << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

  std::size_t color_idx = 0;
  coord_t legend_y = (ymax - ymin + 3) * kCell;
  for (const auto& [name, bars] : modules) {
    for (std::size_t b = 0; b < bars.size(); ++b) {
      const char* color = kPalette[color_idx % kPaletteSize];
      for (const auto& p : bars[b].points()) {
        svg << "<rect x=\"" << px(p.xs[0]) << "\" y=\"" << py(p.xs[1]) << "\" width=\"" << kCell
            << "\" height=\"" << kCell << "\" fill=\"" << color
            << "\" fill-opacity=\"0.55\" stroke=\"" << color << "\" stroke-width=\"0.5\"/>\n";
      }
      svg << "<rect x=\"4\" y=\"" << legend_y + 4 << "\" width=\"10\" height=\"10\" fill=\""
          << color << "\"/>\n";
      svg << "<text x=\"18\" y=\"" << legend_y + 13 << "\" font-size=\"11\" font-family=\"monospace\">"
          << name << "[" << b << "] (" << bars[b].size() << " cells)</text>\n";
      legend_y += 16;
      ++color_idx;
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace pmod
