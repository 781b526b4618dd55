#include "chunkorder/svg.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "chunkorder/corpus_stats.hpp"

namespace chunkorder {

namespace {

std::string rgb(double t, int r0, int g0, int b0, int r1, int g1, int b1) {
  auto mix = [t](int a, int b) {
    return std::to_string(int(std::lround(a + (b - a) * t)));
  };
  return "rgb(" + mix(r0, r1) + "," + mix(g0, g1) + "," + mix(b0, b1) + ")";
}

std::string num(double v) { return format_fixed(v, 2); }

const std::array<const char*, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

std::string transitions_heatmap_svg(const TransitionMatrix& m, int prob_decimals) {
  constexpr int cell = 64;
  constexpr int left = 110;
  constexpr int top = 50;
  const int width = left + kFcCount * cell + 20;
  const int height = top + kFcCount * cell + 20;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
  svg += "<style>text{font-family:sans-serif;}</style>\n";
  svg += "<text x=\"8\" y=\"16\" font-size=\"12\">P(next | current)</text>\n";

  for (int col = 0; col < kFcCount; ++col) {
    const int x = left + col * cell + cell / 2;
    svg += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(top - 8) +
           "\" font-size=\"10\" text-anchor=\"middle\">" +
           std::string(to_string(functional_labels()[col])) + "</text>\n";
  }
  for (int row = 0; row < kFcCount; ++row) {
    const int y = top + row * cell + cell / 2 + 4;
    svg += "<text x=\"" + std::to_string(left - 8) + "\" y=\"" + std::to_string(y) +
           "\" font-size=\"10\" text-anchor=\"end\">" +
           std::string(to_string(functional_labels()[row])) + "</text>\n";
    for (int col = 0; col < kFcCount; ++col) {
      const int x = left + col * cell;
      const int cy = top + row * cell;
      std::string fill;
      if (!m.row_defined[std::size_t(row)]) {
        fill = "#eeeeee";
      } else {
        fill = rgb(m.probs(row, col), 255, 255, 255, 31, 119, 180);
      }
      svg += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(cy) +
             "\" width=\"" + std::to_string(cell) + "\" height=\"" + std::to_string(cell) +
             "\" fill=\"" + fill + "\" stroke=\"#ffffff\"/>\n";
      if (m.row_defined[std::size_t(row)]) {
        const double p = m.probs(row, col);
        const char* color = p > 0.5 ? "#ffffff" : "#000000";
        svg += "<text x=\"" + std::to_string(x + cell / 2) + "\" y=\"" +
               std::to_string(cy + cell / 2 + 4) +
               "\" font-size=\"11\" text-anchor=\"middle\" fill=\"" + color + "\">" +
               format_fixed(p, prob_decimals) + "</text>\n";
      }
    }
  }
  svg += "</svg>\n";
  return svg;
}

std::string projection_scatter_svg(const std::vector<std::string>& ids,
                                   const std::vector<std::pair<double, double>>& points,
                                   const std::vector<std::string>& color_tags) {
  constexpr int width = 640, height = 480, margin = 48;

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  if (!points.empty()) {
    min_x = max_x = points[0].first;
    min_y = max_y = points[0].second;
    for (const auto& [x, y] : points) {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  const double span_x = max_x - min_x > 0 ? max_x - min_x : 1.0;
  const double span_y = max_y - min_y > 0 ? max_y - min_y : 1.0;
  auto sx = [&](double x) {
    return margin + (x - min_x) / span_x * (width - 2 * margin - 120);
  };
  auto sy = [&](double y) {
    return height - margin - (y - min_y) / span_y * (height - 2 * margin);
  };

  std::map<std::string, std::size_t> tag_color;
  for (const std::string& t : color_tags)
    tag_color.emplace(t, tag_color.size() % kPalette.size());

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
  svg += "<style>text{font-family:sans-serif;}</style>\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
         std::to_string(height) + "\" fill=\"#ffffff\"/>\n";

  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string& tag = i < color_tags.size() ? color_tags[i] : "";
    const char* color = kPalette[tag_color.count(tag) ? tag_color[tag] : 0];
    svg += "<circle cx=\"" + num(sx(points[i].first)) + "\" cy=\"" +
           num(sy(points[i].second)) + "\" r=\"4\" fill=\"" + color +
           "\" fill-opacity=\"0.8\"><title>" + ids[i] + "</title></circle>\n";
  }

  int row = 0;
  for (const auto& [tag, idx] : tag_color) {
    const int y = margin + row * 18;
    svg += "<rect x=\"" + std::to_string(width - 110) + "\" y=\"" + std::to_string(y - 9) +
           "\" width=\"10\" height=\"10\" fill=\"" + std::string(kPalette[idx]) + "\"/>\n";
    svg += "<text x=\"" + std::to_string(width - 95) + "\" y=\"" + std::to_string(y) +
           "\" font-size=\"11\">" + tag + "</text>\n";
    ++row;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace chunkorder
