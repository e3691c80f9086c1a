#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>

namespace peerfee::app {

namespace {

constexpr double kWidth = 760;
constexpr double kHeight = 480;
constexpr double kLeft = 80;
constexpr double kRight = 190;
constexpr double kTop = 40;
constexpr double kBottom = 60;

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

}  // namespace

std::string render_svg(const CsvTable& table, const PlotSpec& spec) {
  const std::size_t xi = table.column(spec.x_column);
  const std::size_t yi = table.column(spec.y_column);
  std::vector<std::size_t> key_cols;
  for (const auto& name : spec.series_columns) key_cols.push_back(table.column(name));

  std::vector<Series> series;
  std::map<std::string, std::size_t> index;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& row : table.rows) {
    if (row[yi].empty()) continue;
    std::string label;
    for (std::size_t k = 0; k < key_cols.size(); ++k) {
      if (k) label += ", ";
      label += spec.series_columns[k] + "=" + row[key_cols[k]];
    }
    auto [it, inserted] = index.emplace(label, series.size());
    if (inserted) series.push_back({label, {}});
    const double x = std::strtod(row[xi].c_str(), nullptr);
    const double y = std::strtod(row[yi].c_str(), nullptr);
    series[it->second].points.emplace_back(x, y);
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (series.empty()) {
    xmin = ymin = 0.0;
    xmax = ymax = 1.0;
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
  auto sy = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
     << escape(spec.title) << "</text>\n";
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = xmin + (xmax - xmin) * i / kTicks;
    const double yv = ymin + (ymax - ymin) * i / kTicks;
    os << "<line x1=\"" << sx(xv) << "\" y1=\"" << kTop + ph << "\" x2=\"" << sx(xv)
       << "\" y2=\"" << kTop + ph + 5 << "\" stroke=\"black\"/>";
    os << "<text x=\"" << sx(xv) << "\" y=\"" << kTop + ph + 18
       << "\" text-anchor=\"middle\">" << format_number(xv) << "</text>\n";
    os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << sy(yv) << "\" x2=\"" << kLeft
       << "\" y2=\"" << sy(yv) << "\" stroke=\"black\"/>";
    os << "<text x=\"" << kLeft - 8 << "\" y=\"" << sy(yv) + 4 << "\" text-anchor=\"end\">"
       << format_number(yv) << "</text>\n";
  }
  if (ymin < 0.0 && ymax > 0.0) {
    os << "<line x1=\"" << kLeft << "\" y1=\"" << sy(0.0) << "\" x2=\"" << kLeft + pw
       << "\" y2=\"" << sy(0.0) << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  }
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 18
     << "\" text-anchor=\"middle\">" << escape(spec.x_label) << "</text>\n";
  os << "<text transform=\"translate(18," << kTop + ph / 2
     << ") rotate(-90)\" text-anchor=\"middle\">" << escape(spec.y_label) << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* colour = kPalette[s % std::size(kPalette)];
    os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[s].points) os << sx(x) << ',' << sy(y) << ' ';
    os << "\"/>\n";
    if (!series[s].label.empty()) {
      const double ly = kTop + 14.0 * static_cast<double>(s) + 8;
      os << "<line x1=\"" << kLeft + pw + 12 << "\" y1=\"" << ly << "\" x2=\"" << kLeft + pw + 32
         << "\" y2=\"" << ly << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>";
      os << "<text x=\"" << kLeft + pw + 36 << "\" y=\"" << ly + 4 << "\" font-size=\"10\">"
         << escape(series[s].label) << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace peerfee::app
