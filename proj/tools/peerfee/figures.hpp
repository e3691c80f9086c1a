#pragma once

#include <array>
#include <string>
#include <vector>

#include "config.hpp"
#include "csv.hpp"
#include "dataset.hpp"

namespace peerfee::app {

// Panels and series shared by the transit-provider figures.
inline constexpr std::array<double, 3> kRatioPanels = {0.25, 1.0, 4.0};
inline constexpr std::array<double, 5> kVideoRatioSeries = {0.25, 0.5, 1.0, 2.0, 4.0};
// Non-video ratios drawn on the settlement-free curve.
inline constexpr std::array<double, 5> kSettlementRatioSeries = {0.25, 0.5, 1.0, 2.0, 4.0};

// 0, 0.01, ..., 1 computed as i / 100.
std::vector<double> unit_grid();

// Default r' axis of the transit settlement-free curve.
std::vector<double> default_video_ratio_sweep();

inline constexpr int kFirstFigure = 2;
inline constexpr int kLastFigure = 7;

// Data series for figures 2..7. Figure 3 uses cfg.r (default 1); figure 5
// takes its r' axis from an `r_prime` sweep when one is configured.
CsvTable figure_table(int figure, const Dataset& ds, const ScenarioConfig& cfg);

struct PlotSpec {
  std::string title;
  std::string x_column;
  std::string y_column;
  std::vector<std::string> series_columns;  // one polyline per distinct tuple
  std::string x_label;
  std::string y_label;
};

PlotSpec figure_plot(int figure);

}  // namespace peerfee::app
