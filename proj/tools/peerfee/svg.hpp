#pragma once

#include <string>

#include "csv.hpp"
#include "figures.hpp"

namespace peerfee::app {

// Standalone SVG line chart of a figure table. Rows with an empty y value
// are skipped. Pure rendering: no values are computed here.
std::string render_svg(const CsvTable& table, const PlotSpec& spec);

}  // namespace peerfee::app
