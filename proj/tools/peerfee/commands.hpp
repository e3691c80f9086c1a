#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"
#include "csv.hpp"
#include "dataset.hpp"
#include "peerfee/economics.hpp"

namespace peerfee::app {

// Writes named artifacts into a directory, or to a stream when no directory
// is configured.
class Output {
 public:
  Output(std::filesystem::path dir, std::ostream& fallback);

  bool to_directory() const noexcept { return !dir_.empty(); }
  void emit(const std::string& filename, const std::string& content);
  const std::vector<std::filesystem::path>& written() const noexcept { return written_; }

 private:
  std::filesystem::path dir_;
  std::ostream* fallback_;
  std::vector<std::filesystem::path> written_;
};

// One configuration per sweep point (or just `cfg` without a sweep), in
// sweep order.
std::vector<ScenarioConfig> expand_sweep(const ScenarioConfig& cfg);

// Fee report for cfg.scenario; throws UsageError naming missing fields.
FeeReport compute_fee(const ScenarioConfig& cfg, const Dataset& ds);

CsvTable distances_table(const ScenarioConfig& cfg, const Dataset& ds);
CsvTable fee_table(const std::vector<FeeReport>& reports);
std::string fee_json(const std::vector<FeeReport>& reports);
CsvTable settlement_table(const ScenarioConfig& cfg, const Dataset& ds);
CsvTable cdn_table(const ScenarioConfig& cfg, const Dataset& ds);

void cmd_distances(const ScenarioConfig& cfg, const Dataset& ds, Output& out);
void cmd_fee(const ScenarioConfig& cfg, const Dataset& ds, Output& out);
void cmd_figure(const ScenarioConfig& cfg, const Dataset& ds, Output& out);
void cmd_settlement_curve(const ScenarioConfig& cfg, const Dataset& ds, Output& out);
void cmd_cdn_breakeven(const ScenarioConfig& cfg, const Dataset& ds, Output& out);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Full command-line entry point. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace peerfee::app
