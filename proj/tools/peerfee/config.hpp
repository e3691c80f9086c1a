#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sweep.hpp"

namespace peerfee::app {

// Bad or missing command-line / config input. Maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

// Keys accepted in config files and as --long-flags. Config keys may use
// '_' in place of '-'.
const std::vector<std::string_view>& config_keys();

struct ScenarioConfig {
  std::filesystem::path county_file;
  std::optional<std::filesystem::path> ixp_file;
  std::optional<std::size_t> peering_n;
  std::optional<std::vector<std::uint32_t>> peering_ids;

  std::optional<double> v_u;
  std::optional<double> v_d;
  std::optional<double> v_v;
  std::optional<double> r;
  std::optional<double> r_prime;

  std::optional<double> x;
  std::optional<double> x_d;
  double c_b = 1.0;
  std::optional<double> cdn_cost;

  std::optional<std::string> scenario;  // fee: isp | tp | tp-hot | cp
  std::optional<int> figure;            // figure: 2..7
  std::optional<std::string> kind;      // settlement-curve: tp | cp
  std::optional<SweepSpec> sweep;

  std::filesystem::path output_dir;  // empty: write to stdout
  OutputFormat format = OutputFormat::csv;
  bool svg = false;
};

// Flat `key = value` lines; '#' starts a comment; blank lines ignored.
// Surrounding double quotes on a value are stripped. Throws UsageError.
std::map<std::string, std::string> parse_config_text(std::istream& in,
                                                     std::string_view source = "<config>");
std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path);

// Converts raw key/value text into a config; `data_dir` supplies the default
// county file when none is given. Throws UsageError naming the bad key.
ScenarioConfig build_config(const std::map<std::string, std::string>& values,
                            const std::optional<std::filesystem::path>& data_dir);

// Name of the environment variable holding the default data directory.
inline constexpr const char* kDataDirEnv = "PEERFEE_DATA_DIR";
inline constexpr const char* kDefaultCountyFile = "us_counties.csv";

}  // namespace peerfee::app
