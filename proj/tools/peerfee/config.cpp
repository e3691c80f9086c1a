#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

namespace peerfee::app {

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys = {
      "county-file", "ixp-file", "peering-n", "peering-ids", "v-u",    "v-d",
      "v-v",         "r",        "r-prime",   "x",           "x-d",    "c-b",
      "cdn-cost",    "scenario", "figure",    "kind",        "sweep",  "output",
      "format",      "svg",
  };
  return keys;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string normalize_key(std::string_view key) {
  std::string k(key);
  std::replace(k.begin(), k.end(), '_', '-');
  return k;
}

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw UsageError("--" + key + ": expected a number, got '" + text + "'");
  }
  return v;
}

std::uint64_t to_unsigned(const std::string& key, std::string_view text) {
  text = trim(text);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("--" + key + ": expected a non-negative integer, got '" + std::string(text) +
                     "'");
  }
  return v;
}

bool to_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw UsageError("--" + key + ": expected true or false, got '" + text + "'");
}

}  // namespace

std::map<std::string, std::string> parse_config_text(std::istream& in, std::string_view source) {
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t line_no = 0;
  const auto& keys = config_keys();
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos) throw UsageError(where + ": expected key = value");
    const std::string key = normalize_key(trim(view.substr(0, eq)));
    std::string_view value = trim(view.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw UsageError(where + ": unknown key '" + key + "'");
    }
    if (out.contains(key)) throw UsageError(where + ": key '" + key + "' given twice");
    out.emplace(key, std::string(value));
  }
  return out;
}

std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path.string() + "'");
  return parse_config_text(in, path.string());
}

ScenarioConfig build_config(const std::map<std::string, std::string>& values,
                            const std::optional<std::filesystem::path>& data_dir) {
  ScenarioConfig cfg;
  auto get = [&](const char* key) -> const std::string* {
    auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
  };
  auto number = [&](const char* key, std::optional<double>& field) {
    if (const auto* v = get(key)) field = to_double(key, *v);
  };

  if (const auto* v = get("county-file")) {
    cfg.county_file = *v;
  } else if (data_dir) {
    cfg.county_file = *data_dir / kDefaultCountyFile;
  }
  if (const auto* v = get("ixp-file")) cfg.ixp_file = *v;
  if (const auto* v = get("peering-n")) {
    const auto n = to_unsigned("peering-n", *v);
    if (n < 1) throw UsageError("--peering-n must be >= 1");
    cfg.peering_n = static_cast<std::size_t>(n);
  }
  if (const auto* v = get("peering-ids")) {
    std::vector<std::uint32_t> ids;
    std::string_view rest = *v;
    while (true) {
      const auto comma = rest.find(',');
      const auto id = to_unsigned("peering-ids", rest.substr(0, comma));
      if (id > UINT32_MAX) throw UsageError("--peering-ids: id out of range");
      ids.push_back(static_cast<std::uint32_t>(id));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    cfg.peering_ids = std::move(ids);
  }
  if (cfg.peering_n && cfg.peering_ids) {
    throw UsageError("give either --peering-n or --peering-ids, not both");
  }

  number("v-u", cfg.v_u);
  number("v-d", cfg.v_d);
  number("v-v", cfg.v_v);
  number("r", cfg.r);
  number("r-prime", cfg.r_prime);
  number("x", cfg.x);
  number("x-d", cfg.x_d);
  number("cdn-cost", cfg.cdn_cost);
  if (const auto* v = get("c-b")) cfg.c_b = to_double("c-b", *v);
  if (!(cfg.c_b > 0.0)) throw UsageError("--c-b must be > 0");

  const bool volumes = cfg.v_u || cfg.v_d || cfg.v_v;
  const bool ratios = cfg.r || cfg.r_prime;
  if (volumes && ratios) {
    throw UsageError("give traffic as volumes (--v-u/--v-d/--v-v) or ratios (--r/--r-prime), "
                     "not both");
  }

  if (const auto* v = get("scenario")) {
    if (*v != "isp" && *v != "tp" && *v != "tp-hot" && *v != "cp") {
      throw UsageError("--scenario must be one of isp, tp, tp-hot, cp; got '" + *v + "'");
    }
    cfg.scenario = *v;
  }
  if (const auto* v = get("figure")) {
    const auto id = to_unsigned("figure", *v);
    if (id < 2 || id > 7) throw UsageError("--figure must be 2..7; got '" + *v + "'");
    cfg.figure = static_cast<int>(id);
  }
  if (const auto* v = get("kind")) {
    if (*v != "tp" && *v != "cp") throw UsageError("--kind must be tp or cp; got '" + *v + "'");
    cfg.kind = *v;
  }
  if (const auto* v = get("sweep")) cfg.sweep = parse_sweep(*v);
  if (const auto* v = get("output")) cfg.output_dir = *v;
  if (const auto* v = get("format")) {
    if (*v == "csv") cfg.format = OutputFormat::csv;
    else if (*v == "json") cfg.format = OutputFormat::json;
    else throw UsageError("--format must be csv or json; got '" + *v + "'");
  }
  if (const auto* v = get("svg")) cfg.svg = to_bool("svg", *v);
  return cfg;
}

}  // namespace peerfee::app
