#include "peerfee/topology.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <type_traits>
#include <unordered_set>

#include "peerfee/errors.hpp"

namespace peerfee {

IngestError::IngestError(std::string source, std::size_t line, const std::string& what)
    : Error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + what),
      source_(std::move(source)),
      line_(line) {}

namespace {

// Splits one CSV record. Handles double-quoted fields with "" escapes; a
// record never spans lines in either input schema.
std::vector<std::string> split_record(std::string_view line, std::string_view source,
                                      std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && field.empty() && !was_quoted) {
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else {
      field.push_back(c);
    }
  }
  if (quoted) {
    throw IngestError(std::string(source), line_no, "unterminated quoted field");
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <class T>
T parse_number(std::string_view text, std::string_view column, std::string_view source,
               std::size_t line_no) {
  const std::string_view t = trim(text);
  T value{};
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (t.empty() || ec != std::errc() || ptr != last) {
    throw IngestError(std::string(source), line_no,
                      "cannot parse " + std::string(column) + " '" + std::string(text) + "'");
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) {
      throw IngestError(std::string(source), line_no,
                        std::string(column) + " is not finite");
    }
  }
  return value;
}

// Reads the header and yields each data record with its line number.
template <class RowFn>
void read_csv(std::istream& in, std::string_view source,
              const std::vector<std::string_view>& expected_header, RowFn&& on_row) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (trim(line).empty()) continue;

    auto fields = split_record(line, source, line_no);
    if (!have_header) {
      bool ok = fields.size() == expected_header.size();
      for (std::size_t i = 0; ok && i < fields.size(); ++i) {
        ok = trim(fields[i]) == expected_header[i];
      }
      if (!ok) {
        std::string want;
        for (auto h : expected_header) want += (want.empty() ? "" : ",") + std::string(h);
        throw IngestError(std::string(source), line_no, "expected header '" + want + "'");
      }
      have_header = true;
      continue;
    }
    if (fields.size() != expected_header.size()) {
      throw IngestError(std::string(source), line_no,
                        "expected " + std::to_string(expected_header.size()) +
                            " fields, found " + std::to_string(fields.size()));
    }
    on_row(fields, line_no);
  }
  if (!have_header) {
    throw IngestError(std::string(source), 0, "missing header row");
  }
}

GeoPoint parse_point(const std::string& lon, const std::string& lat, std::string_view source,
                     std::size_t line_no) {
  GeoPoint p{parse_number<double>(lon, "longitude", source, line_no),
             parse_number<double>(lat, "latitude", source, line_no)};
  if (p.longitude < -180.0 || p.longitude > 180.0) {
    throw IngestError(std::string(source), line_no, "longitude " + lon + " outside [-180, 180]");
  }
  if (p.latitude < -90.0 || p.latitude > 90.0) {
    throw IngestError(std::string(source), line_no, "latitude " + lat + " outside [-90, 90]");
  }
  return p;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError(path.string(), 0, "cannot open file");
  return in;
}

}  // namespace

CountyTable::CountyTable(std::vector<County> counties) : counties_(std::move(counties)) {
  if (counties_.empty()) throw ContractError("county table is empty");
  std::unordered_set<std::string_view> ids;
  for (const auto& c : counties_) {
    if (!ids.insert(c.id).second) throw ContractError("duplicate county id '" + c.id + "'");
    if (c.population < 0) throw ContractError("county '" + c.id + "' has negative population");
    if (!is_valid(c.center)) throw ContractError("county '" + c.id + "' has invalid coordinates");
    if (c.population > std::numeric_limits<std::int64_t>::max() - total_population_) {
      throw ContractError("total population overflows");
    }
    total_population_ += c.population;
  }
  if (total_population_ == 0) throw ContractError("county table has zero total population");
}

CountyTable load_counties(std::istream& in, std::string_view source) {
  static const std::vector<std::string_view> header = {
      "id", "name", "longitude", "latitude", "population", "land_area_km2"};
  std::vector<County> counties;
  std::unordered_set<std::string> seen;
  read_csv(in, source, header, [&](const std::vector<std::string>& f, std::size_t line_no) {
    County c;
    c.id = std::string(trim(f[0]));
    if (c.id.empty()) throw IngestError(std::string(source), line_no, "empty county id");
    if (!seen.insert(c.id).second) {
      throw IngestError(std::string(source), line_no, "duplicate county id '" + c.id + "'");
    }
    c.name = f[1];
    c.center = parse_point(f[2], f[3], source, line_no);
    c.population = parse_number<std::int64_t>(f[4], "population", source, line_no);
    if (c.population < 0) {
      throw IngestError(std::string(source), line_no, "negative population");
    }
    c.land_area_km2 = parse_number<double>(f[5], "land_area_km2", source, line_no);
    if (c.land_area_km2 < 0.0) {
      throw IngestError(std::string(source), line_no, "negative land area");
    }
    counties.push_back(std::move(c));
  });
  if (counties.empty()) throw IngestError(std::string(source), 0, "no county records");
  try {
    return CountyTable(std::move(counties));
  } catch (const ContractError& e) {
    throw IngestError(std::string(source), 0, e.what());
  }
}

CountyTable load_counties(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return load_counties(in, path.string());
}

IxpCatalog::IxpCatalog(std::vector<Ixp> ixps) : ixps_(std::move(ixps)) {
  if (ixps_.empty()) throw ContractError("IXP catalog is empty");
  for (std::size_t i = 0; i < ixps_.size(); ++i) {
    if (ixps_[i].id.value != i) {
      throw ContractError("IXP ids must be dense and ordered; entry " + std::to_string(i) +
                          " has id " + std::to_string(ixps_[i].id.value));
    }
    if (!is_valid(ixps_[i].location)) {
      throw ContractError("IXP '" + ixps_[i].name + "' has invalid coordinates");
    }
  }
}

IxpCatalog IxpCatalog::us_default() {
  struct Entry {
    const char* name;
    double lon;
    double lat;
  };
  static constexpr Entry kEntries[] = {
      {"Ashburn", -77.4874, 39.0438},     {"Chicago", -87.6298, 41.8781},
      {"Dallas", -96.7970, 32.7767},      {"San Jose", -121.8863, 37.3382},
      {"Los Angeles", -118.2437, 34.0522}, {"New York", -74.0060, 40.7128},
      {"Seattle", -122.3321, 47.6062},    {"Miami", -80.1918, 25.7617},
      {"Atlanta", -84.3880, 33.7490},     {"Denver", -104.9903, 39.7392},
      {"Boston", -71.0589, 42.3601},      {"Minneapolis", -93.2650, 44.9778},
  };
  std::vector<Ixp> ixps;
  for (std::uint32_t i = 0; i < std::size(kEntries); ++i) {
    ixps.push_back({IxpId{i}, kEntries[i].name, {kEntries[i].lon, kEntries[i].lat}});
  }
  return IxpCatalog(std::move(ixps));
}

const Ixp& IxpCatalog::operator[](IxpId id) const {
  if (id.value >= ixps_.size()) {
    throw ContractError("IXP id " + std::to_string(id.value) + " not in catalog");
  }
  return ixps_[id.value];
}

IxpCatalog load_ixp_catalog(std::istream& in, std::string_view source) {
  static const std::vector<std::string_view> header = {"id", "name", "longitude", "latitude"};
  std::vector<Ixp> ixps;
  read_csv(in, source, header, [&](const std::vector<std::string>& f, std::size_t line_no) {
    const auto id = parse_number<std::uint32_t>(f[0], "id", source, line_no);
    if (id != ixps.size()) {
      throw IngestError(std::string(source), line_no,
                        "expected id " + std::to_string(ixps.size()) + ", found " +
                            std::to_string(id));
    }
    ixps.push_back({IxpId{id}, f[1], parse_point(f[2], f[3], source, line_no)});
  });
  if (ixps.empty()) throw IngestError(std::string(source), 0, "no IXP records");
  return IxpCatalog(std::move(ixps));
}

IxpCatalog load_ixp_catalog(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return load_ixp_catalog(in, path.string());
}

PeeringSet::PeeringSet(std::shared_ptr<const IxpCatalog> catalog, std::vector<IxpId> members)
    : catalog_(std::move(catalog)), members_(std::move(members)) {
  if (!catalog_) throw ContractError("peering set needs a catalog");
  if (members_.empty()) throw ContractError("peering set is empty");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw ContractError("peering set lists an IXP twice");
  }
  if (members_.back().value >= catalog_->size()) {
    throw ContractError("IXP id " + std::to_string(members_.back().value) +
                        " not in catalog of size " + std::to_string(catalog_->size()));
  }
}

PeeringSet PeeringSet::full(std::shared_ptr<const IxpCatalog> catalog) {
  const std::size_t m = catalog ? catalog->size() : 0;
  return prefix(std::move(catalog), m);
}

PeeringSet PeeringSet::prefix(std::shared_ptr<const IxpCatalog> catalog, std::size_t n) {
  if (!catalog) throw ContractError("peering set needs a catalog");
  if (n < 1 || n > catalog->size()) {
    throw ContractError("peering size " + std::to_string(n) + " outside [1, " +
                        std::to_string(catalog->size()) + "]");
  }
  std::vector<IxpId> ids;
  for (std::uint32_t i = 0; i < n; ++i) ids.push_back(IxpId{i});
  return PeeringSet(std::move(catalog), std::move(ids));
}

bool PeeringSet::contains(IxpId id) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), id);
}

IxpId nearest_ixp(GeoPoint point, const PeeringSet& peering) {
  const auto& catalog = peering.catalog();
  IxpId best = peering.members().front();
  double best_km = great_circle_km(point, catalog[best].location);
  for (IxpId id : peering.members().subspan(1)) {
    const double d = great_circle_km(point, catalog[id].location);
    if (d < best_km) {
      best_km = d;
      best = id;
    }
  }
  return best;
}

std::vector<IxpId> assign_counties(const PeeringSet& peering, const CountyTable& table) {
  std::vector<IxpId> out;
  out.reserve(table.size());
  for (const auto& c : table.counties()) out.push_back(nearest_ixp(c.center, peering));
  return out;
}

std::vector<double> region_weights(const PeeringSet& peering, const CountyTable& table) {
  std::vector<std::int64_t> population(peering.catalog().size(), 0);
  for (const auto& c : table.counties()) {
    population[nearest_ixp(c.center, peering).value] += c.population;
  }
  const double total = static_cast<double>(table.total_population());
  std::vector<double> weights(population.size(), 0.0);
  for (std::size_t i = 0; i < population.size(); ++i) {
    weights[i] = static_cast<double>(population[i]) / total;
  }
  return weights;
}

double region_weight(IxpId g, const PeeringSet& peering, const CountyTable& table) {
  if (!peering.contains(g)) {
    throw ContractError("IXP id " + std::to_string(g.value) + " is not a peering member");
  }
  return region_weights(peering, table)[g.value];
}

}  // namespace peerfee
