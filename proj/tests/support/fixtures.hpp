#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "peerfee/demand.hpp"
#include "peerfee/geo.hpp"
#include "peerfee/topology.hpp"

namespace peerfee::testing {

inline std::filesystem::path data_dir() { return PEERFEE_TEST_DATA_DIR; }
inline std::filesystem::path us_county_file() { return data_dir() / "us_counties.csv"; }

// Column sum of the shipped county file, computed outside the build with
// awk -F, 'NR>1{s+=$5} END{print s}' data/us_counties.csv
inline constexpr std::int64_t kUsTotalPopulation = 327345959;
inline constexpr std::size_t kUsCountyCount = 3108;

inline const CountyTable& us_counties() {
  static const CountyTable table = load_counties(us_county_file());
  return table;
}

inline std::shared_ptr<const IxpCatalog> us_catalog() {
  static const auto catalog = std::make_shared<const IxpCatalog>(IxpCatalog::us_default());
  return catalog;
}

inline County make_county(std::string id, double lon, double lat, std::int64_t pop) {
  return County{std::move(id), "c", GeoPoint{lon, lat}, pop, 0.0};
}

// Every k-th county of `table`, evenly strided to `count` rows.
inline CountyTable stride_subsample(const CountyTable& table, std::size_t count) {
  std::vector<County> rows;
  rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) rows.push_back(table[i * table.size() / count]);
  return CountyTable(std::move(rows));
}

// Two IXPs on the equator `km` apart, one unit-population county on each.
struct LineGeography {
  std::shared_ptr<const IxpCatalog> catalog;
  CountyTable table;

  explicit LineGeography(double km = 1000.0)
      : catalog(std::make_shared<const IxpCatalog>(std::vector<Ixp>{
            {IxpId{0}, "west", GeoPoint{0.0, 0.0}},
            {IxpId{1}, "east", GeoPoint{east_longitude(km), 0.0}},
        })),
        table({make_county("w", 0.0, 0.0, 1), make_county("e", east_longitude(km), 0.0, 1)}) {}

  static double east_longitude(double km) {
    return km / kEarthRadiusKm * 180.0 / std::numbers::pi;
  }
};

// Random counties scattered over the contiguous-US bounding box.
inline CountyTable random_counties(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> lon(-124.0, -67.0);
  std::uniform_real_distribution<double> lat(25.0, 49.0);
  std::uniform_int_distribution<std::int64_t> pop(0, 1'000'000);
  std::vector<County> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(make_county("r" + std::to_string(i), lon(rng), lat(rng), pop(rng)));
  }
  rows.front().population += 1;  // never an all-zero table
  return CountyTable(std::move(rows));
}

// Random non-empty subset of the catalog ids.
inline PeeringSet random_peering(std::mt19937_64& rng,
                                 const std::shared_ptr<const IxpCatalog>& catalog) {
  std::vector<IxpId> ids;
  std::bernoulli_distribution pick(0.5);
  for (std::uint32_t i = 0; i < catalog->size(); ++i) {
    if (pick(rng)) ids.push_back(IxpId{i});
  }
  if (ids.empty()) {
    ids.push_back(IxpId{static_cast<std::uint32_t>(rng() % catalog->size())});
  }
  return PeeringSet(catalog, std::move(ids));
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace peerfee::testing
