#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "peerfee/geo.hpp"

namespace peerfee {

// An access network, represented by its county.
struct County {
  std::string id;  // e.g. a five-digit FIPS code
  std::string name;
  GeoPoint center;
  std::int64_t population = 0;
  double land_area_km2 = 0.0;  // carried through ingestion, unused by the model
};

// End-user location distribution: counties weighted by population.
class CountyTable {
 public:
  // Throws ContractError on duplicate ids, negative populations, invalid
  // coordinates, an empty table or zero total population.
  explicit CountyTable(std::vector<County> counties);

  std::span<const County> counties() const noexcept { return counties_; }
  std::size_t size() const noexcept { return counties_.size(); }
  const County& operator[](std::size_t i) const { return counties_[i]; }
  std::int64_t total_population() const noexcept { return total_population_; }

 private:
  std::vector<County> counties_;
  std::int64_t total_population_ = 0;
};

// Reads the county CSV (`id,name,longitude,latitude,population,land_area_km2`
// with a header row). Throws IngestError naming the offending line.
CountyTable load_counties(std::istream& in, std::string_view source = "<stream>");
CountyTable load_counties(const std::filesystem::path& path);

struct IxpId {
  std::uint32_t value = 0;

  friend auto operator<=>(const IxpId&, const IxpId&) = default;
};

struct Ixp {
  IxpId id;
  std::string name;
  GeoPoint location;
};

// The M candidate interconnection points. Ids are dense, 0..M-1, in listed
// order; the order defines the default nested peering subsets.
class IxpCatalog {
 public:
  explicit IxpCatalog(std::vector<Ixp> ixps);

  // The twelve largest US exchange points, largest first.
  static IxpCatalog us_default();

  std::size_t size() const noexcept { return ixps_.size(); }
  std::span<const Ixp> ixps() const noexcept { return ixps_; }
  const Ixp& operator[](IxpId id) const;

 private:
  std::vector<Ixp> ixps_;
};

// Reads `id,name,longitude,latitude` with a header row. Rows must list ids
// 0..M-1 in order.
IxpCatalog load_ixp_catalog(std::istream& in, std::string_view source = "<stream>");
IxpCatalog load_ixp_catalog(const std::filesystem::path& path);

// The subset of catalog points two networks agree to interconnect at.
// Members are kept sorted by id.
class PeeringSet {
 public:
  PeeringSet(std::shared_ptr<const IxpCatalog> catalog, std::vector<IxpId> members);

  static PeeringSet full(std::shared_ptr<const IxpCatalog> catalog);
  // The first n catalog entries.
  static PeeringSet prefix(std::shared_ptr<const IxpCatalog> catalog, std::size_t n);

  const IxpCatalog& catalog() const noexcept { return *catalog_; }
  const std::shared_ptr<const IxpCatalog>& catalog_ptr() const noexcept { return catalog_; }
  std::span<const IxpId> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(IxpId id) const noexcept;
  bool is_full() const noexcept { return members_.size() == catalog_->size(); }

 private:
  std::shared_ptr<const IxpCatalog> catalog_;
  std::vector<IxpId> members_;
};

// Closest member to `point`; ties go to the lowest id.
IxpId nearest_ixp(GeoPoint point, const PeeringSet& peering);

// Nearest member for every county, in table order.
std::vector<IxpId> assign_counties(const PeeringSet& peering, const CountyTable& table);

// Population share of the counties whose nearest member is `g`.
double region_weight(IxpId g, const PeeringSet& peering, const CountyTable& table);

// region_weight for every catalog id (non-members get 0), indexed by id.
std::vector<double> region_weights(const PeeringSet& peering, const CountyTable& table);

}  // namespace peerfee
