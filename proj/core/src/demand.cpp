#include "peerfee/demand.hpp"

#include <string>

#include "peerfee/errors.hpp"

namespace peerfee {

std::vector<double> user_ixp_distribution(const CountyTable& table, const IxpCatalog& catalog) {
  // Any catalog instance works here; only locations matter.
  auto shared = std::make_shared<const IxpCatalog>(catalog);
  return region_weights(PeeringSet::full(std::move(shared)), table);
}

namespace {

double hot_sum(const PeeringSet& peering, const std::vector<double>& entry,
               const std::vector<double>& user) {
  const auto& catalog = peering.catalog();
  double total = 0.0;
  for (IxpId g : peering.members()) {
    for (const Ixp& u : catalog.ixps()) {
      total += great_circle_km(catalog[g].location, u.location) * entry[g.value] *
               user[u.id.value];
    }
  }
  return total;
}

double cold_sum(const PeeringSet& peering, const std::vector<double>& user) {
  const auto& catalog = peering.catalog();
  double total = 0.0;
  for (const Ixp& u : catalog.ixps()) {
    const IxpId entry = nearest_ixp(u.location, peering);
    total += great_circle_km(catalog[entry].location, u.location) * user[u.id.value];
  }
  return total;
}

}  // namespace

double ed_hot_down(const PeeringSet& peering, const CountyTable& table) {
  return hot_sum(peering, region_weights(peering, table),
                 user_ixp_distribution(table, peering.catalog()));
}

double ed_cold_down(const PeeringSet& peering, const CountyTable& table) {
  return cold_sum(peering, user_ixp_distribution(table, peering.catalog()));
}

DistanceSummary distance_summary(const PeeringSet& peering, const CountyTable& table) {
  const auto user = user_ixp_distribution(table, peering.catalog());
  const auto entry = region_weights(peering, table);
  return DistanceSummary{peering, hot_sum(peering, entry, user), cold_sum(peering, user)};
}

std::vector<DistanceSummary> nested_distance_summaries(
    const std::shared_ptr<const IxpCatalog>& catalog, const CountyTable& table) {
  std::vector<DistanceSummary> out;
  out.reserve(catalog->size());
  for (std::size_t n = 1; n <= catalog->size(); ++n) {
    out.push_back(distance_summary(PeeringSet::prefix(catalog, n), table));
  }
  return out;
}

double brute_force_ed(const PeeringSet& peering, const CountyTable& table, Routing routing) {
  if (table.size() > kBruteForceCountyLimit) {
    throw OracleGuardError("brute-force oracle refuses " + std::to_string(table.size()) +
                           " counties (limit " + std::to_string(kBruteForceCountyLimit) + ")");
  }
  const auto& catalog = peering.catalog();
  const auto all = PeeringSet::full(peering.catalog_ptr());
  const double p = static_cast<double>(table.total_population());
  double total = 0.0;
  for (const County& user : table.counties()) {
    const double pu = static_cast<double>(user.population) / p;
    const GeoPoint user_ixp = catalog[nearest_ixp(user.center, all)].location;
    if (routing == Routing::cold) {
      const GeoPoint entry = catalog[nearest_ixp(user_ixp, peering)].location;
      total += pu * great_circle_km(entry, user_ixp);
      continue;
    }
    for (const County& source : table.counties()) {
      const double ps = static_cast<double>(source.population) / p;
      const GeoPoint entry = catalog[nearest_ixp(source.center, peering)].location;
      total += ps * pu * great_circle_km(entry, user_ixp);
    }
  }
  return total;
}

}  // namespace peerfee
