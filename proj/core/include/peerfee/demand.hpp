#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "peerfee/topology.hpp"

namespace peerfee {

// Expected backbone haul of downstream traffic on the user's ISP for one
// peering set. Upstream hauls reuse the same pair: hot-potato upstream
// equals cold-potato downstream and vice versa.
struct DistanceSummary {
  PeeringSet peering;
  double ed_hot_down_km = 0.0;
  double ed_cold_down_km = 0.0;
};

enum class Routing { hot, cold };

// Probability that an end user's nearest catalog IXP (over all M) is each id.
std::vector<double> user_ixp_distribution(const CountyTable& table, const IxpCatalog& catalog);

// Source enters at the member nearest the source (independent of the user);
// the ISP hauls it to the IXP nearest the user.
double ed_hot_down(const PeeringSet& peering, const CountyTable& table);

// Traffic enters at the member nearest the user's IXP.
double ed_cold_down(const PeeringSet& peering, const CountyTable& table);

DistanceSummary distance_summary(const PeeringSet& peering, const CountyTable& table);

// Summaries for the nested prefixes N = 1..M of the catalog.
std::vector<DistanceSummary> nested_distance_summaries(
    const std::shared_ptr<const IxpCatalog>& catalog, const CountyTable& table);

inline constexpr std::size_t kBruteForceCountyLimit = 500;

// Exhaustive enumeration over (source county, user county) pairs for hot
// routing or over user counties for cold routing. Test oracle; throws
// OracleGuardError above kBruteForceCountyLimit counties.
double brute_force_ed(const PeeringSet& peering, const CountyTable& table, Routing routing);

}  // namespace peerfee
