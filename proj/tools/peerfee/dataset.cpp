#include "dataset.hpp"

#include <string>

#include "peerfee/errors.hpp"

namespace peerfee::app {

DistanceSummary Dataset::summary_for(const PeeringSet& peering) const {
  const auto members = peering.members();
  bool is_prefix = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].value != i) {
      is_prefix = false;
      break;
    }
  }
  if (is_prefix) return nested[members.size() - 1];
  return distance_summary(peering, *table);
}

Dataset make_dataset(std::shared_ptr<const IxpCatalog> catalog, CountyTable table) {
  Dataset ds;
  ds.catalog = std::move(catalog);
  ds.table = std::make_shared<const CountyTable>(std::move(table));
  ds.nested = nested_distance_summaries(ds.catalog, *ds.table);
  return ds;
}

Dataset load_dataset(const ScenarioConfig& cfg) {
  if (cfg.county_file.empty()) {
    throw UsageError(std::string("no county file: pass --county-file or set ") + kDataDirEnv);
  }
  auto catalog = cfg.ixp_file
                     ? std::make_shared<const IxpCatalog>(load_ixp_catalog(*cfg.ixp_file))
                     : std::make_shared<const IxpCatalog>(IxpCatalog::us_default());
  return make_dataset(std::move(catalog), load_counties(cfg.county_file));
}

PeeringSet resolve_peering(const ScenarioConfig& cfg, const Dataset& ds) {
  try {
    if (cfg.peering_ids) {
      std::vector<IxpId> ids;
      for (auto id : *cfg.peering_ids) ids.push_back(IxpId{id});
      return PeeringSet(ds.catalog, std::move(ids));
    }
    if (cfg.peering_n) return PeeringSet::prefix(ds.catalog, *cfg.peering_n);
  } catch (const ContractError& e) {
    throw UsageError(std::string("peering: ") + e.what());
  }
  return PeeringSet::full(ds.catalog);
}

}  // namespace peerfee::app
