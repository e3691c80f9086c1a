#pragma once

#include <memory>
#include <vector>

#include "config.hpp"
#include "peerfee/demand.hpp"
#include "peerfee/topology.hpp"

namespace peerfee::app {

// Counties, catalog and the nested distance summaries N = 1..M, computed
// once per command.
struct Dataset {
  std::shared_ptr<const IxpCatalog> catalog;
  std::shared_ptr<const CountyTable> table;
  std::vector<DistanceSummary> nested;

  const DistanceSummary& full() const { return nested.back(); }
  // Reuses the nested summary when `peering` is a catalog prefix.
  DistanceSummary summary_for(const PeeringSet& peering) const;
};

Dataset make_dataset(std::shared_ptr<const IxpCatalog> catalog, CountyTable table);

// Throws UsageError when no county file is configured, IngestError on data
// problems.
Dataset load_dataset(const ScenarioConfig& cfg);

// --peering-ids, else --peering-n, else the full catalog.
PeeringSet resolve_peering(const ScenarioConfig& cfg, const Dataset& ds);

}  // namespace peerfee::app
