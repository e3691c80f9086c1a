#include "figures.hpp"

#include "peerfee/economics.hpp"
#include "peerfee/errors.hpp"

namespace peerfee::app {

std::vector<double> unit_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 100; ++i) g.push_back(i / 100.0);
  return g;
}

std::vector<double> default_video_ratio_sweep() { return range_points(0.05, 10.0, 0.05); }

namespace {

CsvTable isp_cost_figure(const Dataset& ds, const CostParams& c) {
  CsvTable t{{"r", "r_prime", "x", "normalized_isp_cost"}, {}};
  for (double r : kRatioPanels) {
    for (double rp : kVideoRatioSeries) {
      const auto profile = TrafficProfile::from_ratios(r, rp);
      const double norm = c.per_unit_km() * profile.upstream() * ds.full().ed_hot_down_km;
      for (double x : unit_grid()) {
        const double cost = isp_cost_tp_peering(profile, LocalizationPolicy{x}, c, ds.full());
        t.rows.push_back({format_number(r), format_number(rp), format_number(x),
                          format_number(cost / norm)});
      }
    }
  }
  return t;
}

CsvTable tp_cost_figure(const Dataset& ds, const CostParams& c, double r) {
  CsvTable t{{"r_prime", "x", "normalized_tp_cost"}, {}};
  for (double rp : kVideoRatioSeries) {
    const auto profile = TrafficProfile::from_ratios(r, rp);
    const double norm = c.per_unit_km() * profile.upstream() * ds.full().ed_hot_down_km;
    for (double x : unit_grid()) {
      const double cost = tp_cost(profile, LocalizationPolicy{x}, c, ds.full());
      t.rows.push_back({format_number(rp), format_number(x), format_number(cost / norm)});
    }
  }
  return t;
}

CsvTable tp_fee_figure(const Dataset& ds, const CostParams& c) {
  CsvTable t{{"r", "r_prime", "x", "normalized_fee"}, {}};
  for (double r : kRatioPanels) {
    for (double rp : kVideoRatioSeries) {
      const auto profile = TrafficProfile::from_ratios(r, rp);
      for (double x : unit_grid()) {
        const auto rep = fee_tp_isp(profile, LocalizationPolicy{x}, c, ds.full());
        t.rows.push_back({format_number(r), format_number(rp), format_number(x),
                          format_number(rep.normalized_fee())});
      }
    }
  }
  return t;
}

CsvTable tp_settlement_figure(const std::vector<double>& video_ratios) {
  CsvTable t{{"r", "r_prime", "x_settlement", "feasible"}, {}};
  for (double r : kSettlementRatioSeries) {
    for (double rp : video_ratios) {
      if (rp == 0.0) continue;  // undefined without video
      const auto point = settlement_x_tp(r, rp);
      t.rows.push_back({format_number(r), format_number(rp), format_number(point.value),
                        point.feasible ? "1" : "0"});
    }
  }
  return t;
}

CsvTable cp_fee_figure(const Dataset& ds, const CostParams& c) {
  CsvTable t{{"n", "x_d", "normalized_fee"}, {}};
  for (const auto& d_subset : ds.nested) {
    for (double xd : unit_grid()) {
      const auto rep = fee_cp_isp(1.0, xd, c, d_subset, ds.full());
      t.rows.push_back({std::to_string(d_subset.peering.size()), format_number(xd),
                        format_number(rep.normalized_fee())});
    }
  }
  return t;
}

CsvTable cp_settlement_figure(const Dataset& ds) {
  CsvTable t{{"n", "defined", "x_d_settlement", "feasible"}, {}};
  for (const auto& d_subset : ds.nested) {
    const std::string n = std::to_string(d_subset.peering.size());
    try {
      const auto point = settlement_x_cp(d_subset, ds.full());
      t.rows.push_back({n, "1", format_number(point.value), point.feasible ? "1" : "0"});
    } catch (const UndefinedConditionError&) {
      t.rows.push_back({n, "0", "", "0"});
    }
  }
  return t;
}

}  // namespace

CsvTable figure_table(int figure, const Dataset& ds, const ScenarioConfig& cfg) {
  const CostParams c{cfg.c_b};
  if (cfg.sweep && !(figure == 5 && cfg.sweep->variable == SweepVariable::r_prime)) {
    throw UsageError("--sweep applies only to figure 5, as an r_prime sweep");
  }
  switch (figure) {
    case 2: return isp_cost_figure(ds, c);
    case 3: return tp_cost_figure(ds, c, cfg.r.value_or(1.0));
    case 4: return tp_fee_figure(ds, c);
    case 5: return tp_settlement_figure(cfg.sweep ? cfg.sweep->values : default_video_ratio_sweep());
    case 6: return cp_fee_figure(ds, c);
    case 7: return cp_settlement_figure(ds);
    default: break;
  }
  throw UsageError("unknown figure " + std::to_string(figure) + "; expected 2..7");
}

PlotSpec figure_plot(int figure) {
  switch (figure) {
    case 2: return {"ISP backbone cost", "x", "normalized_isp_cost", {"r", "r_prime"},
                    "video localization x", "ISP cost / (c_b V_u ED_hot(M))"};
    case 3: return {"Transit provider backbone cost", "x", "normalized_tp_cost", {"r_prime"},
                    "video localization x", "TP cost / (c_b V_u ED_hot(M))"};
    case 4: return {"Fair fee, transit provider to ISP", "x", "normalized_fee", {"r", "r_prime"},
                    "video localization x", "fee / (c_b V_u ED_hot(M))"};
    case 5: return {"Settlement-free curve, transit provider and ISP", "r_prime", "x_settlement",
                    {"r"}, "video ratio r'", "localization x for zero fee"};
    case 6: return {"Fair fee, content provider to ISP", "x_d", "normalized_fee", {"n"},
                    "content localization x_d", "fee / (c_b V_v ED_hot(M))"};
    case 7: return {"Settlement-free direct peering curve", "n", "x_d_settlement", {},
                    "peering points N", "localization x_d for zero fee"};
    default: break;
  }
  throw UsageError("unknown figure " + std::to_string(figure) + "; expected 2..7");
}

}  // namespace peerfee::app
