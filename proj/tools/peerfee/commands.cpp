#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "figures.hpp"
#include <nlohmann/json.hpp>
#include "peerfee/errors.hpp"
#include "svg.hpp"

namespace peerfee::app {

Output::Output(std::filesystem::path dir, std::ostream& fallback)
    : dir_(std::move(dir)), fallback_(&fallback) {}

void Output::emit(const std::string& filename, const std::string& content) {
  if (dir_.empty()) {
    *fallback_ << content;
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto path = dir_ / filename;
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write '" + path.string() + "'");
  f << content;
  if (!f) throw Error("failed writing '" + path.string() + "'");
  written_.push_back(path);
}

namespace {

std::string members_label(const PeeringSet& peering) {
  std::string s;
  for (IxpId id : peering.members()) {
    if (!s.empty()) s += ';';
    s += peering.catalog()[id].name;
  }
  return s;
}

std::string missing(const char* field, const char* alternative, const char* context) {
  std::string msg = std::string("missing required field '") + field + "'";
  if (alternative) msg += std::string(" (or '") + alternative + "')";
  return msg + " for " + context;
}

bool ratio_mode(const ScenarioConfig& cfg) { return cfg.r || cfg.r_prime; }

// Traffic from either volumes or ratios (with v_u = 1).
TrafficProfile resolve_profile(const ScenarioConfig& cfg, bool need_downstream, bool need_video,
                               const char* context) {
  double vu = 1.0, vd = 0.0, vv = 0.0;
  if (ratio_mode(cfg)) {
    if (need_downstream && !cfg.r) throw UsageError(missing("r", "v-d", context));
    if (need_video && !cfg.r_prime) throw UsageError(missing("r-prime", "v-v", context));
    vd = cfg.r.value_or(0.0);
    vv = cfg.r_prime.value_or(0.0);
  } else {
    if (need_downstream && !cfg.v_d) throw UsageError(missing("v-d", "r", context));
    if (need_video && !cfg.v_v) throw UsageError(missing("v-v", "r-prime", context));
    vu = cfg.v_u.value_or(1.0);
    vd = cfg.v_d.value_or(0.0);
    vv = cfg.v_v.value_or(0.0);
  }
  try {
    return ratio_mode(cfg) ? TrafficProfile::from_ratios(vd, vv) : TrafficProfile::from_volumes(vu, vd, vv);
  } catch (const ContractError& e) {
    throw UsageError(std::string(context) + ": " + e.what());
  }
}

template <class Fn>
auto as_usage(const char* context, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ContractError& e) {
    throw UsageError(std::string(context) + ": " + e.what());
  } catch (const UndefinedConditionError& e) {
    throw UsageError(std::string(context) + ": " + e.what());
  }
}

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

const char* normalizer_basis(FeeScenario s) {
  return s == FeeScenario::cp_isp ? "c_b*v_v*ed_hot_down(M)" : "c_b*v_u*ed_hot_down(M)";
}

}  // namespace

std::vector<ScenarioConfig> expand_sweep(const ScenarioConfig& cfg) {
  if (!cfg.sweep) return {cfg};
  std::vector<ScenarioConfig> out;
  for (double v : cfg.sweep->values) {
    ScenarioConfig c = cfg;
    c.sweep.reset();
    switch (cfg.sweep->variable) {
      case SweepVariable::x: c.x = v; break;
      case SweepVariable::x_d: c.x_d = v; break;
      case SweepVariable::r:
      case SweepVariable::r_prime:
        if (cfg.v_u || cfg.v_d || cfg.v_v) {
          throw UsageError("sweeping a traffic ratio needs ratio input (--r/--r-prime), "
                           "not volumes");
        }
        (cfg.sweep->variable == SweepVariable::r ? c.r : c.r_prime) = v;
        break;
      case SweepVariable::n:
        if (cfg.peering_ids) throw UsageError("cannot sweep n together with --peering-ids");
        c.peering_n = static_cast<std::size_t>(v);
        break;
    }
    out.push_back(std::move(c));
  }
  return out;
}

FeeReport compute_fee(const ScenarioConfig& cfg, const Dataset& ds) {
  if (!cfg.scenario) throw UsageError(missing("scenario", nullptr, "fee"));
  const std::string& s = *cfg.scenario;
  const std::string context = "fee --scenario " + s;
  const CostParams c{cfg.c_b};

  if (s != "cp" && (cfg.peering_n || cfg.peering_ids) && !resolve_peering(cfg, ds).is_full()) {
    throw UsageError(context + ": this scenario assumes peering at all " +
                     std::to_string(ds.catalog->size()) + " IXPs");
  }
  if (s == "isp") {
    const auto profile = resolve_profile(cfg, true, false, context.c_str());
    return as_usage(context.c_str(), [&] { return fee_isp_isp(profile, c, ds.full()); });
  }
  if (s == "tp-hot") {
    const auto profile = resolve_profile(cfg, true, true, context.c_str());
    return as_usage(context.c_str(), [&] { return fee_tp_isp_hot(profile, c, ds.full()); });
  }
  if (s == "tp") {
    const auto profile = resolve_profile(cfg, true, true, context.c_str());
    if (!cfg.x) throw UsageError(missing("x", nullptr, context.c_str()));
    return as_usage(context.c_str(), [&] {
      return fee_tp_isp(profile, LocalizationPolicy{*cfg.x}, c, ds.full());
    });
  }
  if (s == "cp") {
    if (!cfg.x_d) throw UsageError(missing("x-d", nullptr, context.c_str()));
    if (!cfg.peering_n && !cfg.peering_ids) {
      throw UsageError(missing("peering-n", "peering-ids", context.c_str()));
    }
    double vv = 1.0;
    if (ratio_mode(cfg)) vv = cfg.r_prime.value_or(1.0);
    else if (cfg.v_v) vv = *cfg.v_v;
    const auto peering = resolve_peering(cfg, ds);
    const auto d_subset = ds.summary_for(peering);
    return as_usage(context.c_str(), [&] {
      (void)LocalizationPolicy{0.0, *cfg.x_d};
      return fee_cp_isp(vv, *cfg.x_d, c, d_subset, ds.full());
    });
  }
  throw UsageError("unknown scenario '" + s + "'");
}

CsvTable distances_table(const ScenarioConfig& cfg, const Dataset& ds) {
  CsvTable t{{"n", "members", "ed_hot_down_km", "ed_cold_down_km"}, {}};
  auto row = [&](const DistanceSummary& d) {
    t.rows.push_back({std::to_string(d.peering.size()), members_label(d.peering),
                      format_number(d.ed_hot_down_km), format_number(d.ed_cold_down_km)});
  };
  if (cfg.peering_n || cfg.peering_ids) {
    row(ds.summary_for(resolve_peering(cfg, ds)));
  } else {
    for (const auto& d : ds.nested) row(d);
  }
  return t;
}

CsvTable fee_table(const std::vector<FeeReport>& reports) {
  CsvTable t{{"scenario", "n", "v_u", "v_d", "v_v", "r", "r_prime", "x", "x_d", "c_b",
              "ed_hot_down_n_km", "ed_cold_down_n_km", "ed_hot_down_m_km", "ed_cold_down_m_km",
              "fee", "isp_cost", "counterparty_cost", "transit_isp_net_cost",
              "alternate_form_fee", "normalizer", "normalized_fee"},
             {}};
  for (const auto& rep : reports) {
    const bool cp = rep.scenario == FeeScenario::cp_isp;
    const auto& d_full = rep.distances.front();
    const auto& d_subset = rep.distances.back();
    const auto& p = rep.profile;
    t.rows.push_back({
        std::string(to_string(rep.scenario)),
        std::to_string(d_subset.peering.size()),
        cp ? "" : format_number(p.upstream()),
        cp ? "" : format_number(p.downstream()),
        format_number(p.video()),
        cp ? "" : format_number(p.ratio()),
        cp ? "" : format_number(p.video_ratio()),
        rep.scenario == FeeScenario::tp_isp ? format_number(rep.localization.x()) : "",
        cp ? format_number(rep.localization.x_d()) : "",
        format_number(rep.cost.per_unit_km()),
        format_number(d_subset.ed_hot_down_km),
        format_number(d_subset.ed_cold_down_km),
        format_number(d_full.ed_hot_down_km),
        format_number(d_full.ed_cold_down_km),
        format_number(rep.fee),
        format_number(rep.isp_cost),
        optional_number(rep.counterparty_cost),
        optional_number(rep.transit_isp_net_cost),
        format_number(rep.alternate_form_fee),
        format_number(rep.normalizer),
        format_number(rep.normalized_fee()),
    });
  }
  return t;
}

std::string fee_json(const std::vector<FeeReport>& reports) {
  using nlohmann::ordered_json;
  ordered_json arr = ordered_json::array();
  for (const auto& rep : reports) {
    ordered_json j;
    j["scenario"] = std::string(to_string(rep.scenario));
    j["fee"] = rep.fee;
    j["isp_cost"] = rep.isp_cost;
    j["counterparty_cost"] =
        rep.counterparty_cost ? ordered_json(*rep.counterparty_cost) : ordered_json(nullptr);
    j["transit_isp_net_cost"] =
        rep.transit_isp_net_cost ? ordered_json(*rep.transit_isp_net_cost) : ordered_json(nullptr);
    j["alternate_form_fee"] = rep.alternate_form_fee;
    j["normalizer"] = rep.normalizer;
    j["normalizer_basis"] = normalizer_basis(rep.scenario);
    j["normalized_fee"] = rep.normalized_fee();
    ordered_json terms = ordered_json::object();
    for (const auto& term : rep.terms) terms[term.name] = term.value;
    j["terms"] = terms;
    const auto& p = rep.profile;
    j["inputs"] = {{"v_u", p.upstream()},         {"v_d", p.downstream()},
                   {"v_v", p.video()},            {"r", p.ratio()},
                   {"r_prime", p.video_ratio()},  {"x", rep.localization.x()},
                   {"x_d", rep.localization.x_d()}, {"c_b", rep.cost.per_unit_km()}};
    ordered_json dists = ordered_json::array();
    for (const auto& d : rep.distances) {
      ordered_json names = ordered_json::array();
      for (IxpId id : d.peering.members()) names.push_back(d.peering.catalog()[id].name);
      dists.push_back({{"n", d.peering.size()},
                       {"members", names},
                       {"ed_hot_down_km", d.ed_hot_down_km},
                       {"ed_cold_down_km", d.ed_cold_down_km}});
    }
    j["distances"] = dists;
    arr.push_back(std::move(j));
  }
  return (reports.size() == 1 ? arr.front() : arr).dump(2) + "\n";
}

CsvTable settlement_table(const ScenarioConfig& cfg, const Dataset& ds) {
  if (!cfg.kind) throw UsageError(missing("kind", nullptr, "settlement-curve"));
  if (*cfg.kind == "tp") {
    if (cfg.sweep && cfg.sweep->variable != SweepVariable::r &&
        cfg.sweep->variable != SweepVariable::r_prime) {
      throw UsageError("settlement-curve --kind tp sweeps r or r_prime");
    }
    CsvTable t{{"r", "r_prime", "defined", "x_settlement", "feasible"}, {}};
    for (const auto& c : expand_sweep(cfg)) {
      const auto profile = resolve_profile(c, true, true, "settlement-curve --kind tp");
      const double r = profile.ratio();
      const double rp = profile.video_ratio();
      try {
        const auto point = settlement_x_tp(r, rp);
        t.rows.push_back({format_number(r), format_number(rp), "1", format_number(point.value),
                          point.feasible ? "1" : "0"});
      } catch (const UndefinedConditionError&) {
        t.rows.push_back({format_number(r), format_number(rp), "0", "", "0"});
      }
    }
    return t;
  }
  if (cfg.sweep && cfg.sweep->variable != SweepVariable::n) {
    throw UsageError("settlement-curve --kind cp sweeps n");
  }
  CsvTable t{{"n", "members", "defined", "x_d_settlement", "feasible"}, {}};
  auto row = [&](const DistanceSummary& d) {
    const std::string n = std::to_string(d.peering.size());
    try {
      const auto point = settlement_x_cp(d, ds.full());
      t.rows.push_back({n, members_label(d.peering), "1", format_number(point.value),
                        point.feasible ? "1" : "0"});
    } catch (const UndefinedConditionError&) {
      t.rows.push_back({n, members_label(d.peering), "0", "", "0"});
    }
  };
  if (!cfg.sweep && !cfg.peering_n && !cfg.peering_ids) {
    for (const auto& d : ds.nested) row(d);
  } else {
    for (const auto& c : expand_sweep(cfg)) row(ds.summary_for(resolve_peering(c, ds)));
  }
  return t;
}

CsvTable cdn_table(const ScenarioConfig& cfg, const Dataset& ds) {
  if (cfg.sweep && cfg.sweep->variable == SweepVariable::n) {
    throw UsageError("cdn-breakeven assumes peering at all IXPs; n cannot be swept");
  }
  CsvTable t{{"v_u", "v_d", "v_v", "x", "c_b", "ed_hot_down_m_km", "avoided_backbone_cost",
              "cdn_cost", "build", "fee", "normalized_fee"},
             {}};
  const char* context = "cdn-breakeven";
  for (const auto& c : expand_sweep(cfg)) {
    const auto profile = resolve_profile(c, true, true, context);
    if (!c.x) throw UsageError(missing("x", nullptr, context));
    if (!c.cdn_cost) throw UsageError(missing("cdn-cost", nullptr, context));
    const auto decision = as_usage(context, [&] {
      return cdn_breakeven(profile, LocalizationPolicy{*c.x}, CostParams{c.c_b}, ds.full(),
                           *c.cdn_cost);
    });
    t.rows.push_back({format_number(profile.upstream()), format_number(profile.downstream()),
                      format_number(profile.video()), format_number(*c.x), format_number(c.c_b),
                      format_number(ds.full().ed_hot_down_km),
                      format_number(decision.avoided_backbone_cost),
                      format_number(decision.cdn_cost), decision.build ? "1" : "0",
                      format_number(decision.fee.fee),
                      format_number(decision.fee.normalized_fee())});
  }
  return t;
}

void cmd_distances(const ScenarioConfig& cfg, const Dataset& ds, Output& out) {
  out.emit("distances.csv", distances_table(cfg, ds).str());
}

void cmd_fee(const ScenarioConfig& cfg, const Dataset& ds, Output& out) {
  if (cfg.sweep && cfg.sweep->variable == SweepVariable::n && cfg.scenario != "cp") {
    throw UsageError("only --scenario cp can sweep n");
  }
  std::vector<FeeReport> reports;
  for (const auto& c : expand_sweep(cfg)) reports.push_back(compute_fee(c, ds));
  if (cfg.format == OutputFormat::json) out.emit("fee.json", fee_json(reports));
  else out.emit("fee.csv", fee_table(reports).str());
}

void cmd_figure(const ScenarioConfig& cfg, const Dataset& ds, Output& out) {
  if (!cfg.figure) throw UsageError(missing("figure", nullptr, "figure"));
  if (cfg.svg && !out.to_directory()) throw UsageError("--svg needs --output <dir>");
  const int id = *cfg.figure;
  const auto table = figure_table(id, ds, cfg);
  const std::string stem = "figure" + std::to_string(id);
  out.emit(stem + ".csv", table.str());
  if (cfg.svg) out.emit(stem + ".svg", render_svg(table, figure_plot(id)));
}

void cmd_settlement_curve(const ScenarioConfig& cfg, const Dataset& ds, Output& out) {
  out.emit("settlement_" + cfg.kind.value_or("tp") + ".csv", settlement_table(cfg, ds).str());
}

void cmd_cdn_breakeven(const ScenarioConfig& cfg, const Dataset& ds, Output& out) {
  out.emit("cdn_breakeven.csv", cdn_table(cfg, ds).str());
}

}  // namespace peerfee::app
