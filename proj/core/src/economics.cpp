#include "peerfee/economics.hpp"

#include <cmath>
#include <string>

#include "peerfee/errors.hpp"

namespace peerfee {

namespace {

bool is_fraction(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

void require_full(const DistanceSummary& d, const char* op) {
  if (!d.peering.is_full()) {
    throw ContractError(std::string(op) + " needs distances for peering at all " +
                        std::to_string(d.peering.catalog().size()) + " IXPs, got N = " +
                        std::to_string(d.peering.size()));
  }
}

void require_volume(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0) {
    throw ContractError(std::string(name) + " must be a finite volume >= 0");
  }
}

FeeReport base_report(FeeScenario scenario, const TrafficProfile& profile,
                      const LocalizationPolicy& loc, const CostParams& c,
                      const DistanceSummary& d_full) {
  FeeReport r;
  r.scenario = scenario;
  r.profile = profile;
  r.localization = loc;
  r.cost = c;
  r.distances.push_back(d_full);
  return r;
}

// Shared by the hot-potato and partially localized transit scenarios.
FeeReport transit_fee(FeeScenario scenario, const TrafficProfile& profile,
                      const LocalizationPolicy& loc, const CostParams& c,
                      const DistanceSummary& d_full) {
  require_full(d_full, "transit-provider fee");
  const double cb = c.per_unit_km();
  const double vu = profile.upstream();
  const double r = profile.ratio();
  const double rp = profile.video_ratio();
  const double x = loc.x();
  const double hot = d_full.ed_hot_down_km;

  FeeReport rep = base_report(scenario, profile, loc, c, d_full);
  rep.isp_cost = isp_cost_tp_peering(profile, loc, c, d_full);
  rep.counterparty_cost = tp_cost(profile, loc, c, d_full);
  rep.fee = cb * vu * (0.5 * (r - 1.0) + rp * (0.5 - x)) * hot;
  if (scenario == FeeScenario::tp_isp_hot) {
    rep.alternate_form_fee =
        0.5 * cb * (profile.downstream() + profile.video() - profile.upstream()) * hot;
  } else {
    rep.alternate_form_fee = 0.5 * (rep.isp_cost - *rep.counterparty_cost);
  }
  rep.terms = {
      {"non_video_imbalance", 0.5 * cb * vu * (r - 1.0) * hot},
      {"isp_unlocalized_video_haul", 0.5 * cb * vu * rp * (1.0 - x) * hot},
      {"tp_localized_video_haul", -0.5 * cb * vu * rp * x * hot},
  };
  rep.normalizer = cb * vu * hot;
  return rep;
}

}  // namespace

TrafficProfile TrafficProfile::from_volumes(double upstream, double downstream, double video) {
  if (!std::isfinite(upstream) || upstream <= 0.0) {
    throw ContractError("upstream volume must be > 0");
  }
  require_volume(downstream, "downstream volume");
  require_volume(video, "video volume");
  return TrafficProfile(upstream, downstream, video);
}

TrafficProfile TrafficProfile::from_ratios(double r, double r_prime, double upstream) {
  if (!std::isfinite(r) || r < 0.0) throw ContractError("r must be >= 0");
  if (!std::isfinite(r_prime) || r_prime < 0.0) throw ContractError("r' must be >= 0");
  return from_volumes(upstream, r * upstream, r_prime * upstream);
}

TrafficProfile TrafficProfile::scaled(double lambda) const {
  if (!std::isfinite(lambda) || lambda <= 0.0) throw ContractError("scale must be > 0");
  return from_volumes(upstream_ * lambda, downstream_ * lambda, video_ * lambda);
}

LocalizationPolicy::LocalizationPolicy(double x, double x_d) : x_(x), x_d_(x_d) {
  if (!is_fraction(x)) throw ContractError("x must lie in [0, 1]");
  if (!is_fraction(x_d)) throw ContractError("x_d must lie in [0, 1]");
}

CostParams::CostParams(double per_unit_km) : per_unit_km_(per_unit_km) {
  if (!std::isfinite(per_unit_km) || per_unit_km <= 0.0) {
    throw ContractError("c_b must be > 0");
  }
}

std::string_view to_string(FeeScenario s) noexcept {
  switch (s) {
    case FeeScenario::isp_isp: return "isp";
    case FeeScenario::tp_isp_hot: return "tp-hot";
    case FeeScenario::tp_isp: return "tp";
    case FeeScenario::cp_isp: return "cp";
  }
  return "unknown";
}

double isp_cost_isp_peering(double v_down, const CostParams& c, const DistanceSummary& d_full) {
  require_full(d_full, "ISP-ISP cost");
  require_volume(v_down, "downstream volume");
  return c.per_unit_km() * v_down * d_full.ed_hot_down_km;
}

FeeReport fee_isp_isp(const TrafficProfile& profile, const CostParams& c,
                      const DistanceSummary& d_full) {
  require_full(d_full, "ISP-ISP fee");
  if (profile.video() != 0.0) {
    throw ContractError("ISP-ISP fee takes no video traffic; use the transit-provider fee");
  }
  const double cb = c.per_unit_km();
  const double hot = d_full.ed_hot_down_km;
  const double cold = d_full.ed_cold_down_km;

  FeeReport rep = base_report(FeeScenario::isp_isp, profile, LocalizationPolicy{}, c, d_full);
  // Each ISP hauls what it receives hot-potato; upstream hand-off at the
  // user's own IXP costs the ISP cold-potato distance, zero at full peering.
  rep.isp_cost = cb * (profile.downstream() * hot + profile.upstream() * cold);
  rep.counterparty_cost = cb * (profile.upstream() * hot + profile.downstream() * cold);
  rep.fee = 0.5 * cb * (profile.downstream() - profile.upstream()) * hot;
  rep.alternate_form_fee = 0.5 * (rep.isp_cost - *rep.counterparty_cost);
  rep.terms = {{"traffic_imbalance", rep.fee}};
  rep.normalizer = cb * profile.upstream() * hot;
  return rep;
}

double isp_cost_tp_peering(const TrafficProfile& profile, const LocalizationPolicy& loc,
                           const CostParams& c, const DistanceSummary& d_full) {
  require_full(d_full, "ISP cost under transit peering");
  return c.per_unit_km() * profile.upstream() *
         (profile.ratio() + profile.video_ratio() * (1.0 - loc.x())) * d_full.ed_hot_down_km;
}

double tp_cost(const TrafficProfile& profile, const LocalizationPolicy& loc,
               const CostParams& c, const DistanceSummary& d_full) {
  require_full(d_full, "transit-provider cost");
  return c.per_unit_km() * profile.upstream() * (1.0 + profile.video_ratio() * loc.x()) *
         d_full.ed_hot_down_km;
}

FeeReport fee_tp_isp_hot(const TrafficProfile& profile, const CostParams& c,
                         const DistanceSummary& d_full) {
  return transit_fee(FeeScenario::tp_isp_hot, profile, LocalizationPolicy{0.0, 0.0}, c, d_full);
}

FeeReport fee_tp_isp(const TrafficProfile& profile, const LocalizationPolicy& loc,
                     const CostParams& c, const DistanceSummary& d_full) {
  return transit_fee(FeeScenario::tp_isp, profile, loc, c, d_full);
}

double video_fee_tp_isp(double v_v, const LocalizationPolicy& loc, const CostParams& c,
                        const DistanceSummary& d_full) {
  require_full(d_full, "video transit fee");
  require_volume(v_v, "video volume");
  return c.per_unit_km() * v_v * ((0.5 - loc.x()) * d_full.ed_hot_down_km);
}

SettlementPoint settlement_x_tp(double r, double r_prime) {
  if (!std::isfinite(r) || r < 0.0) throw ContractError("r must be >= 0");
  if (!std::isfinite(r_prime) || r_prime < 0.0) throw ContractError("r' must be >= 0");
  if (r_prime == 0.0) {
    throw UndefinedConditionError(
        "no video to localize (r' = 0); settlement-free iff r = 1, see the ISP-ISP fee");
  }
  const double value = ((r - 1.0) + r_prime) / (2.0 * r_prime);
  return {value, value >= 0.0 && value <= 1.0};
}

CdnDecision cdn_breakeven(const TrafficProfile& profile, const LocalizationPolicy& loc,
                          const CostParams& c, const DistanceSummary& d_full, double cdn_cost) {
  require_full(d_full, "CDN break-even");
  if (!std::isfinite(cdn_cost) || cdn_cost < 0.0) {
    throw ContractError("CDN cost must be >= 0");
  }
  CdnDecision out;
  out.avoided_backbone_cost =
      c.per_unit_km() * profile.video() * loc.x() * d_full.ed_hot_down_km;
  out.cdn_cost = cdn_cost;
  out.build = cdn_cost < out.avoided_backbone_cost;
  out.fee = fee_tp_isp(profile, loc, c, d_full);
  return out;
}

double isp_cost_cp_peering(double v_v, double x_d, const CostParams& c,
                           const DistanceSummary& d_subset) {
  require_volume(v_v, "video volume");
  if (!is_fraction(x_d)) throw ContractError("x_d must lie in [0, 1]");
  return c.per_unit_km() * v_v *
         (x_d * d_subset.ed_cold_down_km + (1.0 - x_d) * d_subset.ed_hot_down_km);
}

FeeReport fee_cp_isp(double v_v, double x_d, const CostParams& c,
                     const DistanceSummary& d_subset, const DistanceSummary& d_full) {
  require_full(d_full, "content-provider fee");
  if (d_full.ed_cold_down_km != 0.0) {
    throw ContractError("full-catalog cold-potato distance must be exactly 0");
  }
  if (d_subset.peering.catalog().size() != d_full.peering.catalog().size()) {
    throw ContractError("subset and full distances come from different catalogs");
  }
  const double cb = c.per_unit_km();
  const double hot_n = d_subset.ed_hot_down_km;
  const double cold_n = d_subset.ed_cold_down_km;
  const double hot_m = d_full.ed_hot_down_km;
  const double cold_m = d_full.ed_cold_down_km;

  // Of the whole report only x_d matters; the transit-side x cancels.
  FeeReport rep = base_report(FeeScenario::cp_isp, TrafficProfile::from_volumes(1.0, 0.0, v_v),
                              LocalizationPolicy{0.0, x_d}, c, d_full);
  if (!d_subset.peering.is_full() || d_subset.peering.size() != d_full.peering.size()) {
    rep.distances.push_back(d_subset);
  }
  rep.isp_cost = isp_cost_cp_peering(v_v, x_d, c, d_subset);
  rep.transit_isp_net_cost = cb * v_v * (0.5 * hot_m);

  const double localization = (0.5 - x_d) * hot_m;
  const double hot_gap = (1.0 - x_d) * (hot_n - hot_m);
  const double cold_gap = x_d * (cold_n - cold_m);
  rep.fee = cb * v_v * (localization + hot_gap + cold_gap);
  rep.alternate_form_fee = cb * v_v * (x_d * cold_n + (1.0 - x_d) * hot_n - 0.5 * hot_m);
  rep.terms = {
      {"localization", cb * v_v * localization},
      {"peering_points_hot", cb * v_v * hot_gap},
      {"peering_points_cold", cb * v_v * cold_gap},
  };
  rep.normalizer = cb * v_v * hot_m;
  return rep;
}

SettlementPoint settlement_x_cp(const DistanceSummary& d_subset, const DistanceSummary& d_full) {
  require_full(d_full, "content-provider settlement point");
  const double hot_n = d_subset.ed_hot_down_km;
  const double cold_n = d_subset.ed_cold_down_km;
  const double gap = hot_n - cold_n;
  if (!(std::abs(gap) > 1e-12 * std::abs(hot_n))) {
    throw UndefinedConditionError(
        "hot and cold distances coincide for N = " + std::to_string(d_subset.peering.size()) +
        "; the content-provider fee does not depend on x_d");
  }
  const double value = (hot_n - 0.5 * d_full.ed_hot_down_km) / gap;
  return {value, value >= 0.0 && value <= 1.0};
}

}  // namespace peerfee
