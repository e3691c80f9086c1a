#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "peerfee/demand.hpp"

namespace peerfee {

// Traffic exchanged across the interconnection, seen from the ISP:
// upstream (user to counterparty), non-video downstream, video downstream.
class TrafficProfile {
 public:
  // Throws ContractError unless upstream > 0 and the others are >= 0.
  static TrafficProfile from_volumes(double upstream, double downstream, double video);
  // r = downstream / upstream, r' = video / upstream.
  static TrafficProfile from_ratios(double r, double r_prime, double upstream = 1.0);

  double upstream() const noexcept { return upstream_; }
  double downstream() const noexcept { return downstream_; }
  double video() const noexcept { return video_; }
  double ratio() const noexcept { return downstream_ / upstream_; }
  double video_ratio() const noexcept { return video_ / upstream_; }

  TrafficProfile scaled(double lambda) const;

 private:
  TrafficProfile(double u, double d, double v) : upstream_(u), downstream_(d), video_(v) {}

  double upstream_;
  double downstream_;
  double video_;
};

// x: share of video the transit provider hands off at the IXP nearest the
// user. x_d: share the content provider serves from the nearest peering IXP.
class LocalizationPolicy {
 public:
  explicit LocalizationPolicy(double x = 0.0, double x_d = 0.0);

  double x() const noexcept { return x_; }
  double x_d() const noexcept { return x_d_; }

 private:
  double x_;
  double x_d_;
};

// Backbone cost per unit volume per km.
class CostParams {
 public:
  explicit CostParams(double per_unit_km = 1.0);

  double per_unit_km() const noexcept { return per_unit_km_; }

 private:
  double per_unit_km_;
};

enum class FeeScenario { isp_isp, tp_isp_hot, tp_isp, cp_isp };

std::string_view to_string(FeeScenario s) noexcept;

struct FeeTerm {
  std::string name;
  double value = 0.0;
};

// A fair fee with the costs behind it. Positive fee: the counterparty (the
// other ISP, the transit provider or the content provider) pays the ISP.
struct FeeReport {
  FeeScenario scenario = FeeScenario::isp_isp;
  double fee = 0.0;
  double isp_cost = 0.0;
  // Net-cost-equalizing scenarios only. For content providers the fee is
  // referenced to transit delivery instead, see transit_isp_net_cost.
  std::optional<double> counterparty_cost;
  // ISP net video cost had the same video arrived through a transit provider.
  std::optional<double> transit_isp_net_cost;
  // The same fee evaluated through a second algebraic route.
  double alternate_form_fee = 0.0;
  // Additive decomposition of `fee`.
  std::vector<FeeTerm> terms;
  // c_b * v_u * ED_hot(M) for ISP/TP scenarios, c_b * v_v * ED_hot(M) for CP.
  double normalizer = 0.0;

  TrafficProfile profile = TrafficProfile::from_volumes(1.0, 0.0, 0.0);
  LocalizationPolicy localization;
  CostParams cost;
  // Full-catalog summary first; the agreed subset follows for CP.
  std::vector<DistanceSummary> distances;

  double normalized_fee() const noexcept { return fee / normalizer; }
};

// ISP-ISP peering at all M points: c_b * v_down * ED_hot(M).
double isp_cost_isp_peering(double v_down, const CostParams& c, const DistanceSummary& d_full);

// Fee ISP2 pays ISP1: half the difference of their hot-potato backbone costs.
// The profile must carry no video; use fee_tp_isp for that.
FeeReport fee_isp_isp(const TrafficProfile& profile, const CostParams& c,
                      const DistanceSummary& d_full);

// ISP backbone cost when peering with a transit provider that localizes x.
double isp_cost_tp_peering(const TrafficProfile& profile, const LocalizationPolicy& loc,
                           const CostParams& c, const DistanceSummary& d_full);

// Transit provider backbone cost for the same exchange.
double tp_cost(const TrafficProfile& profile, const LocalizationPolicy& loc,
               const CostParams& c, const DistanceSummary& d_full);

// Transit provider delivers everything with hot-potato routing (x = 0).
FeeReport fee_tp_isp_hot(const TrafficProfile& profile, const CostParams& c,
                         const DistanceSummary& d_full);

FeeReport fee_tp_isp(const TrafficProfile& profile, const LocalizationPolicy& loc,
                     const CostParams& c, const DistanceSummary& d_full);

// Video-only component of the transit fee: c_b * v_v * (0.5 - x) * ED_hot(M).
double video_fee_tp_isp(double v_v, const LocalizationPolicy& loc, const CostParams& c,
                        const DistanceSummary& d_full);

// Localization where a fee vanishes. Not clamped: values outside [0, 1]
// come back with feasible = false.
struct SettlementPoint {
  double value = 0.0;
  bool feasible = false;
};

// (r + r' - 1) / (2 r'). r' == 0 raises UndefinedConditionError.
SettlementPoint settlement_x_tp(double r, double r_prime);

struct CdnDecision {
  double avoided_backbone_cost = 0.0;  // c_b * v_v * x * ED_hot(M)
  double cdn_cost = 0.0;
  bool build = false;  // cdn_cost strictly below the avoided cost
  FeeReport fee;       // unchanged by the decision
};

CdnDecision cdn_breakeven(const TrafficProfile& profile, const LocalizationPolicy& loc,
                          const CostParams& c, const DistanceSummary& d_full, double cdn_cost);

// ISP video cost when the content provider peers directly at the subset N.
double isp_cost_cp_peering(double v_v, double x_d, const CostParams& c,
                           const DistanceSummary& d_subset);

// Fee leaving the ISP's net video cost equal to delivery through a transit
// provider peering at all M points. `fee` is the sum of three terms that
// separate localization from peering-point count; alternate_form_fee is the
// unrearranged form.
FeeReport fee_cp_isp(double v_v, double x_d, const CostParams& c,
                     const DistanceSummary& d_subset, const DistanceSummary& d_full);

// (ED_hot(N) - 0.5 ED_hot(M)) / (ED_hot(N) - ED_cold(N)). Raises
// UndefinedConditionError when hot and cold coincide (e.g. N = 1).
SettlementPoint settlement_x_cp(const DistanceSummary& d_subset, const DistanceSummary& d_full);

}  // namespace peerfee
