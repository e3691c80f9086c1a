#include <cstdlib>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "peerfee/errors.hpp"

namespace peerfee::app {

namespace {

constexpr const char* kFooter = R"(Output columns (CSV, header row, one record per point):
  distances         n,members,ed_hot_down_km,ed_cold_down_km
  fee               scenario,n,v_u,v_d,v_v,r,r_prime,x,x_d,c_b,ed_hot_down_n_km,
                    ed_cold_down_n_km,ed_hot_down_m_km,ed_cold_down_m_km,fee,isp_cost,
                    counterparty_cost,transit_isp_net_cost,alternate_form_fee,normalizer,
                    normalized_fee   (--format json adds the fee decomposition)
  figure 2          r,r_prime,x,normalized_isp_cost
  figure 3          r_prime,x,normalized_tp_cost
  figure 4          r,r_prime,x,normalized_fee
  figure 5          r,r_prime,x_settlement,feasible
  figure 6          n,x_d,normalized_fee
  figure 7          n,defined,x_d_settlement,feasible
  settlement-curve  tp: r,r_prime,defined,x_settlement,feasible
                    cp: n,members,defined,x_d_settlement,feasible
  cdn-breakeven     v_u,v_d,v_v,x,c_b,ed_hot_down_m_km,avoided_backbone_cost,cdn_cost,
                    build,fee,normalized_fee
Normalized values divide by c_b*v_u*ED_hot(M) (ISP and transit scenarios) or
c_b*v_v*ED_hot(M) (content provider). A positive fee is paid to the ISP.
Config files hold `key = value` lines using the long option names; flags win.
Exit codes: 0 success, 1 usage error, 2 data error.)";

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Backbone-cost peering fees for hot/cold-potato interconnection", "peerfee"};
  app.footer(kFooter);
  app.fallthrough();
  app.require_subcommand(1, 1);

  std::string config_path;
  app.add_option("--config", config_path, "Flat key = value config file");

  struct Flag {
    const char* key;
    const char* help;
  };
  static constexpr Flag kFlags[] = {
      {"county-file", "County CSV (default: $PEERFEE_DATA_DIR/us_counties.csv)"},
      {"ixp-file", "IXP catalog CSV overriding the built-in 12 cities"},
      {"peering-n", "Peer at the first N catalog IXPs"},
      {"peering-ids", "Peer at these comma-separated IXP ids"},
      {"v-u", "Upstream volume"},
      {"v-d", "Non-video downstream volume"},
      {"v-v", "Video downstream volume"},
      {"r", "Non-video downstream / upstream ratio (sets v_u = 1)"},
      {"r-prime", "Video downstream / upstream ratio (sets v_u = 1)"},
      {"x", "Transit-provider video localization in [0, 1]"},
      {"x-d", "Content-provider video localization in [0, 1]"},
      {"c-b", "Backbone cost per unit volume per km (default 1)"},
      {"cdn-cost", "Cost of building the CDN"},
      {"scenario", "fee: isp | tp | tp-hot | cp"},
      {"figure", "figure: 2..7"},
      {"kind", "settlement-curve: tp | cp"},
      {"sweep", "name=start:stop:step or name=v1,v2,... (x, x_d, r, r_prime, n)"},
      {"output", "Output directory (default: stdout)"},
      {"format", "fee output: csv | json"},
  };
  std::map<std::string, std::string> flag_values;
  std::map<std::string, CLI::Option*> options;
  for (const auto& f : kFlags) {
    options[f.key] = app.add_option(std::string("--") + f.key, flag_values[f.key], f.help);
  }
  bool svg = false;
  auto* svg_flag = app.add_flag("--svg", svg, "figure: also write an SVG chart (needs --output)");

  auto* distances = app.add_subcommand("distances", "Expected backbone distances for N = 1..M");
  auto* fee = app.add_subcommand("fee", "Fair peering fee report");
  auto* figure = app.add_subcommand("figure", "Data series behind a figure");
  auto* settlement = app.add_subcommand("settlement-curve", "Localization for a zero fee");
  auto* cdn = app.add_subcommand("cdn-breakeven", "Transit-provider CDN build decision");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "peerfee: " << e.what() << "\nRun with --help for more information.\n";
    return kExitUsage;
  }

  try {
    std::map<std::string, std::string> values;
    if (!config_path.empty()) values = parse_config_file(config_path);
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) values[key] = flag_values[key];
    }
    if (svg_flag->count() > 0) values["svg"] = svg ? "true" : "false";

    std::optional<std::filesystem::path> data_dir;
    if (const char* env = std::getenv(kDataDirEnv); env && *env) data_dir = env;
    const ScenarioConfig cfg = build_config(values, data_dir);

    const Dataset ds = load_dataset(cfg);
    Output sink(cfg.output_dir, out);
    if (distances->parsed()) cmd_distances(cfg, ds, sink);
    else if (fee->parsed()) cmd_fee(cfg, ds, sink);
    else if (figure->parsed()) cmd_figure(cfg, ds, sink);
    else if (settlement->parsed()) cmd_settlement_curve(cfg, ds, sink);
    else if (cdn->parsed()) cmd_cdn_breakeven(cfg, ds, sink);
    for (const auto& path : sink.written()) err << "wrote " << path.string() << "\n";
    return kExitOk;
  } catch (const UsageError& e) {
    err << "peerfee: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractError& e) {
    err << "peerfee: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UndefinedConditionError& e) {
    err << "peerfee: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "peerfee: data error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace peerfee::app
