#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"
#include "csv.hpp"
#include "fixtures.hpp"
#include "sweep.hpp"

namespace peerfee::app {
namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args, bool with_counties = true) {
  if (with_counties) {
    args.push_back("--county-file");
    args.push_back(testing::us_county_file().string());
  }
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

double cell(const CsvTable& t, std::size_t row, std::string_view col) {
  return std::stod(t.rows.at(row).at(t.column(col)));
}

class TempDir {
 public:
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "peerfee-test-XXXXXX").string();
    path_ = ::mkdtemp(tmpl.data());
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(FormatNumber, NineSignificantDigits) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333");
  EXPECT_EQ(format_number(1776.311041234), "1776.31104");
  EXPECT_EQ(format_number(-2.5), "-2.5");
  EXPECT_EQ(format_number(1e-20), "1e-20");
}

TEST(Csv, RoundTrip) {
  CsvTable t{{"a", "b"}, {{"1", "x,y"}, {"2", "say \"hi\""}}};
  const CsvTable back = parse_csv(t.str());
  EXPECT_EQ(back.header, t.header);
  EXPECT_EQ(back.rows, t.rows);
  EXPECT_THROW(t.column("c"), std::out_of_range);
}

TEST(Sweep, RangeAndList) {
  const SweepSpec a = parse_sweep("x=0:1:0.25");
  EXPECT_EQ(a.variable, SweepVariable::x);
  EXPECT_EQ(a.values, (std::vector<double>{0, 0.25, 0.5, 0.75, 1}));
  EXPECT_EQ(range_points(0, 1, 0.01).size(), 101u);
  EXPECT_EQ(range_points(0, 1, 0.01).back(), 1.0);
  EXPECT_EQ(parse_sweep("r'=1,2,4").variable, SweepVariable::r_prime);
  EXPECT_EQ(parse_sweep("x_d=0.1").values, std::vector<double>{0.1});
  EXPECT_EQ(parse_sweep("N=1:12:1").values.size(), 12u);
}

TEST(Sweep, Rejections) {
  for (const char* bad : {"x", "y=1", "x=", "x=1:0:0.1", "x=0:1:0", "x=0:1:-1", "n=1.5",
                          "n=0", "x=0:1e9:1e-3", "x=a,b", "x=nan"}) {
    EXPECT_THROW(parse_sweep(bad), UsageError) << bad;
  }
}

TEST(Config, ParsesFlatFile) {
  std::istringstream in("# a run\nscenario = tp\nr_prime=2 # trailing\n\n"
                        "county-file = \"/data/my counties.csv\"\nx = 0.25\n");
  const auto m = parse_config_text(in, "run.cfg");
  EXPECT_EQ(m.at("scenario"), "tp");
  EXPECT_EQ(m.at("r-prime"), "2");
  EXPECT_EQ(m.at("county-file"), "/data/my counties.csv");
  const ScenarioConfig cfg = build_config(m, std::nullopt);
  EXPECT_EQ(cfg.county_file, "/data/my counties.csv");
  EXPECT_EQ(*cfg.r_prime, 2.0);
  EXPECT_EQ(*cfg.x, 0.25);
  EXPECT_EQ(cfg.c_b, 1.0);
}

TEST(Config, Rejections) {
  auto parse = [](const char* text) {
    std::istringstream in(text);
    return parse_config_text(in, "bad.cfg");
  };
  EXPECT_THROW(parse("colour = red\n"), UsageError);
  EXPECT_THROW(parse("x = 1\nx = 2\n"), UsageError);
  EXPECT_THROW(parse("just words\n"), UsageError);
  auto build = [](std::map<std::string, std::string> m) { return build_config(m, std::nullopt); };
  EXPECT_THROW(build({{"peering-n", "3"}, {"peering-ids", "0,1"}}), UsageError);
  EXPECT_THROW(build({{"v-u", "1"}, {"r", "2"}}), UsageError);
  EXPECT_THROW(build({{"x", "half"}}), UsageError);
  EXPECT_THROW(build({{"c-b", "0"}}), UsageError);
  EXPECT_THROW(build({{"scenario", "cdn"}}), UsageError);
  EXPECT_THROW(build({{"figure", "8"}}), UsageError);
  EXPECT_THROW(build({{"format", "xml"}}), UsageError);
}

TEST(Config, DataDirSuppliesDefaultCountyFile) {
  const ScenarioConfig cfg = build_config({}, std::filesystem::path("/srv/peerfee"));
  EXPECT_EQ(cfg.county_file, std::filesystem::path("/srv/peerfee/us_counties.csv"));
}

TEST(Cli, DistancesTable) {
  const CliResult r = run({"distances"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const CsvTable t = parse_csv(r.out);
  ASSERT_EQ(t.rows.size(), 12u);
  EXPECT_EQ(t.header, (std::vector<std::string>{"n", "members", "ed_hot_down_km",
                                                "ed_cold_down_km"}));
  EXPECT_EQ(t.rows.back()[t.column("ed_cold_down_km")], "0");
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    EXPECT_LE(cell(t, i, "ed_cold_down_km"), cell(t, i - 1, "ed_cold_down_km"));
  }
}

TEST(Cli, DistancesOnSyntheticFixture) {
  TempDir dir;
  const testing::LineGeography line;
  const auto counties = dir.path() / "line.csv";
  const auto ixps = dir.path() / "ixps.csv";
  std::ofstream(counties) << "id,name,longitude,latitude,population,land_area_km2\n"
                          << "w,West,0,0,1,0\ne,East,"
                          << std::setprecision(17) << testing::LineGeography::east_longitude(1000)
                          << ",0,1,0\n";
  std::ofstream(ixps) << "id,name,longitude,latitude\n0,West,0,0\n1,East," << std::setprecision(17)
                      << testing::LineGeography::east_longitude(1000) << ",0\n";
  const CliResult r = run({"distances", "--county-file", counties.string(), "--ixp-file", ixps.string()},
                    false);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const CsvTable t = parse_csv(r.out);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0][t.column("ed_hot_down_km")], "500");
  EXPECT_EQ(t.rows[0][t.column("ed_cold_down_km")], "500");
  EXPECT_EQ(t.rows[1][t.column("ed_hot_down_km")], "500");
  EXPECT_EQ(t.rows[1][t.column("ed_cold_down_km")], "0");
}

TEST(Cli, TransitFeeZeroAtUnitRatioHalfLocalized) {
  const CliResult r = run({"fee", "--scenario", "tp", "--r", "1", "--r-prime", "1", "--x", "0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const CsvTable t = parse_csv(r.out);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0][t.column("fee")], "0");
  EXPECT_EQ(t.rows[0][t.column("isp_cost")], t.rows[0][t.column("counterparty_cost")]);
}

TEST(Cli, ContentProviderFeeZeroAtFullPeeringHalfLocalized) {
  const CliResult r = run({"fee", "--scenario", "cp", "--peering-n", "12", "--x-d", "0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const CsvTable t = parse_csv(r.out);
  EXPECT_EQ(t.rows[0][t.column("fee")], "0");
}

TEST(Cli, FeeJsonCarriesDecomposition) {
  const CliResult r = run({"fee", "--scenario", "cp", "--peering-n", "6", "--x-d", "0.3", "--format",
                     "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"peering_points_hot\""), std::string::npos);
  EXPECT_NE(r.out.find("\"normalizer_basis\""), std::string::npos);
}

TEST(Cli, FeeSweepEmitsOneRowPerPoint) {
  const CliResult r = run({"fee", "--scenario", "tp", "--r", "2", "--r-prime", "1", "--sweep",
                     "x=0:1:0.1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const CsvTable t = parse_csv(r.out);
  ASSERT_EQ(t.rows.size(), 11u);
  EXPECT_EQ(t.rows.back()[t.column("fee")], "0");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"fee", "--scenario", "isp", "--v-u", "1", "--v-d", "2", "--v-v", "1"}).code,
            kExitUsage);
  EXPECT_EQ(run({"figure", "--figure", "9"}).code, kExitUsage);
  EXPECT_EQ(run({"fee", "--scenario", "tp", "--r", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({}, false).code, kExitUsage);
  EXPECT_EQ(run({"distances", "--county-file", "/nonexistent.csv"}, false).code, kExitData);
  EXPECT_EQ(run({"settlement-curve", "--kind", "tp", "--sweep", "r_prime=0,1", "--r", "1"}).code,
            kExitOk);
  EXPECT_EQ(run({"--help"}, false).code, kExitOk);
}

TEST(Cli, MissingFieldIsNamed) {
  const CliResult r = run({"fee", "--scenario", "cp", "--peering-n", "4"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("x-d"), std::string::npos) << r.err;
}

TEST(Cli, MalformedCountyFileIsDataError) {
  TempDir dir;
  const auto bad = dir.path() / "bad.csv";
  std::ofstream(bad) << "id,name,longitude,latitude,population,land_area_km2\n1,A,-90,95,1,0\n";
  const CliResult r = run({"distances", "--county-file", bad.string()}, false);
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find(":2"), std::string::npos) << r.err;
}

TEST(Cli, ConfigFileWithFlagOverride) {
  TempDir dir;
  const auto cfg = dir.path() / "run.cfg";
  std::ofstream(cfg) << "scenario = tp\nr = 1\nr_prime = 1\nx = 0\n";
  const CliResult base = run({"fee", "--config", cfg.string()});
  ASSERT_EQ(base.code, kExitOk) << base.err;
  EXPECT_EQ(parse_csv(base.out).rows[0][parse_csv(base.out).column("normalized_fee")], "0.5");
  const CliResult over = run({"fee", "--config", cfg.string(), "--x", "0.5"});
  ASSERT_EQ(over.code, kExitOk) << over.err;
  EXPECT_EQ(parse_csv(over.out).rows[0][parse_csv(over.out).column("fee")], "0");
}

TEST(Cli, DataDirEnvironmentVariable) {
  ::setenv(kDataDirEnv, testing::data_dir().c_str(), 1);
  const CliResult r = run({"distances", "--peering-n", "3"}, false);
  ::unsetenv(kDataDirEnv);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(parse_csv(r.out).rows.size(), 1u);
}

TEST(Cli, CdnBreakeven) {
  const CliResult r = run({"cdn-breakeven", "--v-u", "1", "--v-d", "1", "--v-v", "2", "--x", "0.5",
                     "--cdn-cost", "100"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const CsvTable t = parse_csv(r.out);
  EXPECT_EQ(t.rows[0][t.column("build")], "1");
}

TEST(Cli, FiguresAndSvgWrittenToDirectory) {
  TempDir dir;
  for (int f = 2; f <= 7; ++f) {
    const CliResult r = run({"figure", "--figure", std::to_string(f), "--svg", "--output",
                       dir.path().string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto csv = dir.path() / ("figure" + std::to_string(f) + ".csv");
    const auto svg = dir.path() / ("figure" + std::to_string(f) + ".svg");
    ASSERT_TRUE(std::filesystem::exists(csv));
    ASSERT_TRUE(std::filesystem::exists(svg));
    EXPECT_EQ(slurp(svg).rfind("<svg", 0), 0u);
    EXPECT_GT(parse_csv(slurp(csv)).rows.size(), 5u);
  }
  EXPECT_EQ(run({"figure", "--figure", "2", "--svg"}).code, kExitUsage);
}

TEST(Cli, FigureSevenEndsAtOneHalf) {
  const CliResult r = run({"figure", "--figure", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const CsvTable t = parse_csv(r.out);
  EXPECT_EQ(t.rows.front()[t.column("defined")], "0");
  EXPECT_EQ(t.rows.back()[t.column("x_d_settlement")], "0.5");
}

TEST(Cli, FigureFourCrossesZeroAtSettlementPoint) {
  const CliResult r = run({"figure", "--figure", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const CsvTable t = parse_csv(r.out);
  // Group consecutive rows by (r, r'); each series runs x = 0..1.
  for (std::size_t start = 0; start < t.rows.size(); start += 101) {
    const double r_ = cell(t, start, "r"), rp = cell(t, start, "r_prime");
    const auto s = settlement_x_tp(r_, rp);
    if (!s.feasible) continue;
    for (std::size_t i = start + 1; i < start + 101; ++i) {
      const double a = cell(t, i - 1, "normalized_fee"), b = cell(t, i, "normalized_fee");
      if (a > 0.0 && b <= 0.0) {
        EXPECT_LE(cell(t, i - 1, "x"), s.value + 1e-9);
        EXPECT_GE(cell(t, i, "x"), s.value - 1e-9);
      }
    }
  }
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::string> args = {"fee", "--scenario", "cp", "--sweep", "n=1:12:1",
                                         "--x-d", "0.7"};
  const CliResult a = run(args), b = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace peerfee::app
