#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "secrecy/cli.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/relay.hpp"
#include "secrecy/wiretap.hpp"

using namespace secrecy;
using namespace secrecy::cli;

namespace {

Json doc(const char* text) { return Json::parse(text); }

std::string data(const char* name) { return std::string(SECRECY_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(SweepAxis, Points) {
  const auto lin = SweepAxis{0, 1, 5, false}.points();
  EXPECT_EQ(lin, (std::vector<double>{0, 0.25, 0.5, 0.75, 1}));
  const auto lg = SweepAxis{1, 1e6, 7, true}.points();
  ASSERT_EQ(lg.size(), 7u);
  for (int i = 0; i < 7; ++i) EXPECT_NEAR(lg[i], std::pow(10.0, i), 1e-9 * lg[i]);
  EXPECT_EQ(lg.front(), 1.0);
  EXPECT_EQ(lg.back(), 1e6);
}

TEST(SweepConfig, ParsesDefaults) {
  const auto c = parse_sweep_config(doc(R"({"model":"wiretap","fixed":{"p":1,"pr":2,"h1":1,"h2":1},
      "outputs":["r1_star"]})"));
  EXPECT_EQ(c.model, "wiretap");
  EXPECT_EQ(c.format, Format::json);
  EXPECT_EQ(c.grid, 512);
  EXPECT_TRUE(c.swept.empty());
}

TEST(SweepConfig, Rejects) {
  const char* bad[] = {
      R"({"model":"wiretap","outputs":["r1_star"],"extra":1})",
      R"({"model":"laser","outputs":["r1_star"]})",
      R"({"model":"wiretap","outputs":["not_a_quantity"]})",
      R"({"model":"wiretap","fixed":{"p1":3},"outputs":["r1_star"]})",
      R"({"model":"wiretap","fixed":{"p":1},"swept":{"p":{"min":0,"max":1,"count":3}},"outputs":["r1_star"]})",
      R"({"model":"wiretap","swept":{"p":{"min":0,"max":1,"count":1}},"outputs":["r1_star"]})",
      R"({"model":"wiretap","swept":{"p":{"min":2,"max":1,"count":3}},"outputs":["r1_star"]})",
      R"({"model":"wiretap","swept":{"p":{"min":0,"max":1,"count":3,"scale":"log"}},"outputs":["r1_star"]})",
      R"({"model":"wiretap","swept":{"p":{"min":0,"max":1,"count":3,"step":2}},"outputs":["r1_star"]})",
      R"({"model":"relay","outputs":["achievable_r1"],"format":"xml"})",
      R"({"model":"relay","outputs":[]})",
  };
  for (const char* text : bad) EXPECT_THROW(parse_sweep_config(doc(text)), DomainError) << text;
}

TEST(SweepConfig, UnknownQuantityListsValidNames) {
  try {
    parse_sweep_config(doc(R"({"model":"relay","outputs":["bogus"]})"));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("achievable_r1"), std::string::npos);
  }
}

TEST(Sweep, RowOrderLastAxisFastest) {
  const auto c = parse_sweep_config(doc(R"({"model":"wiretap","fixed":{"h1":1,"h2":1},
      "swept":{"p":{"min":1,"max":2,"count":2},"pr":{"min":0,"max":2,"count":3}},
      "outputs":["r1_no_feedback"]})"));
  const auto t = run_sweep(c);
  EXPECT_EQ(t.columns, (std::vector<std::string>{"p", "pr", "r1_no_feedback"}));
  ASSERT_EQ(t.rows.size(), 6u);
  const double expect[6][2] = {{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}};
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(t.rows[i][0], expect[i][0]);
    EXPECT_EQ(t.rows[i][1], expect[i][1]);
    EXPECT_EQ(t.rows[i][2], wiretap::r1_no_feedback({expect[i][0], expect[i][1], 1, 1, 0, 0}));
  }
}

TEST(Sweep, UnboundedGapRowsMatchDemo) {
  std::ifstream f(data("unbounded_sweep.json"));
  const auto t = run_sweep(parse_sweep_config(Json::parse(f)));
  ASSERT_EQ(t.rows.size(), 4u);
  for (const auto& row : t.rows) {
    const auto d = wiretap::unbounded_gap_demo(row[0]);
    EXPECT_EQ(row[1], d.no_feedback_upper);
    EXPECT_EQ(row[2], d.feedback_achievable);
    EXPECT_EQ(row[3], d.feedback_achievable - d.no_feedback_upper);
    EXPECT_EQ(row[4], 1.0);
  }
}

TEST(Sweep, RelayPowerColumnNondecreasing) {
  std::ifstream f(data("relay_power.json"));
  const auto c = parse_sweep_config(Json::parse(f));
  EXPECT_EQ(c.format, Format::csv);
  const auto t = run_sweep(c);
  ASSERT_EQ(t.rows.size(), 3u);
  for (std::size_t i = 1; i < t.rows.size(); ++i) EXPECT_GE(t.rows[i][1], t.rows[i - 1][1]);
  EXPECT_NEAR(t.rows[0][3], 0.59632253897119795, 1e-12);
  EXPECT_LT(t.rows[2][1], t.rows[2][3]);
}

TEST(Sweep, OnePointMatchesDirectCommand) {
  const auto path = std::filesystem::temp_directory_path() / "secrecy_one_point.json";
  {
    std::ofstream f(path);
    f << R"({"model":"wiretap","fixed":{"p":100,"pr":5,"h1":1,"h2":10},
             "outputs":["r1_cap","r2_cap","sum_cap"],"format":"csv"})";
  }
  std::ostringstream sweep_out, direct_out, err;
  ASSERT_EQ(run({"sweep", "--config", path.string()}, sweep_out, err), 0) << err.str();
  ASSERT_EQ(run({"wiretap", "outer", "--p", "100", "--pr", "5", "--h1", "1", "--h2", "10"},
                direct_out, err),
            0);
  std::filesystem::remove(path);

  const auto direct = Json::parse(direct_out.str())["outputs"];
  std::istringstream lines(sweep_out.str());
  std::string header, values;
  std::getline(lines, header);
  std::getline(lines, values);
  EXPECT_EQ(header, "r1_cap,r2_cap,sum_cap");
  std::istringstream cells(values);
  std::string cell;
  for (const char* key : {"r1_cap", "r2_cap", "sum_cap"}) {
    std::getline(cells, cell, ',');
    EXPECT_EQ(std::stod(cell), direct[key].get<double>()) << key;
  }
}

TEST(Sweep, JsonAndCsvAgree) {
  std::ostringstream js, cs, err;
  ASSERT_EQ(run({"sweep", "--config", data("unbounded_sweep.json")}, js, err), 0);
  ASSERT_EQ(run({"sweep", "--config", data("unbounded_sweep.json"), "--format", "csv"}, cs, err), 0);
  const auto rows = Json::parse(js.str())["outputs"]["rows"];
  std::istringstream lines(cs.str());
  std::string line;
  std::getline(lines, line);
  std::size_t r = 0;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string cell;
    std::size_t c = 0;
    while (std::getline(cells, cell, ',')) {
      EXPECT_EQ(std::stod(cell), rows[r][c].get<double>());
      ++c;
    }
    ++r;
  }
  EXPECT_EQ(r, rows.size());
}
