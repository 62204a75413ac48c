#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "hnerve/report_json.hpp"

using testing_helpers::data_path;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hnerve::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, NervesRendersTable) {
  const auto r = run({"nerves", data_path("example.facets")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("N_3        1     0     0     0     2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("N_4        3     0     0     0     4"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("H~_-1(N_5) = 1"), std::string::npos);
}

TEST(Cli, SingleFacetFootnote) {
  const auto r = run({"nerves", data_path("simplex.facets")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("H~_-1(N_6) = 1"), std::string::npos) << r.out;
}

TEST(Cli, ScalarCommands) {
  EXPECT_NE(run({"depth", data_path("example.facets")}).out.find("depth 3"), std::string::npos);
  EXPECT_NE(run({"fvector", data_path("example.facets")}).out.find("(1, 8, 17, 14, 4)"), std::string::npos);
  EXPECT_NE(run({"hvector", data_path("example.facets")}).out.find("(1, 4, -1, 0, 0)"), std::string::npos);
  EXPECT_NE(run({"depth", data_path("disconnected.facets")}).out.find("depth 1"), std::string::npos);
  EXPECT_NE(run({"hvector", data_path("simplex.facets")}).out.find("(1, 0, 0, 0, 0, 0)"), std::string::npos);
  EXPECT_NE(run({"homology", "--field", "gf:2", data_path("hollow_triangle.facets")}).out.find("H~_1 = 1"),
            std::string::npos);
}

TEST(Cli, Regularity) {
  EXPECT_NE(run({"reg", data_path("path.ideal")}).out.find("reg 2"), std::string::npos);
  EXPECT_NE(run({"reg", "--module", data_path("path.ideal")}).out.find("reg(S/I) 1"), std::string::npos);
  EXPECT_NE(run({"reg", "--via-dual", data_path("path.ideal")}).out.find("reg 2"), std::string::npos);
  const auto r = run({"--json", "reg", data_path("nonsquarefree.ideal")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(hnerve::Json::parse(r.out)["reg"], hnerve::regularity(hnerve::read_ideal_file(data_path("nonsquarefree.ideal")).ideal).reg);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"nerves", data_path("thirty_facets.facets")}).code, 3);
  EXPECT_EQ(run({"--max-facets", "40", "--max-faces", "100", "nerves", data_path("thirty_facets.facets")}).code, 3);
  EXPECT_EQ(run({"nerves", data_path("bad.facets")}).code, 2);
  EXPECT_EQ(run({"nerves", data_path("missing.facets")}).code, 2);
  EXPECT_EQ(run({"reg", "--via-dual", data_path("nonsquarefree.ideal")}).code, 4);
  EXPECT_EQ(run({"frobnicate"}).code, 4);
  EXPECT_EQ(run({"nerves"}).code, 4);
  EXPECT_EQ(run({"--field", "gf:6", "nerves", data_path("example.facets")}).code, 4);
  EXPECT_EQ(run({"check"}).code, 4);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CheckListsTenChecks) {
  const auto r = run({"check", data_path("example.facets")});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("10 checks"), std::string::npos);
  EXPECT_NE(r.out.find("0 boundary violations, 0 euler violations"), std::string::npos);
}

TEST(Cli, CheckRandomIsDeterministic) {
  const auto a = run({"check", "--random", "15", "--seed", "7"});
  const auto b = run({"check", "--random", "15", "--seed", "7"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("PASS  polarization_dual"), std::string::npos);
}

TEST(Cli, JsonIsDeterministicAndParses) {
  const auto a = run({"--json", "nerves", data_path("bowtie.facets")});
  EXPECT_EQ(a.out, run({"--json", "nerves", data_path("bowtie.facets")}).out);
  const auto j = hnerve::Json::parse(a.out);
  EXPECT_EQ(j["depth"]["value"], 2);
  EXPECT_EQ(j["cm"], false);
}

}  // namespace
