#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "ordcover/error.hpp"

#ifndef ORDCOVER_TEST_DATA_DIR
#error "ORDCOVER_TEST_DATA_DIR must point at tests/data"
#endif

namespace ordcover::cli {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ORDCOVER_TEST_DATA_DIR) + "/" + name; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(CliField, SummaryAndTables) {
  auto r = invoke({"field", "--order", "4"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("modulus=x^2+x+1"), std::string::npos);

  r = invoke({"field", "--order", "3", "--table"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "+,0,1,2\n0,0,1,2\n1,1,2,0\n2,2,0,1\n\n*,0,1,2\n0,0,0,0\n1,0,1,2\n2,0,2,1\n");

  r = invoke({"field", "--order", "6"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("NotPrimePower"), std::string::npos);
}

TEST(CliMols, SquaresAndVerifyReport) {
  auto r = invoke({"mols", "--order", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "2,3,1\n3,1,2\n1,2,3\n\n3,1,2\n2,3,1\n1,2,3\n");

  r = invoke({"mols", "--order", "4", "--verify"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("orthogonal,2,3,pass"), std::string::npos);
  EXPECT_NE(r.out.find("result,pass"), std::string::npos);
}

TEST(CliBibd, LinesAndJson) {
  auto r = invoke({"bibd", "--q", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out).size(), 6u);
  EXPECT_EQ(lines(r.out).front(), "1,2");

  r = invoke({"bibd", "--q", "3", "--format", "json"});
  EXPECT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_TRUE(doc.is_array());
  EXPECT_EQ(doc.size(), 12u);
  EXPECT_EQ(doc[0], nlohmann::json::parse("[1,2,3]"));

  r = invoke({"bibd", "--q", "5", "--validate"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.err.find("result=pass"), std::string::npos);

  r = invoke({"bibd"});
  EXPECT_EQ(r.status, 2);
}

TEST(CliBibd, CheckFiles) {
  auto r = invoke({"bibd", "check", data("nine_point_design.txt")});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("replication=4"), std::string::npos);

  r = invoke({"bibd", "check", data("sixteen_point_design_as_printed.txt")});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("first_counterexample=point 1 appears in 6 blocks, expected 5"), std::string::npos);

  r = invoke({"bibd", "check", data("does_not_exist.txt")});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("InvalidDesign"), std::string::npos);
}

TEST(CliBibd, ParseDesignFormats) {
  std::istringstream json("[[1,2,3],[4,5,6]]");
  auto file = parse_design(json);
  EXPECT_EQ(file.design.v, 6u);
  EXPECT_EQ(file.design.blocks.size(), 2u);
  EXPECT_FALSE(file.t.has_value());

  std::istringstream text("# comment\n4 2 1\n1, 2\n3,4\n\n");
  file = parse_design(text);
  EXPECT_EQ(file.design.v, 4u);
  EXPECT_EQ(file.t, 2u);
  EXPECT_EQ(file.lambda, 1u);
  EXPECT_EQ(file.design.blocks, (std::vector<Block>{{1, 2}, {3, 4}}));

  std::istringstream bad("1,x,3\n");
  EXPECT_THROW(parse_design(bad), ordcover::Error);
  std::istringstream bad_json("[[1,-2]]");
  EXPECT_THROW(parse_design(bad_json), ordcover::Error);
}

TEST(CliAssign, TableLayout) {
  auto r = invoke({"assign", "--proposals", "9", "--capacity", "3", "--format", "table",
                   "--design", data("nine_point_design.txt")});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows[0], "r1  p1 p2 p3");
  EXPECT_EQ(rows[3], "r4  p1       p4       p7");
  EXPECT_EQ(rows[11], "r12       p3       p6 p7");

  r = invoke({"assign", "--proposals", "9", "--capacity", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out).size(), 12u);
}

TEST(CliAssign, CsvJsonAndLabels) {
  auto r = invoke({"assign", "--proposals", "4", "--capacity", "2", "--format", "csv"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out).front(), "referee,proposal");
  EXPECT_EQ(lines(r.out).size(), 13u);

  r = invoke({"assign", "--proposals", "27", "--capacity", "9", "--format", "json"});
  EXPECT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["n"], 27);
  EXPECT_EQ(doc["k"], 9);
  EXPECT_EQ(doc["referees"].size(), 12u);
  EXPECT_EQ(doc["referees"][0].size(), 9u);

  r = invoke({"assign", "--proposals", "9", "--capacity", "3", "--labels", data("nine_labels.txt")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out)[0], "r1  alpha   beta    gamma");

  r = invoke({"assign", "--proposals", "16", "--capacity", "4", "--labels", data("nine_labels.txt")});
  EXPECT_EQ(r.status, 2);
}

TEST(CliAssign, PreconditionFailuresNameTheCondition) {
  auto r = invoke({"assign", "--proposals", "10", "--capacity", "5"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("NotDivisible"), std::string::npos);

  r = invoke({"assign", "--proposals", "36", "--capacity", "6"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("NotPrimePower"), std::string::npos);

  r = invoke({"assign", "--proposals", "8", "--capacity", "8"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("OutOfRegime"), std::string::npos);
}

TEST(CliAssign, NonCoveringDesignFails) {
  auto r = invoke({"assign", "--proposals", "16", "--capacity", "4", "--design",
                   data("sixteen_point_design_as_printed.txt")});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("coverage failed"), std::string::npos);
}

TEST(CliBounds, SingleAndGrid) {
  auto r = invoke({"bounds", "--proposals", "32", "--capacity", "8"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("lower=18\n"), std::string::npos);
  EXPECT_NE(r.out.find("upper_new=20\n"), std::string::npos);
  EXPECT_NE(r.out.find("upper_prior=28\n"), std::string::npos);

  r = invoke({"bounds", "--proposals", "32", "--capacity", "8", "--format", "csv"});
  EXPECT_EQ(r.out,
            "n,k,lower,upper_new,upper_prior,ratio_new,ratio_prior,recommended\n"
            "32,8,18,20,28,35/31,49/31,bibd\n");

  r = invoke({"bounds", "--proposals", "32", "--capacity", "8", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["ratio_new"]["num"], 35);
  EXPECT_EQ(doc["recommended"], "bibd");

  r = invoke({"bounds", "--grid", "6"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out).size(), 1u + 3 + 4 + 5);  // n = 4, 5, 6

  r = invoke({"bounds", "--proposals", "32", "--capacity", "8", "--prior-form", "kk1"});
  EXPECT_NE(r.out.find("upper_prior=32\n"), std::string::npos);

  r = invoke({"bounds", "--proposals", "5"});
  EXPECT_EQ(r.status, 2);
  r = invoke({"bounds", "--proposals", "5", "--capacity", "9"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("InvalidRange"), std::string::npos);
}

TEST(CliOracle, MinimumAndBudget) {
  auto r = invoke({"oracle", "--proposals", "7", "--capacity", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out)[1], "minimum=7");
  EXPECT_EQ(lines(r.out).size(), 3u + 7u);

  r = invoke({"oracle", "--proposals", "9", "--capacity", "4", "--max-blocks", "7"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("limit=max_blocks"), std::string::npos);

  r = invoke({"oracle", "--proposals", "12", "--capacity", "3"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("TooLarge"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).status, 2);
  EXPECT_EQ(invoke({"frobnicate"}).status, 2);
  EXPECT_EQ(invoke({"assign", "--proposals", "9"}).status, 2);
  EXPECT_EQ(invoke({"assign", "--proposals", "9", "--capacity", "3", "--format", "xml"}).status, 2);
  EXPECT_EQ(invoke({"--help"}).status, 0);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands{
      {"field", "--order", "9", "--table"},
      {"mols", "--order", "7", "--verify"},
      {"bibd", "--q", "4", "--format", "json"},
      {"assign", "--proposals", "32", "--capacity", "8"},
      {"bounds", "--grid", "30"},
      {"oracle", "--proposals", "8", "--capacity", "3"},
  };
  for (const auto& c : commands) {
    const auto a = invoke(c);
    const auto b = invoke(c);
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
  }
}

}  // namespace
}  // namespace ordcover::cli
