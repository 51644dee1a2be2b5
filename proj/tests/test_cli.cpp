#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gorcurve/cli.hpp"

using namespace gorcurve;
using nlohmann::json;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Analyze, ExampleText) {
  auto o = run_cli({"analyze", "11", "17", "25", "19"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("classification: GorensteinNonCI"), std::string::npos);
  EXPECT_NE(o.out.find("period: 14"), std::string::npos);
  EXPECT_NE(o.out.find("frobenius: 65"), std::string::npos);
  EXPECT_NE(o.out.find("  [-4 0 1 1]"), std::string::npos);
  EXPECT_NE(o.out.find("u: (7,7,7,7)"), std::string::npos);
  EXPECT_NE(o.out.find("v: (3,5,7,5)"), std::string::npos);
}

TEST(Analyze, ExampleJson) {
  auto o = run_cli({"analyze", "11", "17", "25", "19", "--json"});
  ASSERT_EQ(o.code, 0) << o.err;
  json a = json::parse(o.out);
  EXPECT_EQ(a["sequence"], json({11, 17, 25, 19}));
  EXPECT_EQ(a["classification"], "GorensteinNonCI");
  EXPECT_EQ(a["period"], 14);
  EXPECT_EQ(a["u"], json({7, 7, 7, 7}));
  EXPECT_EQ(a["v"], json({3, 5, 7, 5}));
  EXPECT_EQ(a["principal_matrix"], json({{-4, 0, 1, 1}, {1, -4, 0, 3}, {3, 1, -2, 0}, {0, 3, 1, -4}}));
  EXPECT_EQ(a["bresinsky"]["c"], json({4, 4, 2, 4}));
  EXPECT_EQ(a["bresinsky"]["perm"], json({1, 2, 3, 4}));
  EXPECT_EQ(a["profile"]["frobenius"], 65);
  auto s = Sequence::make({11, 17, 25, 19});
  EXPECT_EQ(presentation_from_json(a["presentation"]), build_presentation(s, *detect_bresinsky_form(s)));
}

TEST(Analyze, GeneratorOrderIsKeptInUAndV) {
  auto o = run_cli({"analyze", "19", "25", "11", "17", "--json"});
  ASSERT_EQ(o.code, 0) << o.err;
  json a = json::parse(o.out);
  EXPECT_EQ(a["period"], 14);
  // The detected form is a rotation of the identity-order one, which can
  // exchange the roles of u and v; both come back in input order.
  std::set<json> directions{a["u"], a["v"]};
  EXPECT_EQ(directions, (std::set<json>{json({7, 7, 7, 7}), json({5, 7, 3, 5})}));
}

TEST(Analyze, NotCoprimeIsAnInputError) {
  auto o = run_cli({"analyze", "2", "4", "6", "8"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("NotCoprime"), std::string::npos);
}

TEST(Analyze, BadArgumentsAreInputErrors) {
  EXPECT_EQ(run_cli({"analyze", "3", "4", "5"}).code, 2);
  EXPECT_EQ(run_cli({"analyze", "0", "4", "5", "7"}).code, 2);
  EXPECT_EQ(run_cli({"analyze", "x", "4", "5", "7"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
}

TEST(Analyze, CompleteIntersection) {
  auto o = run_cli({"analyze", "16", "27", "45", "56", "--json"});
  ASSERT_EQ(o.code, 0) << o.err;
  json a = json::parse(o.out);
  EXPECT_EQ(a["classification"], "CompleteIntersection");
  EXPECT_TRUE(a["bresinsky"].is_null());
  EXPECT_TRUE(a["period"].is_null());
}

TEST(Analyze, RankDeficientPrincipalMatrixIsReported) {
  auto o = run_cli({"analyze", "10", "14", "15", "21"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("principal matrix: unavailable"), std::string::npos);
  EXPECT_NE(o.out.find("classification: CompleteIntersection"), std::string::npos);
}

TEST(Family, ExampleAlongU) {
  auto o = run_cli({"family", "11", "17", "25", "19", "--kind", "u", "--tmax", "3"});
  ASSERT_EQ(o.code, 0) << o.err;
  std::vector<std::string> expected{"t,a1,a2,a3,a4,gcd,classification,matrix_certified",
                                    "0,11,17,25,19,1,GorensteinNonCI,true", "1,18,24,32,26,2,Skipped,",
                                    "2,25,31,39,33,1,GorensteinNonCI,true", "3,32,38,46,40,2,Skipped,"};
  EXPECT_EQ(lines(o.out), expected);
  EXPECT_EQ(o.err, "");
}

TEST(Family, ExampleAlongDiagonal) {
  auto o = run_cli({"family", "11", "17", "25", "19", "--kind", "diagonal", "--tmax", "3"});
  ASSERT_EQ(o.code, 0) << o.err;
  std::vector<std::string> expected{"t,a1,a2,a3,a4,gcd,classification,matrix_certified",
                                    "0,11,17,25,19,1,GorensteinNonCI,", "1,25,31,39,33,1,GorensteinNonCI,",
                                    "2,39,45,53,47,1,GorensteinNonCI,", "3,53,59,67,61,1,GorensteinNonCI,"};
  EXPECT_EQ(lines(o.out), expected);
}

TEST(Family, JsonOutput) {
  auto o = run_cli({"family", "11", "17", "25", "19", "--kind", "v", "--tmax", "2", "--json"});
  ASSERT_EQ(o.code, 0) << o.err;
  json doc = json::parse(o.out);
  EXPECT_EQ(doc["kind"], "v");
  EXPECT_EQ(doc["direction"], json({3, 5, 7, 5}));
  ASSERT_EQ(doc["members"].size(), 3u);
  EXPECT_EQ(doc["members"][1]["classification"], "Skipped");
  EXPECT_EQ(doc["members"][2]["sequence"], json({17, 27, 39, 29}));
  EXPECT_EQ(doc["members"][2]["matrix_certified"], true);
}

TEST(Family, PreconditionFailures) {
  EXPECT_EQ(run_cli({"family", "4", "5", "6", "7", "--kind", "u", "--tmax", "1"}).code, 3);
  EXPECT_EQ(run_cli({"family", "43", "67", "49", "83", "--kind", "diagonal", "--tmax", "1"}).code, 3);
  EXPECT_EQ(run_cli({"family", "11", "17", "25", "19", "--kind", "w", "--tmax", "1"}).code, 2);
  EXPECT_EQ(run_cli({"family", "11", "17", "25", "19", "--kind", "u", "--tmax", "-1"}).code, 2);
}

TEST(Family, ParallelIsByteIdentical) {
  auto serial = run_cli({"family", "43", "67", "49", "83", "--kind", "u", "--tmax", "12"});
  auto parallel = run_cli({"family", "43", "67", "49", "83", "--kind", "u", "--tmax", "12", "--parallel", "4"});
  ASSERT_EQ(serial.code, 0);
  EXPECT_EQ(serial.out, parallel.out);
  EXPECT_EQ(serial.err, parallel.err);
}

TEST(Scan, ScanBaseHits) {
  auto o = run_cli({"scan", "43", "67", "49", "83", "--step", "1", "1", "1", "1", "--trange", "1..83"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto rows = lines(o.out);
  ASSERT_EQ(rows.size(), 84u);
  EXPECT_EQ(rows[0], "t,a1,a2,a3,a4,gcd,classification");
  std::vector<int> hits;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].ends_with(",GorensteinNonCI")) hits.push_back(std::stoi(rows[i]));
  EXPECT_EQ(hits, (std::vector<int>{15, 49, 83}));
  EXPECT_EQ(rows[15], "15,58,82,64,98,2,GorensteinNonCI");
}

TEST(Scan, ExampleDiagonalAllGorenstein) {
  auto o = run_cli({"scan", "11", "17", "25", "19", "--step", "14", "14", "14", "14", "--trange", "1..10"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto rows = lines(o.out);
  ASSERT_EQ(rows.size(), 11u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_TRUE(rows[i].ends_with(",1,GorensteinNonCI")) << rows[i];
}

TEST(Scan, ZeroStepGivesIdenticalRows) {
  auto o = run_cli({"scan", "11", "17", "25", "19", "--step", "0", "0", "0", "0", "--trange", "0..1"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto rows = lines(o.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].substr(1), rows[2].substr(1));
  EXPECT_EQ(rows[1], "0,11,17,25,19,1,GorensteinNonCI");
}

TEST(Scan, MalformedRangesAreInputErrors) {
  for (std::string bad : {"5..2", "a..b", "1-3", "..4", "-1..3", "1..99999999999999999999"}) {
    auto o = run_cli({"scan", "11", "17", "25", "19", "--step", "1", "1", "1", "1", "--trange", bad});
    EXPECT_EQ(o.code, 2) << bad;
  }
}

TEST(Scan, WorkCapNeedsForce) {
  auto o = run_cli({"scan", "11", "17", "25", "19", "--step", "1", "1", "1", "1", "--trange", "0..1000000"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("--force"), std::string::npos);
}

TEST(Scan, ParallelIsByteIdentical) {
  std::vector<std::string> base{"scan", "43", "67", "49", "83", "--step", "1", "1", "1", "1", "--trange", "1..83"};
  auto serial = run_cli(base);
  for (std::string workers : {"2", "3", "8"}) {
    auto args = base;
    args.insert(args.end(), {"--parallel", workers});
    auto parallel = run_cli(args);
    EXPECT_EQ(serial.out, parallel.out) << workers;
  }
}

TEST(Scan, JsonOutput) {
  auto o = run_cli({"scan", "11", "17", "25", "19", "--step", "14", "14", "14", "14", "--trange", "1..3", "--json"});
  ASSERT_EQ(o.code, 0) << o.err;
  json doc = json::parse(o.out);
  ASSERT_EQ(doc.size(), 3u);
  EXPECT_EQ(doc[0]["t"], 1);
  EXPECT_EQ(doc[0]["sequence"], json({25, 31, 39, 33}));
  EXPECT_EQ(doc[2]["classification"], "GorensteinNonCI");
}

TEST(Present, JsonRoundTrip) {
  auto o = run_cli({"present", "11", "17", "25", "19", "--json"});
  ASSERT_EQ(o.code, 0) << o.err;
  auto p = presentation_from_json(json::parse(o.out));
  EXPECT_EQ(p.last_twist, 137);
  EXPECT_EQ(p.socle_degree, 134);
  EXPECT_TRUE(verify_complexes(Sequence::make({11, 17, 25, 19}), p));
}

TEST(Present, TranslatedText) {
  auto o = run_cli({"present", "11", "17", "25", "19", "--kind", "v", "--t", "2"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("sequence (form order): (17,27,39,29)"), std::string::npos);
  EXPECT_NE(o.out.find("socle degree: 266"), std::string::npos);
}

TEST(Present, Failures) {
  EXPECT_EQ(run_cli({"present", "4", "5", "6", "7"}).code, 3);
  EXPECT_EQ(run_cli({"present", "11", "17", "25", "19", "--kind", "u", "--t", "1"}).code, 2);
  EXPECT_EQ(run_cli({"present", "11", "17", "25", "19", "--t", "2"}).code, 2);
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(cli::exit_code_for(Error(ErrorKind::NotCoprime, "")), 2);
  EXPECT_EQ(cli::exit_code_for(Error(ErrorKind::PreconditionViolated, "")), 3);
  EXPECT_EQ(cli::exit_code_for(Error(ErrorKind::InconsistentClassification, "")), 4);
  EXPECT_EQ(cli::exit_code_for(Error(ErrorKind::AssertionFailure, "")), 4);
}
