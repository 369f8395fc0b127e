#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli_app.hpp"

using ncalg::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  args.insert(args.begin(), "ncalg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args, int expected_code = 0) {
  args.insert(args.begin(), "--json");
  Outcome o = call(args);
  EXPECT_EQ(o.code, expected_code) << o.out << o.err;
  json j = json::parse(o.out);
  for (const char* key : {"command", "status", "tolerance", "trust_bound"}) EXPECT_TRUE(j.contains(key)) << key;
  return j;
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, ReduceWeyl) {
  Outcome o = call({"reduce", "A", "y*x*x"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "x*x*y - 2*x*x\n");
}

TEST(Cli, ReduceJson) {
  json j = call_json({"reduce", "A", "y*x*x*x - x*x*x*y"});
  EXPECT_EQ(j["command"], "reduce");
  EXPECT_EQ(j["status"], "ok");
}

TEST(Cli, GbasisComplete) {
  Outcome o = call({"gbasis", "A", "--max-deg", "10"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("y*x -> x*y - x"), std::string::npos);
  EXPECT_NE(o.out.find("status: complete"), std::string::npos);
  json j = call_json({"gbasis", "A", "--max-deg", "10"});
  EXPECT_EQ(j["status"], "complete");
}

TEST(Cli, TruncationIsExitThree) {
  std::string path = temp_file("b3.alg", "algebra B3 { generators: x, y; relations: x*y*x - y*x*y; }\n");
  Outcome o = call({"-f", path, "gbasis", "B3", "--max-deg", "5"});
  EXPECT_EQ(o.code, 3);
  EXPECT_NE(o.out.find("truncated"), std::string::npos);
  json j = call_json({"-f", path, "gbasis", "B3", "--max-deg", "5"}, 3);
  EXPECT_EQ(j["trust_bound"], 5);
  EXPECT_EQ(call({"-f", path, "reduce", "B3", "x*x*x*x*x*y*x", "--max-deg", "5"}).code, 3);
}

TEST(Cli, IsometryOfS) {
  Outcome o = call({"check", "isometry", "D", "--elem", "s"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("none"), std::string::npos);
  Outcome u = call({"check", "isometry", "F1", "--elem", "i*e"});
  EXPECT_NE(u.out.find("unitary"), std::string::npos);
}

TEST(Cli, StructureChecks) {
  EXPECT_EQ(call({"check", "ordered", "F2", "--samples", "20", "--seed", "7"}).code, 0);
  EXPECT_EQ(call({"check", "bounded", "F1", "--elem", "3/5*e", "--elem", "4/5*e"}).code, 0);
  EXPECT_EQ(call({"check", "bounded", "F1", "--samples", "10"}).code, 0);
  Outcome m = call({"check", "modulus", "F1", "--x", "x", "--y", "(3/5 + 4/5 i)*x"});
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("3/5 + 4/5 i"), std::string::npos);
  EXPECT_EQ(call({"check", "modulus", "F1", "--x", "e", "--y", "x"}).code, 2);
}

TEST(Cli, Constructions) {
  Outcome d = call({"double", "Z2"});
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("s'*s'"), std::string::npos);
  EXPECT_EQ(call({"opposite", "A"}).out.find("x_op") != std::string::npos, true);
  EXPECT_EQ(call({"freeprod", "A", "A"}).code, 2);
  EXPECT_EQ(call({"freeprod", "A", "A", "--rename"}).code, 0);
  Outcome f = call({"fock", "Z2", "--len", "3"});
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("7 alternating words"), std::string::npos);
  Outcome b = call({"basis", "D", "--len", "4"});
  EXPECT_NE(b.out.find("1,2,2,2,2"), std::string::npos);
}

TEST(Cli, Embeddings) {
  EXPECT_EQ(call({"embed", "gamma", "D", "--verify-deg", "3"}).code, 0);
  EXPECT_EQ(call({"embed", "z2z2", "D", "--verify-deg", "3"}).code, 0);
}

TEST(Cli, Matrices) {
  Outcome c = call({"example", "cholesky", "--matrix", "4, 2; 2, 5"});
  EXPECT_EQ(c.code, 0);
  json j = call_json({"example", "cholesky", "--matrix", "4, 2; 2, 5"});
  EXPECT_EQ(call({"example", "cholesky", "--matrix", "1, 2; 2, 1"}).code, 2);
  EXPECT_EQ(call({"example", "triangular", "--n", "4", "--seed", "3"}).code, 0);
  EXPECT_EQ(call({"example", "vcbound", "--c", "1/2", "--Y", "1"}).code, 0);
  EXPECT_EQ(call({"example", "vcbound", "--c", "0", "--Y", "1"}).code, 2);
  EXPECT_EQ(call({"matrep", "dz2", "--lambda", "1"}).code, 0);
  EXPECT_EQ(call({"matrep", "faithful", "--bound", "8", "--lambda", "1/2"}).code, 3);
  EXPECT_EQ(call({"matrep", "faithful", "--bound", "4", "--lambda", "1/2", "--lambda", "1", "--lambda", "3/2"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"reduce", "Nope", "x"}).code, 2);
  EXPECT_EQ(call({"reduce", "A", "x*q"}).code, 2);
  EXPECT_EQ(call({"gbasis", "A", "--max-deg", "many"}).code, 2);
  std::string bad = temp_file("bad.alg", "algebra A { generators: x; relations: x*; }\n");
  Outcome o = call({"-f", bad, "gbasis", "A"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("1:"), std::string::npos);
}

TEST(Cli, QuietHidesDetail) {
  Outcome loud = call({"basis", "D", "--len", "4"});
  Outcome quiet = call({"basis", "D", "--len", "4", "--quiet"});
  EXPECT_EQ(quiet.out, "9 basis words up to length 4 (per length 1,2,2,2,2)\n");
  EXPECT_LT(quiet.out.size(), loud.out.size());
}

TEST(Cli, Deterministic) {
  auto a = call({"--json", "check", "ordered", "F2", "--samples", "10"});
  auto b = call({"--json", "check", "ordered", "F2", "--samples", "10"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SelftestReportsEveryCriterion) {
  Outcome o = call({"--json", "selftest"});
  json j = json::parse(o.out);
  ASSERT_EQ(j["criteria"].size(), 12u);
  bool all = true;
  for (const auto& c : j["criteria"]) all = all && c["pass"].get<bool>();
  EXPECT_EQ(o.code, all ? 0 : 1);
}
