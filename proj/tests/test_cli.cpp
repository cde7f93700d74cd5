#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "liftenum/cli.hpp"
#include "liftenum/enumpoly.hpp"

using namespace liftenum;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return (std::filesystem::path(LIFTENUM_TEST_TMP) / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, BruteGolay) {
  const auto r = run({"brute", "--family", "qr24-2", "--m", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "+1*z^24*x0^0\n+759*z^16*x0^8\n+2576*z^12*x0^12\n+759*z^8*x0^16\n+1*z^0*x0^24\n");
}

TEST(Cli, BruteOverBudget) {
  const auto r = run({"brute", "--family", "qr24-2", "--m", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("68719476736"), std::string::npos);
  EXPECT_EQ(run({"brute", "--family", "octacode", "--m", "2", "--budget", "100"}).code, 2);
}

TEST(Cli, BadInput) {
  EXPECT_EQ(run({"brute", "--family", "nope"}).code, 3);
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"pipeline", "--family", "octacode", "--format", "xml"}).code, 3);
  EXPECT_EQ(run({"transform", "--family", "octacode", "--op", "downA", "--input", tmp("missing.json")}).code, 3);
  EXPECT_EQ(run({"specialize", "--family", "octacode", "--map", "u=2"}).code, 3);
  EXPECT_EQ(run({"specialize", "--family", "octacode", "--map", "u=2,v=1,z=x"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, TransformDownA) {
  const auto path = tmp("octa_a20.json");
  ASSERT_EQ(run({"brute", "--family", "octacode", "--m", "2", "--format", "json", "--output", path}).code, 0);
  const auto r = run({"transform", "--family", "octacode", "--op", "downA", "--input", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_enumerator(r.out, VarLayout{1, 1}),
            parse_enumerator("z^8 + 14u^4z^4 + u^8 + 14v^4z^4 + v^8 - 14u^4v^4", VarLayout{1, 1}, Naming::Display));
  EXPECT_EQ(run({"transform", "--family", "octacode", "--op", "upD", "--input", path}).code, 3);
}

TEST(Cli, PipelineAndSpecialize) {
  const auto path = tmp("golay_pipeline.json");
  ASSERT_EQ(run({"pipeline", "--family", "qr24-2", "--max-m", "3", "--format", "json", "-o", path}).code, 0);
  const auto doc = slurp(path);
  EXPECT_NE(doc.find("\"label\": \"A_{3,0}\""), std::string::npos);

  const auto r = run({"specialize", "--family", "qr24-2", "--m", "3", "--map", "u=2,v=2,w=4,z=0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n', r.out.find('\n') + 1)), "+1*t^0\n+255024*t^24");

  const auto j = run({"specialize", "--family", "qr24-3", "--m", "2", "--map", "u=2,v=3,z=0", "--format", "json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_NE(j.out.find("\"sum\": \"282429536481\""), std::string::npos);
  EXPECT_NE(j.out.find("\"min_positive_exponent\": 24"), std::string::npos);
}

TEST(Cli, OctacodeTail) {
  const auto r = run({"pipeline", "--family", "octacode", "--max-m", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# A_{5,0}"), std::string::npos);
}

TEST(Cli, VerifyAndTable) {
  const auto v = run({"verify", "--family", "qr24-3"});
  EXPECT_EQ(v.code, 0) << v.out << v.err;
  const auto octa = run({"verify", "--family", "octacode", "--format", "json"});
  EXPECT_EQ(octa.code, 0);
  EXPECT_NE(octa.out.find("erratum"), std::string::npos);
  const auto t = run({"table", "--family", "qr24-2"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("# D_{4,3}"), std::string::npos);
  const auto c = run({"candidates", "--family", "octacode", "--i", "2", "--j", "1"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "0\n");
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"pipeline", "--family", "qr24-3", "--max-m", "3", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
  EXPECT_EQ(run({"brute", "--family", "qr24-3", "--m", "1", "--threads", "1"}).out,
            run({"brute", "--family", "qr24-3", "--m", "1", "--threads", "4"}).out);
}
