#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "qrep/cli.hpp"
#include "qrep/errors.hpp"

using qrep::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ParseLevels) {
  EXPECT_EQ(qrep::cli::parse_levels("7"), (std::vector<int>{7}));
  EXPECT_EQ(qrep::cli::parse_levels("3..5"), (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(qrep::cli::parse_levels("1..2,9"), (std::vector<int>{1, 2, 9}));
  EXPECT_THROW(qrep::cli::parse_levels("5..3"), qrep::ParseError);
  EXPECT_THROW(qrep::cli::parse_levels("0"), qrep::ParseError);
  EXPECT_THROW(qrep::cli::parse_levels("a..3"), qrep::ParseError);
  EXPECT_THROW(qrep::cli::parse_levels(""), qrep::ParseError);
}

TEST(Cli, CertifySummary) {
  const Result r = invoke({"certify", "1..30", "--quiet"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("uncertified: {1,2,3,4,5,6,8,10,12,20}"), std::string::npos) << r.out;
}

TEST(Cli, CertifyJsonSchema) {
  const Result r = invoke({"--format", "json", "certify", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["command"], "certify");
  EXPECT_EQ(j["version"], "0.1.0");
  const json& cert = j["results"]["certificates"][0];
  EXPECT_EQ(cert["p"], 7);
  EXPECT_EQ(cert["route"], "odd_burau");
  EXPECT_EQ(cert["odd_part"], 7);
  EXPECT_EQ(cert["boundary_color"], 2);
  EXPECT_TRUE(cert["boundary_color"].is_number_integer());
  EXPECT_FALSE(cert.contains("failed"));
}

TEST(Cli, CertifyEvenJson) {
  const Result r = invoke({"certify", "40", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json cert = json::parse(r.out)["results"]["certificates"][0];
  EXPECT_EQ(cert["route"], "even_coxeter");
  EXPECT_EQ(cert["ell"], 7);
  EXPECT_EQ(cert["signature"], json::array({4, 1}));
  EXPECT_EQ(cert["cases"].size(), 11u);
  for (const auto& c : cert["cases"]) {
    EXPECT_TRUE(c["multiset"].is_array());
    EXPECT_TRUE(c["resolution"].is_string());
  }
  bool annotated = false;
  for (const auto& n : cert["notes"]) annotated = annotated || n.get<std::string>().find("120") != std::string::npos;
  EXPECT_TRUE(annotated);
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  const std::vector<std::vector<std::string>> commands{
      {"--format", "json", "certify", "1..40"},
      {"--format", "json", "blocks", "tadpole", "--tail", "2", "--level", "16"},
      {"--format", "json", "veech", "affineE:7"},
      {"--format", "json", "orbits", "3", "3", "--labeled"},
  };
  for (const auto& args : commands) {
    const Result r = invoke(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out).dump(2) + "\n", r.out);
  }
}

TEST(Cli, Blocks) {
  Result r = invoke({"blocks", "tadpole", "--tail", "2", "--level", "16"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dimension: 5"), std::string::npos);
  EXPECT_NE(r.out.find("loop colors: {1,2,3,4,5}"), std::string::npos);
  r = invoke({"blocks", "tadpole", "--tail", "4", "--level", "9"});
  EXPECT_NE(r.out.find("dimension: 2"), std::string::npos);
  r = invoke({"blocks", "theta", "--level", "7"});
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, BlocksMalformedSpec) {
  const Result r = invoke({"blocks", "vertices=1; edges=0-0; tails=0:x", "--level", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position 31"), std::string::npos) << r.err;
  EXPECT_EQ(invoke({"blocks", "tadpole", "--level", "5"}).code, 2);
  EXPECT_EQ(invoke({"blocks", "tadpole", "--tail", "3", "--level", "7"}).code, 2);
}

TEST(Cli, Veech) {
  Result r = invoke({"--format", "json", "veech", "A:3"});
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out)["results"];
  EXPECT_NEAR(j["perron"]["mu"].get<double>(), std::sqrt(2.0), 1e-9);
  EXPECT_EQ(j["class"], "recessive");
  EXPECT_EQ(j["lattice"]["verdict"], "FiniteIndexInVeech");
  EXPECT_TRUE(j["perron"].contains("tolerance"));

  r = invoke({"--format", "json", "veech", "cycle:6"});
  j = json::parse(r.out)["results"];
  EXPECT_NEAR(j["perron"]["mu"].get<double>(), 2.0, 1e-9);
  EXPECT_EQ(j["class"], "critical");

  r = invoke({"--format", "json", "veech", "--inter", "(1,1,3)", "--mult", "1,1"});
  j = json::parse(r.out)["results"];
  EXPECT_NEAR(j["perron"]["mu"].get<double>(), 3.0, 1e-9);
  EXPECT_EQ(j["class"], "dominant");

  EXPECT_EQ(invoke({"veech", "inter=(1,1"}).code, 2);
  EXPECT_EQ(invoke({"veech"}).code, 2);
}

TEST(Cli, Orbits) {
  Result r = invoke({"orbits", "4", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("N: 3"), std::string::npos);
  EXPECT_NE(r.out.find("H2 bounds: (3, 4)"), std::string::npos);
  r = invoke({"orbits", "3", "1"});
  EXPECT_NE(r.out.find("N: 3"), std::string::npos);
  r = invoke({"orbits", "0", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not hyperbolic"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"--format", "xml", "certify", "7"}).code, 2);
  EXPECT_EQ(invoke({"certify", "1..x"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

#ifdef QREP_CLI_PATH
TEST(Cli, BinaryExitCodes) {
  const std::string bin = QREP_CLI_PATH;
  const auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("certify 1..30"), 0);
  EXPECT_EQ(status("orbits 0 2"), 2);
  EXPECT_EQ(status("blocks 'vertices=1; edges=0-0; tails=0:x' --level 5"), 2);
  EXPECT_EQ(status("veech D:4"), 0);
}
#endif
