#include "knotconc/certificate.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(KNOTCONC_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST(Cli, EpsilonOfFirstFamilyMember) {
  const CliRun r = run("epsilon \"W(1)\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "epsilon sign: +1, leader [1,2,1,7]");
}

TEST(Cli, EpsilonZeroAndJson) {
  EXPECT_NE(run("epsilon \"W(0)\"").out.find("epsilon sign: 0"), std::string::npos);
  const CliRun r = run("epsilon \"W(2)\" --json --certificate");
  ASSERT_EQ(r.code, 0);
  const auto j = knotconc::Json::parse(r.out);
  EXPECT_EQ(j["sign"], "+1");
  EXPECT_EQ(j["leader"], knotconc::Json::parse("[1,2,1,13]"));
  EXPECT_EQ(j["certificate"]["rule"], "SUM-DOM");
}

TEST(Cli, UpsilonBreakpoints) {
  CliRun r = run("upsilon \"W(2)\" --breakpoints");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 → 2 : 0\n");
  r = run("upsilon \"T(2,3)\" --json");
  EXPECT_EQ(r.out, "{\"breakpoints\":[[\"0\",\"0\"],[\"1\",\"-1\"],[\"2\",\"0\"]]}\n");
  r = run("upsilon \"T(2,3)\" --samples 3");
  EXPECT_EQ(r.out, "t,upsilon\n0,0\n1,-1\n2,0\n");
}

TEST(Cli, Phi) {
  EXPECT_EQ(run("phi \"W(1)\" --json").out, "{}\n");
  EXPECT_EQ(run("phi \"T(4,5)\" --json").out, "{\"1\":1,\"2\":1,\"3\":1}\n");
  EXPECT_NE(run("phi \"T(3,7)\"").out.find("{1: 2, 2: 2}"), std::string::npos);
}

TEST(Cli, Staircase) {
  const CliRun r = run("staircase 4 7 --json");
  ASSERT_EQ(r.code, 0);
  const auto j = knotconc::Json::parse(r.out);
  EXPECT_EQ(j["steps"], knotconc::Json::parse("[1,3,1,2,2,2,2,1,3,1]"));
  EXPECT_EQ(j["bracket"], knotconc::Json::parse("[1,3,1,2,2]"));
  EXPECT_EQ(j["genus"], 9);
}

TEST(Cli, VerifyFamilyZero) {
  const CliRun r = run("verify family --max-n 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("class(W(0)) = 0 : pass"), std::string::npos) << r.out;
}

TEST(Cli, VerifyRecursionsJson) {
  const CliRun r = run("verify recursions --max-p 6 --max-k 2 --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(knotconc::Json::parse(r.out)["status"], "pass");
}

TEST(Cli, CertificateRoundTripAndTampering) {
  const auto file = temp("knotconc_cli_cert.json");
  ASSERT_EQ(run("epsilon \"W(1)\" --certificate-out " + file.string()).code, 0);
  EXPECT_EQ(run("check-certificate " + file.string()).code, 0);

  knotconc::Json j;
  {
    std::ifstream in(file);
    j = knotconc::Json::parse(in);
  }
  j["inputs"]["coefficient"] = 2;
  {
    std::ofstream out(file);
    out << j.dump();
  }
  EXPECT_EQ(run("check-certificate " + file.string()).code, 1);

  { std::ofstream out(file); }
  EXPECT_EQ(run("check-certificate " + file.string()).code, 2);
  EXPECT_EQ(run("check-certificate /nonexistent/file.json").code, 2);
  std::filesystem::remove(file);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("epsilon \"T(4,6)\"").code, 2);
  EXPECT_EQ(run("upsilon \"T(3,4\"").code, 2);
  EXPECT_EQ(run("staircase 1 5").code, 2);
  EXPECT_EQ(run("verify family").code, 2);
}
