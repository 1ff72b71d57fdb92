#include <gtest/gtest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ckgeo/json_io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(CKGEO_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("ckgeo-cli-" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, Eval) {
  EXPECT_EQ(run("eval 'a b a^-1 b'").out, "(1,0,0)\n");
  EXPECT_EQ(run("eval ''").out, "(0,0,0)\n");
  EXPECT_EQ(run("eval --json 'a b^-3 a^2'").out, "{\"k\":-3,\"m\":3,\"n\":3}\n");
}

TEST(Cli, ElementQueries) {
  EXPECT_EQ(run("len '(3,0,0)'").out, "8\n");
  EXPECT_EQ(run("std '(2,1,4)'").out, "b^3 a b^2 a^3\n");
  EXPECT_EQ(run("std '(-4,2,4)'").out, "b^-2 a b^-4 a^3\n");
  EXPECT_EQ(run("continuations '(0,0,0)'").out, "a a^-1 b b^-1\n");
  EXPECT_EQ(run("classify '(2,1,4)'").out, "POS_K\n");
  EXPECT_EQ(run("is-geodesic 'a a^-1'").out, "false\n");
  EXPECT_EQ(run("is-geodesic 'a b^-3 a^2'").out, "true\n");
}

TEST(Cli, OrbitAndConnectivity) {
  EXPECT_EQ(run("orbit b^3").out, "b^3\n");
  const Result r = run("check-theorem2 '(-1,3,4)' --json");
  ASSERT_EQ(r.code, 0);
  const auto report = nlohmann::json::parse(r.out).get<ckgeo::Theorem2Report>();
  EXPECT_TRUE(report.connected);
  EXPECT_EQ(report.geodesic_count, 12u);
  EXPECT_EQ(run("check-theorem2 '(2,0,0)'").out,
            "element=(2,0,0) geodesic_count=6 orbit_size=6 connected=true\n");
}

TEST(Cli, Ball) {
  EXPECT_EQ(run("ball 1").out, "model=ck radius=1 states=5\nlevels: 1 4\n");
  EXPECT_EQ(run("ball 12").out.substr(0, 34), "model=ck radius=12 states=2537\nlev");
  const std::string csv = run("ball 12 --model ck --export csv").out;
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,m,n,length");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2538);
  EXPECT_EQ(run("ball 10 --model z2").out.substr(0, 30), "model=z2 radius=10 states=221\n");
}

TEST(Cli, BallToFile) {
  TempDir tmp;
  ASSERT_EQ(run("ball 3 --export jsonl --out " + tmp.file("b.jsonl")).code, 0);
  EXPECT_EQ(slurp(tmp.file("b.jsonl")), run("ball 3 --export jsonl").out);
}

TEST(Cli, Audit) {
  const Result ck = run("audit --radius 12");
  const auto j = nlohmann::json::parse(ck.out);
  EXPECT_EQ(j.at("dead_ends").at("verdict"), "pass");
  EXPECT_EQ(j.at("last_letter").at("verdict"), "pass");
  EXPECT_EQ(j.at("standard_language").at("verdict"), "pass");
  EXPECT_EQ(ck.code, j.at("verdict") == "pass" ? 0 : 5);
  const Result z2 = run("audit --radius 10 --model z2");
  EXPECT_EQ(z2.code, 0);
  EXPECT_EQ(nlohmann::json::parse(z2.out).at("verdict"), "pass");
  const Result broken = run("audit --radius 12 --model z2 --broken-language");
  EXPECT_EQ(broken.code, 5);
  EXPECT_EQ(nlohmann::json::parse(broken.out).at("standard_language").at("verdict"), "fail");
}

TEST(Cli, Render) {
  TempDir tmp;
  ASSERT_EQ(run("render 'b^3 a b^2 a^3' --out " + tmp.file("x.svg")).code, 0);
  EXPECT_EQ(slurp(tmp.file("x.svg")), slurp(std::string(CKGEO_GOLDEN_DIR) + "/std_2_1_4.svg"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("eval c").code, 2);
  EXPECT_EQ(run("len '(1,2)'").code, 2);
  EXPECT_EQ(run("orbit 'a a^-1'").code, 2);
  EXPECT_EQ(run("young 'a^-1'").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("orbit 'b^3 a b^2 a^3' --cap 2").code, 3);
  EXPECT_EQ(run("len '(9223372036854775807,1,0)'").code, 3);
  EXPECT_EQ(run("render a --out /nonexistent-dir/x.svg").code, 4);
  EXPECT_EQ(run("audit --radius 12 --broken-language").code, 5);
  EXPECT_EQ(run("--help").code, 0);
}
