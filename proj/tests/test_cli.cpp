#include <sys/wait.h>

#include <cstdio>

#include "common.hpp"

using namespace e2v;
using nlohmann::json;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

// stdout only; stderr is discarded
Outcome run(const std::string& args) {
  std::string cmd = std::string(E2V_CLI_PATH) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* f = ::popen(cmd.c_str(), "r");
  if (!f) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  int st = ::pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check hopf-axioms").code, 0);
  EXPECT_EQ(run("check jacobi").code, 2);
  EXPECT_EQ(run("check all").code, 2);
  EXPECT_EQ(run("check nosuch").code, 3);
  EXPECT_EQ(run("--param zeta=1 check jacobi").code, 3);
  EXPECT_EQ(run("--presets /nonexistent check jacobi").code, 3);
}

TEST(Cli, JsonReport) {
  Outcome r = run("--format json check jacobi");
  ASSERT_EQ(r.code, 2);
  json j = json::parse(r.out);
  EXPECT_EQ(j["suite"], "jacobi");
  EXPECT_EQ(j["tool_version"], E2V_VERSION);
  EXPECT_EQ(j["summary"]["pass"], 2);
  EXPECT_EQ(j["summary"]["discrepancy"], 1);
  ASSERT_EQ(j["checks"].size(), 3u);
  const json& bad = j["checks"][2];
  EXPECT_EQ(bad["id"], "printed.jacobi.nonstd");
  EXPECT_EQ(bad["status"], "discrepancy");
  EXPECT_EQ(bad["witness"], "(v,n,nb)");
  EXPECT_TRUE(j["preset_digests"].contains("nonstd-poisson"));
  for (const auto& c : j["checks"]) EXPECT_FALSE(c["anchor"].get<std::string>().empty()) << c["id"];
}

TEST(Cli, ReportsAreByteIdentical) {
  Outcome a = run("--format json check all"), b = run("--format json check all");
  EXPECT_EQ(a.code, 2);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, OutFile) {
  auto path = std::filesystem::temp_directory_path() / ("e2v-out-" + std::to_string(::getpid()) + ".json");
  EXPECT_EQ(run("--format json --out " + path.string() + " check hopf-axioms").code, 0);
  std::ifstream in(path);
  json j = json::parse(in);
  EXPECT_EQ(j["summary"]["fail"], 0);
  std::filesystem::remove(path);
}

TEST(Cli, AdHocCommands) {
  EXPECT_EQ(run("normal-form qe2-nonstd 'nb*n'").out, "n*nb + omega*n - omega*nb\n");
  EXPECT_EQ(run("antipode fun-e2 n").out, "-v*n\n");
  Outcome r = run("rank std-poisson --at v=2,n=1,nb=3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
  Outcome d = run("--format json delta fun-e2 'v*n'");
  json j = json::parse(d.out);
  EXPECT_EQ(j["command"], "delta");
  EXPECT_EQ(j["preset"], "fun-e2");
  EXPECT_EQ(e2v::testing::tensor2("fun-e2", j["result"].get<std::string>()),
            e2v::testing::tensor2("fun-e2", "1 (x) v*n + v*n (x) v"));
  EXPECT_EQ(run("bracket nonstd-poisson v nb").code, 0);
  EXPECT_EQ(run("bracket qe2-nonstd v n").out, run("normal-form qe2-nonstd 'v*n - n*v'").out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("normal-form qe2-nonstd 'v*(n'").code, 3);
  EXPECT_EQ(run("normal-form no-such-preset v").code, 3);
  EXPECT_EQ(run("bracket nonstd-poisson v m").code, 3);
  EXPECT_EQ(run("").code, 3);
}

TEST(Cli, PresetListing) {
  Outcome r = run("presets");
  EXPECT_EQ(r.code, 0);
  for (const auto& id : e2v::testing::catalog().ids()) EXPECT_NE(r.out.find(id), std::string::npos) << id;
  EXPECT_EQ(run("--version").out, std::string(E2V_VERSION) + "\n");
}

TEST(Cli, SolveFamily) {
  Outcome r = run("solve-family coaction-plane");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("z*zb + span{1}"), std::string::npos) << r.out;
}

TEST(Cli, ExternalFile) {
  auto path = std::filesystem::temp_directory_path() / ("e2v-file-" + std::to_string(::getpid()) + ".json");
  std::ofstream(path) << R"({"name": "my-qe2", "extends": "qe2-nonstd"})";
  EXPECT_EQ(run("--file " + path.string() + " normal-form my-qe2 'nb*n'").out, "n*nb + omega*n - omega*nb\n");
  std::ofstream(path) << R"({"name": "my-bad", "extends": "qe2-corrupted", "verbatim": false})";
  EXPECT_EQ(run("--file " + path.string() + " check diamond").code, 1);
  std::filesystem::remove(path);
}

TEST(SuiteRunner, Deterministic) {
  Catalog c1, c2;
  SuiteRunner a(c1), b(c2);
  CheckReport ra = a.run("all"), rb = b.run("all");
  EXPECT_EQ(ra.to_json().dump(), rb.to_json().dump());
  EXPECT_EQ(ra.exit_code(), 2);
  EXPECT_EQ(ra.count(Status::fail), 0u);
  for (const auto& name : suite_names()) {
    Catalog c;
    SuiteRunner s(c);
    CheckReport r = s.run(name);
    EXPECT_FALSE(r.records.empty()) << name;
    EXPECT_TRUE(std::is_sorted(r.records.begin(), r.records.end(),
                               [](const CheckRecord& x, const CheckRecord& y) { return x.id < y.id; }));
  }
  Catalog c;
  SuiteRunner s(c);
  EXPECT_EQ(s.run("jacobi").count(Status::pass), 2u);
  EXPECT_THROW(s.run("nosuch"), std::invalid_argument);
}
