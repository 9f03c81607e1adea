// Runs the installed-style binary as a subprocess.
#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct Result {
  int code;
  std::string out;
};

std::string quote(const std::string& arg) {
  std::string q = "'";
  for (char ch : arg) q += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return q + "'";
}

Result run(const std::vector<std::string>& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + quote(WHANOI_BIN);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string kData = WHANOI_TEST_DATA;

TEST(Binary, SolveCsvExample) {
  const auto r = run({"solve", "--model", R"({"kind":"constant","w":["1","1","1"]})", "-n", "3", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n3,7,7,7,"), std::string::npos);
}

TEST(Binary, ModelFromFile) {
  const auto r = run({"solve", "--model", kData + "/heavy_middle.json", "-n", "2", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n2,4,4,4,"), std::string::npos);
  EXPECT_EQ(run({"solve", "--model", "@" + kData + "/heavy_middle.json", "-n", "2"}).code, 0);
  EXPECT_EQ(run({"solve", "--model", kData + "/missing.json", "-n", "2"}).code, 2);
}

TEST(Binary, TransformFromSpecFile) {
  const auto r = run({"transform", "--spec", kData + "/fib.json", "--count", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "values: 0,1,3,8,19\nrecurrence: t[n+3]=3t[n+2]-t[n+1]-2t[n]\n");
  const auto pell = run({"transform", "--spec", kData + "/pell_recurrence.json", "--count", "3"});
  EXPECT_EQ(pell.out, "values: 0,1,4\nrecurrence: t[n+3]=4t[n+2]-3t[n+1]-2t[n]\n");
}

TEST(Binary, JsonOutputRoundTripsByteForByte) {
  const std::vector<std::vector<std::string>> invocations{
      {"solve", "--model", R"({"kind":"geometric","c":"1/2","r":"3/2"})", "-n", "6", "--format", "json"},
      {"verify", "--model", R"({"kind":"constant-nonuniform","w":"7"})", "--nmax", "5", "--format", "json"},
      {"phase", "--w", "18", "--nmax", "6", "--format", "json"},
      {"plan", "--model", R"({"kind":"fast-middle"})", "-n", "3", "--format", "json"},
      {"seq", "--name", "pell", "--count", "8", "--format", "json"},
      {"transform", "--spec", R"({"name":"lucas"})", "--count", "6", "--format", "json"},
      {"count", "--model", R"({"kind":"constant","w":["1","2","1"]})", "-n", "3", "--format", "json"},
  };
  for (const auto& args : invocations) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << args[0];
    EXPECT_EQ(nlohmann::json::parse(r.out).dump(2) + "\n", r.out) << args[0];
  }
}

TEST(Binary, ExitCodesAndEnvironmentCaps) {
  EXPECT_EQ(run({"solve", "--model", "{", "-n", "1"}).code, 2);
  EXPECT_EQ(run({"solve", "--model", R"({"kind":"table","rows":[["inf","inf","1"],["1","1","1"]]})", "-n", "2"}).code,
            3);
  EXPECT_EQ(run({"plan", "--model", R"({"kind":"natural-masses"})", "-n", "21"}).code, 4);
  EXPECT_EQ(run({"solve", "--model", R"({"kind":"natural-masses"})", "-n", "8"}, "WHANOI_MAX_N=7").code, 4);
  EXPECT_EQ(run({"solve", "--model", R"({"kind":"natural-masses"})", "-n", "70"}, "WHANOI_MAX_N=80").code, 0);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Binary, ExportGraph) {
  const auto r = run({"export-graph", "--model", R"({"kind":"constant","w":["1","inf","1"]})", "-n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("u,v,disc,idle,cost\n", 0), 0u);
  // The linear variant on two discs is a path through all nine states.
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 9);
}

}  // namespace
