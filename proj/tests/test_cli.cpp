#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
};

// Runs the installed binary through the shell; stderr is folded into stdout.
RunResult run(const std::string& args) {
  std::string cmd = std::string(MFV_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

RunResult run_env(const std::string& env, const std::string& args) {
  std::string cmd = "env " + env + " " + std::string(MFV_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

fs::path scratch_dir() {
  auto dir = fs::temp_directory_path() / ("mfv_cli_test_" + std::to_string(getpid()));
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream f(p);
  f << content;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string strip_timings(std::string s) {
  static const std::regex ms("\"elapsed_ms\": [0-9]+");
  return std::regex_replace(s, ms, "\"elapsed_ms\": X");
}

}  // namespace

TEST_CASE("verify verbs exit zero on the shipped cases") {
  CHECK(run("verify-fiber --case generic").code == 0);
  CHECK(run("verify-deformation --case mixed").code == 0);
  auto all = run("verify-all --fast");
  CHECK(all.code == 0);
  CHECK(all.out.find("case both-torsion") != std::string::npos);
  CHECK(all.out.find("case p-torsion") != std::string::npos);
  CHECK(all.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("usage errors exit two") {
  CHECK(run("").code == 2);
  CHECK(run("no-such-verb").code == 2);
  CHECK(run("verify-fiber").code == 2);                      // --case is required
  CHECK(run("verify-fiber --case nosuch").code == 2);
  CHECK(run("verify-deformation --case generic").code == 2); // fiber id, wrong verb
  CHECK(run("gb").code == 2);
  CHECK(run("gb --ideal /nonexistent/path.id").code == 2);
  CHECK(run("gb --ideal /dev/null").code == 2);              // no ring header
  CHECK(run("hilbert --ideal /nonexistent/path.id").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("gb --help").code == 0);
}

TEST_CASE("invalid MFV_THREADS is a usage error") {
  CHECK(run_env("MFV_THREADS=abc", "verify-all --fast").code == 2);
  CHECK(run_env("MFV_THREADS=0x2", "verify-all --fast").code == 2);
  CHECK(run_env("MFV_THREADS=-3", "verify-all --fast").code == 2);
  CHECK(run_env("MFV_THREADS=2", "verify-fiber --case generic").code == 0);
}

TEST_CASE("gb verb prints the reduced basis") {
  auto dir = scratch_dir();
  auto path = dir / "cubic.id";
  write_file(path, "ring: x, y, z order: lex\nx^2 - y\nx*y - z\n");
  auto res = run("gb --ideal " + path.string());
  CHECK(res.code == 0);
  CHECK(res.out == "y^3 - z^2\nx*z - y^2\nx*y - z\nx^2 - y\n");

  auto rr = run("gb --ideal " + path.string() + " --order grevlex");
  CHECK(rr.code == 0);
  CHECK(rr.out.find("x^2 - y") != std::string::npos);
  CHECK(run("gb --ideal " + path.string() + " --order nosuch").code == 2);

  auto empty = dir / "empty.id";
  write_file(empty, "ring: x, y order: grevlex\n");
  auto er = run("gb --ideal " + empty.string());
  CHECK(er.code == 0);
  CHECK(er.out.empty());
  fs::remove_all(dir);
}

TEST_CASE("corrupt ideal files exit two") {
  auto dir = scratch_dir();
  auto bad = dir / "bad.id";
  write_file(bad, "ring: x, y order: lex\nx^2 - \n");
  CHECK(run("gb --ideal " + bad.string()).code == 2);
  write_file(bad, "ring: x, x order: lex\nx\n");
  CHECK(run("gb --ideal " + bad.string()).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("membership verb distinguishes members by exit code") {
  auto dir = scratch_dir();
  auto path = dir / "i.id";
  write_file(path, "ring: x, y order: grevlex\nx^2\n");
  auto member = run("membership --ideal " + path.string() + " --poly \"x^2*y\"");
  CHECK(member.code == 0);
  CHECK(member.out == "true\n");
  auto non = run("membership --ideal " + path.string() + " --poly \"x\"");
  CHECK(non.code == 1);
  CHECK(non.out == "false\n");
  CHECK(run("membership --ideal " + path.string() + " --poly \"x\" --radical").code == 0);
  CHECK(run("membership --ideal " + path.string() + " --poly \"y\" --radical").code == 1);
  CHECK(run("membership --ideal " + path.string() + " --poly \"x +\"").code == 2);
  fs::remove_all(dir);
}

TEST_CASE("hilbert verb and non-homogeneous rejection") {
  auto dir = scratch_dir();
  auto path = dir / "h.id";
  write_file(path, "ring: x, y order: grevlex\nx^2\n");
  auto res = run("hilbert --ideal " + path.string());
  CHECK(res.code == 0);
  CHECK(res.out == "(1 + t) / (1 - t)\n");
  write_file(path, "ring: x, y order: grevlex\nx^2 - y\n");
  CHECK(run("hilbert --ideal " + path.string()).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("preimage verb computes kernels from a map file") {
  auto dir = scratch_dir();
  auto ideal = dir / "target.id";
  auto map = dir / "map.txt";
  write_file(ideal, "ring: x order: grevlex\n0\n");
  write_file(map, "# squaring and cubing\nsource: u, v\nu -> x^2\nv -> x^3\n");
  auto res = run("preimage --ideal " + ideal.string() + " --map " + map.string());
  CHECK(res.code == 0);
  CHECK(res.out == "u^3 - v^2\n");
  write_file(map, "source: u\nu -> x +\n");
  CHECK(run("preimage --ideal " + ideal.string() + " --map " + map.string()).code == 2);
  write_file(map, "u -> x\n");
  CHECK(run("preimage --ideal " + ideal.string() + " --map " + map.string()).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("JSON certificates are byte-stable modulo timings") {
  auto dir = scratch_dir();
  auto a = dir / "a.json";
  auto b = dir / "b.json";
  REQUIRE(run("verify-fiber --case generic --json " + a.string()).code == 0);
  REQUIRE(run("verify-fiber --case generic --json " + b.string()).code == 0);
  auto ja = strip_timings(read_file(a));
  auto jb = strip_timings(read_file(b));
  CHECK(ja == jb);
  CHECK(ja.find("\"case\": \"generic\"") != std::string::npos);
  CHECK(ja.find("\"overall\": \"pass\"") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("verify-all JSON is an array of seven certificates") {
  auto dir = scratch_dir();
  auto path = dir / "all.json";
  REQUIRE(run("verify-all --fast --json " + path.string()).code == 0);
  auto js = read_file(path);
  CHECK(js.rfind("[", 0) == 0);
  std::size_t count = 0, pos = 0;
  while ((pos = js.find("\"case\": ", pos)) != std::string::npos) {
    ++count;
    pos += 1;
  }
  CHECK(count == 7);
  fs::remove_all(dir);
}

TEST_CASE("a perturbed fixture turns verification red") {
  auto dir = scratch_dir();
  auto fixdir = dir / "fixtures";
  fs::create_directories(fixdir);
  for (const auto& entry : fs::directory_iterator(MFV_FIXTURE_SRC_DIR))
    fs::copy(entry.path(), fixdir / entry.path().filename());
  // a linear form can never lie in the quadric relation ideal
  std::ofstream(fixdir / "xi_relations.id", std::ios::app) << "xi0\n";
  auto res = run("verify-fiber --case p-torsion --fixtures " + fixdir.string());
  CHECK(res.code == 1);
  CHECK(res.out.find("[FAIL]") != std::string::npos);
  CHECK(res.out.find("overall: fail") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("fixtures can come from the environment") {
  auto res = run_env("MFV_FIXTURES=/nonexistent/dir", "verify-fiber --case p-torsion");
  CHECK(res.code == 1);  // checks fail on the unreadable fixture, not a usage error
}
