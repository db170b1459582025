#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"

// CLIFFLOG_BIN is injected by the build as the path to the clifflog binary.

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd =
      env_prefix + CLIFFLOG_BIN " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::size_t end = nl == std::string::npos ? text.size() : nl;
    if (end > start) lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// drops the ns_per_op column, the only field allowed to vary between runs
std::string stable_csv(const std::string& csv) {
  std::string out;
  for (const std::string& line : lines_of(csv)) {
    const std::size_t a = line.find(',');
    const std::size_t b = line.find(',', a + 1);
    const std::size_t c = line.find(',', b + 1);
    out += line.substr(0, b) + line.substr(c) + '\n';
  }
  return out;
}

}  // namespace

TEST_CASE("exit codes separate success, domain errors and usage errors") {
  CHECK(run("eval 'exp(0)' --algebra cl20").code == 0);
  CHECK(run("eval 'log(2+5e1-4e2-7e12)' --algebra cl11").code == 3);
  CHECK(run("eval 'log(2' --algebra cl20").code == 2);
  CHECK(run("eval 'e12' --algebra cl10").code == 2);
  CHECK(run("eval 'exp(0)' --algebra cl99").code == 2);
  CHECK(run("check roundtrip --samples 0").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("eval '1/0' --algebra cl20").code == 3);
}

TEST_CASE("a no-solution request still prints its report") {
  const RunResult r = run("eval 'log(2+5e1-4e2-7e12)' --algebra cl11 --json");
  CHECK(r.code == 3);
  CHECK(contains(r.out, "\"kind\":\"no_solution\""));
  CHECK(contains(r.out, "\"tag\":\"NoSolution\""));
}

TEST_CASE("json reports are byte-identical across runs") {
  const std::string cmd = "eval 'log(2+4e1-5e2-e12)' --algebra cl02 --k 1 --json";
  const RunResult a = run(cmd);
  const RunResult b = run(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "\"timing\":null"));
  CHECK(contains(a.out, "\"residual\":"));
}

TEST_CASE("eval prints coefficients and sector in text mode") {
  const RunResult r = run("eval '2+2e1' --algebra cl10");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "2 + 2*e1"));
  CHECK(contains(r.out, "LightCone"));

  const RunResult c = run("classify '2+2e1' --algebra cl10");
  CHECK(c.code == 0);
  CHECK(contains(c.out, "LightCone"));
}

TEST_CASE("roots subcommand lists every root with residual notes") {
  const RunResult r = run("roots '3+2e1' --algebra cl10 --json");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"roots\":["));
  CHECK(contains(r.out, "\"residual\":"));

  const RunResult none = run("roots '0-1' --algebra cl10");
  CHECK(none.code == 0);
  CHECK(contains(none.out, "no real square roots"));
}

TEST_CASE("check subcommand gates its exit code on the suite result") {
  const RunResult r =
      run("check roundtrip --algebra cl02 --samples 400 --seed 1 --json");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"passed\":true"));
  CHECK(contains(r.out, "\"suite\":\"roundtrip\""));
}

TEST_CASE("seed comes from the environment unless a flag overrides it") {
  const std::string tail = "check roundtrip --algebra cl02 --samples 400 --json";
  const RunResult from_env = run(tail, "CLIFFLOG_SEED=7 ");
  const RunResult from_flag = run(tail + " --seed 7");
  const RunResult overridden = run(tail + " --seed 7", "CLIFFLOG_SEED=5 ");
  CHECK(from_env.code == 0);
  CHECK(from_env.out == from_flag.out);
  CHECK(overridden.out == from_flag.out);
}

TEST_CASE("bench emits a csv whose non-timing columns are reproducible") {
  const std::string cmd =
      "bench --op exp --algebra cl20 --samples 200 --terms 10 --seed 3";
  const RunResult a = run(cmd);
  const RunResult b = run(cmd);
  CHECK(a.code == 0);
  const std::vector<std::string> ls = lines_of(a.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == "impl,terms,ns_per_op,max_abs_err");
  CHECK(ls[1].substr(0, 9) == "closed,0,");
  CHECK(ls[2].substr(0, 10) == "series,10,");
  CHECK(stable_csv(a.out) == stable_csv(b.out));
}

TEST_CASE("bench json carries the same rows plus timing") {
  const RunResult r = run(
      "bench --op log --algebra cl11 --samples 100 --terms 8 --seed 3 --json");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"bench\":"));
  CHECK(contains(r.out, "\"timing\":{"));
  CHECK(contains(r.out, "_ns_per_op\":"));
  CHECK(contains(r.out, "\"impl\":\"closed\""));
  CHECK(contains(r.out, "\"impl\":\"series\""));
}
