#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

const char* cli_path() {
  const char* p = std::getenv("CUBIPROX_CLI");
  REQUIRE_MESSAGE(p != nullptr, "CUBIPROX_CLI must point at the cubiprox binary");
  return p;
}

RunResult run(const std::string& args) {
  const std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

TEST_CASE("cubic command output and exit codes") {
  const RunResult ok = run("cubic -a 1 -b -6 -c 11 -d -6");
  CHECK(ok.code == 0);
  const json r = json::parse(ok.out);
  CHECK(r["schema"] == 1);
  CHECK(r["outputs"]["variant"] == "three_simple");
  CHECK(r["outputs"]["roots"][0].get<double>() == doctest::Approx(1.0));
  CHECK(r["outputs"]["roots"][2].get<double>() == doctest::Approx(3.0));
  CHECK(r.contains("residual"));

  CHECK(run("cubic -a 0 -b 1 -c 1 -d 1").code == 2);

  const json dbl = json::parse(run("cubic -a 1 -b 0 -c -3 -d 2").out);
  CHECK(dbl["outputs"]["variant"] == "simple_and_double");
  CHECK(dbl["outputs"]["roots"][0].get<double>() == doctest::Approx(-2.0));
  CHECK(dbl["outputs"]["roots"][1].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("operator commands") {
  const json pq = json::parse(run("prox quartic --alpha 1 --y 1").out);
  CHECK(pq["outputs"]["prox"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));

  const json pr = json::parse(run("prox reciprocal --alpha 1 --y 0").out);
  CHECK(pr["outputs"]["prox"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(run("project saddle --kind diag --alpha 1 --beta 1 --z 1 --gamma -1").code == 3);

  const json pe = json::parse(run("project epigraph --alpha 1 --vec 0 --scalar -1").out);
  CHECK(pe["outputs"]["shift"].get<double>() == doctest::Approx(1.0));
  CHECK(pe["outputs"]["scalar"].get<double>() == doctest::Approx(0.0));

  const json cv = json::parse(run("conjugate quartic --alpha 1 --y 4").out);
  CHECK(cv["outputs"]["value"].get<double>() == doctest::Approx(3.0).epsilon(1e-10));

  const json cr = json::parse(run("conjugate reciprocal --alpha 4 --y -1").out);
  CHECK(cr["outputs"]["value"].get<double>() == doctest::Approx(-4.0));

  const json dz = json::parse(run("depressed -p -1 -q 0").out);
  CHECK(dz["branch"] == "three_real");
  CHECK(dz["delta"].get<double>() == doctest::Approx(-1.0 / 27.0));
  CHECK(dz["theta"].get<double>() == doctest::Approx(std::acos(0.0)));
  CHECK(dz["outputs"]["roots"].size() == 3);
}

TEST_CASE("--check populates oracle fields") {
  const json r = json::parse(run("prox quartic --alpha 1 --y 1 --check").out);
  CHECK(r.contains("oracle"));
  CHECK(r["oracle_diff"].get<double>() <= 1e-6);
}

TEST_CASE("JSON output round-trips bit for bit") {
  const RunResult first = run("cubic -a 1.1 -b -2.7 -c 0.3 -d 0.9");
  REQUIRE(first.code == 0);
  const json r = json::parse(first.out);
  std::string args = "cubic";
  for (const char* k : {"a", "b", "c", "d"}) {
    args += std::string(" -") + k + " " + r["inputs"][k].dump();
  }
  const RunResult second = run(args);
  CHECK(second.out == first.out);
}

TEST_CASE("CSV uses a header row, comma separator, dot decimals") {
  const RunResult r = run("prox quartic --alpha 1 --y 0.1 --csv");
  REQUIRE(r.code == 0);
  const auto lines = split(r.out, '\n');
  REQUIRE(lines.size() >= 2);
  const auto head = split(lines[0], ',');
  const auto vals = split(lines[1], ',');
  REQUIRE(head.size() == vals.size());
  bool seen = false;
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (head[i] == "outputs.prox") {
      seen = true;
      // 17 significant digits must reparse to the exact double
      const double parsed = std::strtod(vals[i].c_str(), nullptr);
      const json again = json::parse(run("prox quartic --alpha 1 --y 0.1").out);
      CHECK(parsed == again["outputs"]["prox"].get<double>());
    }
  }
  CHECK(seen);
}

TEST_CASE("sample reciprocal is monotone and quartic hits the cancellation point") {
  const RunResult r = run("sample reciprocal --alpha 1 --from -5 --to 5 --points 1001 --csv");
  REQUIRE(r.code == 0);
  const auto lines = split(r.out, '\n');
  REQUIRE(lines.size() >= 1002);
  CHECK(lines[0] == "y,prox,branch,delta");
  double prev = -1e300;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const double v = std::strtod(split(lines[i], ',')[1].c_str(), nullptr);
    CHECK(v >= prev);
    prev = v;
  }

  const RunResult q = run("sample quartic --from 0.375 --to 0.375 --points 1 --csv");
  const auto qlines = split(q.out, '\n');
  REQUIRE(qlines.size() >= 2);
  const double proxv = std::strtod(split(qlines[1], ',')[3].c_str(), nullptr);
  CHECK(proxv == doctest::Approx(-0.25).epsilon(1e-12));
}

TEST_CASE("sample epigraph emits the branch map") {
  // the trig region for alpha = 1/2 only opens up past nu ~ 2.9
  const RunResult r =
      run("sample epigraph --alpha 0.5 --eta-from -1 --eta-to 6 --nu-from 0 --nu-to 4 "
          "--points 41 --csv");
  REQUIRE(r.code == 0);
  const auto lines = split(r.out, '\n');
  CHECK(lines[0] == "eta,nu,branch,delta");
  bool trig = false, cardano = false, interior = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = split(lines[i], ',');
    if (f[2] == "trig") trig = true;
    if (f[2] == "cardano") cardano = true;
    if (f[2] == "interior") interior = true;
  }
  CHECK(trig);
  CHECK(cardano);
  CHECK(interior);
}

TEST_CASE("empty sample range exits 2") {
  CHECK(run("sample reciprocal --points 0").code == 2);
  CHECK(run("sample reciprocal --from 5 --to -5").code == 2);
}

TEST_CASE("check suites run clean") {
  const RunResult r = run("check all --n 60 --seed 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run("check cubic --n 200").code == 0);
}
