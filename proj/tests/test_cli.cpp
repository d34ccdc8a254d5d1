#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "diffset/serialize.hpp"

namespace fs = std::filesystem;
using diffset::Json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI inside dir so that relative paths in reports are stable.
Run run(const fs::path& dir, const std::string& args) {
  fs::path out = dir / "stdout.txt";
  std::string cmd = "cd '" + dir.string() + "' && '" + std::string(DIFFSET_CLI_PATH) + "' " + args + " > '" +
                    out.string() + "' 2> '" + (dir / "stderr.txt").string() + "'";
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("diffset_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

void gen(const std::string& spec, const std::string& out) {
  auto r = run(scratch(), "gen --spec '" + spec + "' --out " + out + " --format bits");
  REQUIRE(r.code == 0);
}

void check_schema(const Json& j) {
  for (auto key : {"command", "version", "inputs", "parameters", "results", "certificates", "violations", "timing", "seed"})
    CHECK_MESSAGE(j.contains(key), key);
  CHECK(j["version"] == diffset::version_string);
  CHECK(j["timing"]["seconds"].is_number());
  CHECK(j["violations"].is_array());
}

void golden(const std::string& name, const Json& report) {
  fs::path path = fs::path(DIFFSET_GOLDEN_DIR) / (name + ".json");
  std::string text = diffset::strip_timing(report).dump(2) + "\n";
  if (std::getenv("DIFFSET_UPDATE_GOLDEN")) {
    std::ofstream(path) << text;
    return;
  }
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == text);
}

}  // namespace

TEST_CASE("cover report on residues {0,1} mod 5") {
  gen(R"({"kind":"residues","window":[0,100000],"modulus":5,"classes":[0,1]})", "r5.txt");
  auto r = run(scratch(), "cover --set r5.txt --eps 0 --x=-500..500 --n 50000");
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  check_schema(j);
  CHECK(j["command"] == "cover");
  CHECK(j["results"]["shifts"] == Json::array({0, 2}));
  CHECK(j["results"]["k_bound"] == 2);
  CHECK(j["results"]["covered"] == true);
  CHECK(j["violations"].empty());
  golden("cover_r5", j);
}

TEST_CASE("jin cover report on multiples of 3") {
  gen(R"({"kind":"residues","window":[0,100000],"modulus":3,"classes":[0]})", "m3.txt");
  auto r = run(scratch(), "pipeline --a m3.txt --b m3.txt --N 100000 --nu 1000 --n 12 --jin --x=-500..500");
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  check_schema(j);
  CHECK(j["results"]["size"].get<int>() <= 9);
  CHECK(j["results"]["full"] == true);
  golden("jin_m3", j);
}

TEST_CASE("delta report and CSV table") {
  gen(R"({"kind":"residues","window":[0,4999],"modulus":5,"classes":[0,1]})", "d5.txt");
  auto r = run(scratch(), "delta --set d5.txt --eps 1/4 --n 500 --trange=-20..20");
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  check_schema(j);
  golden("delta_r5", j);

  auto c = run(scratch(), "delta --set d5.txt --eps 1/4 --n 500 --trange=-20..20 --csv");
  REQUIRE(c.code == 0);
  std::stringstream ss(c.out);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "t,value,hits,den,at,member");
  int rows = 0, members = 0;
  while (std::getline(ss, line)) {
    ++rows;
    members += line.back() == '1';
  }
  CHECK(rows == 41);
  CHECK(members == 9);
}

TEST_CASE("other subcommands produce reports") {
  gen(R"({"kind":"bernoulli","window":[1,20000],"seed":11,"p":"1/2"})", "b.txt");
  gen(R"({"kind":"residues","window":[0,700],"modulus":7,"classes":[0,1]})", "r7.txt");
  gen(R"({"kind":"residues","window":[0,30000],"modulus":2,"classes":[0]})", "e.txt");

  auto a = run(scratch(), "analyze --set b.txt --n 100 --n 1000 --L 5 --g 4");
  REQUIRE(a.code == 0);
  auto ja = Json::parse(a.out);
  check_schema(ja);
  CHECK(ja["results"]["densities"].size() == 2);

  auto x = run(scratch(), "extract --set b.txt --n 10 --slack 1/20");
  REQUIRE(x.code == 0);
  check_schema(Json::parse(x.out));

  auto e = run(scratch(), "embed --x r7.txt --y r7.txt --m 10 --srange=-10..10");
  REQUIRE(e.code == 0);
  CHECK(Json::parse(e.out)["results"]["embeddable"]["ok"] == true);

  auto ch = run(scratch(), "pipeline --chain e.txt e.txt --N 20000 --nu 1000 --n 8");
  REQUIRE(ch.code == 0);
  check_schema(Json::parse(ch.out));

  auto in = run(scratch(), "pipeline --a e.txt --b e.txt --N 20000 --nu 1000 --n 8 --intersect --eps 0 --x=-50..50");
  REQUIRE(in.code == 0);

  auto b = run(scratch(), "bohr --d r7.txt --freqs 1/7 --eps 3/20 --interval 0..700");
  REQUIRE(b.code == 0);
  // {0,1} mod 7 does not contain the residue-6 class of the Bohr set
  auto jb = Json::parse(b.out);
  CHECK(jb["results"]["contained"]["ok"] == false);
  CHECK(jb["results"]["contained"]["counterexamples"].front() == 6);

  gen(R"({"kind":"thick_triple","window":[-20000,20000],"scale":20})", "tt.txt");
  CHECK(fs::exists(scratch() / "tt.txt.A"));
  CHECK(fs::exists(scratch() / "tt.txt.C"));
}

TEST_CASE("exit codes") {
  CHECK(run(scratch(), "").code == 2);
  CHECK(run(scratch(), "--help").code == 0);
  CHECK(run(scratch(), "analyze --set missing.txt").code == 2);
  CHECK(run(scratch(), "delta --set r5.txt --eps 1/4 --n 500 --trange 1..x").code == 2);
  CHECK(run(scratch(), "gen --spec '{\"kind\":\"bogus\",\"window\":[0,1]}' --out z.txt").code == 2);
  CHECK(run(scratch(), "cover --set r5.txt --eps 4/25 --x=-5..5 --n 1000").code == 4);
  CHECK(run(scratch(), "selftest --trials 100 --seed 1").code == 0);
}
