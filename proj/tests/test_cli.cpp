#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cliquepart/cli.hpp"
#include "cliquepart/formulations.hpp"
#include "cliquepart/instances.hpp"

using namespace cliquepart;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& f) const { return (path / f).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"gen", "random"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("gen writes seeded files and echoes its config") {
  TempDir dir("cliquepart_cli_gen");
  const auto r = run({"gen", "random", "30", "--count", "10", "--seed", "5", "--out", dir.path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.err.rfind("config: gen random 30 --seed 5 --count 10", 0) == 0);
  const auto files = lines(r.out);
  REQUIRE(files.size() == 10);
  CHECK(files[3] == dir / "random_n30_s8.cpp");
  CHECK(load_instance(files[3]).same_data(gen_random(30, 8)));

  CHECK(run({"gen", "structured", "30", "--clusters", "5", "--out", dir.path.string()}).code == 0);
  const auto bad = run({"gen", "structured", "30", "--clusters", "7", "--out", dir.path.string()});
  CHECK(bad.code == cli::kExitUsage);
  CHECK(bad.err.find("error:") != std::string::npos);
  CHECK(run({"gen", "mystery", "30"}).code == cli::kExitUsage);
}

TEST_CASE("count reports per kind and expectations") {
  TempDir dir("cliquepart_cli_count");
  save_instance(gen_random(30, 1), dir / "r.cpp");
  save_instance(gen_sparse(30, 1), dir / "s.cpp");
  save_instance(gen_modularity(10, 2, 1), dir / "m.cpp");
  const auto r = run({"count", dir / "r.cpp", dir / "s.cpp", dir / "m.cpp", "--kinds",
                      "P,MRP,PCP,PFRP", "--expected"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "instance,family,n,seed,P,MRP,PCP,PFRP,E[P],E[MRP],E[PCP],E[PFRP]");
  CHECK(ls[1].rfind("r,random,30,1,12180,", 0) == 0);
  CHECK(ls[1].find(",12180,9135,6090,3045") != std::string::npos);
  CHECK(ls[2].find(",12180,20300/3,4060,4060") != std::string::npos);
  CHECK(ls[3].find(",-,-,-,-") != std::string::npos);

  const auto all = run({"count", dir / "r.cpp", "--kinds", "all", "--format", "json"});
  const auto j = nlohmann::json::parse(all.out);
  CHECK(j[0].size() == 4 + 8);
  CHECK(run({"count", dir / "r.cpp", "--kinds", "ZZ"}).code == cli::kExitUsage);
  CHECK(run({"count", dir / "missing.cpp"}).code == cli::kExitUsage);
}

TEST_CASE("solve") {
  TempDir dir("cliquepart_cli_solve");
  save_instance(WeightedInstance(3, {1, -1, 1}), dir / "tri.cpp");
  auto r = run({"solve", dir / "tri.cpp", "--kind", "P", "--engine", "oracle"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("value: 1\n") != std::string::npos);

  r = run({"solve", dir / "tri.cpp", "--kind", "PFRP", "--engine", "vectors", "--all", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == 1);
  CHECK(j["objective_value"] == 6);
  CHECK(j["solutions"].size() == 2);

  save_instance(gen_structured(30, 5, Rational(1), 2), dir / "st.cpp");
  r = run({"solve", dir / "st.cpp", "--kind", "PFRP", "--engine", "bnb"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("value: 75\n") != std::string::npos);
  CHECK(r.out.find("status: optimal\n") != std::string::npos);

  r = run({"solve", dir / "st.cpp", "--engine", "vectors"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("n <= 7") != std::string::npos);
  CHECK(run({"solve", dir / "st.cpp", "--engine", "simplex"}).code == cli::kExitUsage);
}

TEST_CASE("verify fuzz and files") {
  auto r = run({"verify", "--fuzz", "random", "5", "200", "42", "--jobs", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verified: 200/200 pass") != std::string::npos);
  r = run({"verify", "--fuzz", "modularity", "6", "50", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verified: 50/50 pass") != std::string::npos);
  r = run({"verify", "--fuzz", "sparse", "5", "30", "1", "--experimental"});
  CHECK(r.code == 0);
  CHECK(r.out.find(std::string(kExperimentalNote)) != std::string::npos);
  CHECK(run({"verify", "--fuzz", "random", "9", "1", "1"}).code == cli::kExitUsage);
  CHECK(run({"verify"}).code == cli::kExitUsage);

  TempDir dir("cliquepart_cli_verify");
  save_instance(gen_sparse(6, 3), dir / "a.cpp");
  save_instance(gen_random(10, 3), dir / "big.cpp");
  r = run({"verify", dir / "a.cpp", dir / "big.cpp"});
  CHECK(r.code == cli::kExitVerifyFailed);
  CHECK(r.out.find("verified: 1/2 pass") != std::string::npos);
}

TEST_CASE("verify_instance") {
  const auto v = cli::verify_instance(WeightedInstance(3, {1, -1, 1}), true);
  CHECK(v.passed);
  CHECK(v.failures.empty());
}

TEST_CASE("export writes one LP per kind") {
  TempDir dir("cliquepart_cli_export");
  save_instance(WeightedInstance(3, {1, -1, 1}), dir / "tri.cpp");
  auto r = run({"export", dir / "tri.cpp", "--kinds", "PFRP,P", "--out", dir.path.string()});
  REQUIRE(r.code == 0);
  const auto text = slurp(dir / "tri__PFRP.lp");
  std::size_t rows = 0;
  for (const auto& l : lines(text)) rows += l.rfind(" t_", 0) == 0;
  CHECK(rows == 1);
  CHECK(fs::exists(dir / "tri__P.lp"));
}

TEST_CASE("bench rows follow the manifest") {
  TempDir dir("cliquepart_cli_bench");
  {
    std::ofstream manifest(dir / "list.txt");
    manifest << "# structured n = 12\n";
    for (int s = 1; s <= 10; ++s) {
      const std::string name = "st" + std::to_string(s) + ".cpp";
      save_instance(gen_structured(12, 4, Rational(3, 4), static_cast<std::uint64_t>(s)), dir / name);
      manifest << name << "\n";
    }
  }
  const auto r = run({"bench", dir / "list.txt", "--jobs", "3", "--format", "json", "--no-timing"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 30);
  for (std::size_t t = 0; t < 30; t += 3) {
    CHECK(j[t]["kind"] == "MRP");
    CHECK(j[t + 1]["kind"] == "PCP");
    CHECK(j[t + 2]["kind"] == "PFRP");
    for (std::size_t u = t; u < t + 3; ++u) {
      CHECK(j[u]["status"] == "optimal");
      CHECK(j[u]["value"] == j[t]["value"]);
      CHECK(j[u]["instance"] == j[t]["instance"]);
    }
  }
  CHECK(j[0]["instance"] == "st1");
  const auto serial = run({"bench", dir / "list.txt", "--jobs", "1", "--format", "json", "--no-timing"});
  CHECK(serial.out == r.out);

  std::ofstream(dir / "empty.txt") << "# nothing\n";
  const auto e = run({"bench", dir / "empty.txt"});
  CHECK(e.code == 0);
  CHECK(e.out == "instance,family,n,seed,kind,count,solver,status,value,elapsed\n");
}
