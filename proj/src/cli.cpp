#include "cliquepart/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cliquepart/export.hpp"
#include "cliquepart/formulations.hpp"
#include "cliquepart/instances.hpp"
#include "cliquepart/solvers.hpp"

namespace cliquepart::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

template <typename F>
void parallel_for(std::size_t count, int jobs, F&& task) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count <= 1) {
    for (std::size_t t = 0; t < count; ++t) task(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w)
    pool.emplace_back([&] {
      for (std::size_t t = next++; t < count; t = next++) task(t);
    });
  for (auto& th : pool) th.join();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<FormulationKind> parse_kinds(const std::string& text) {
  if (text == "all") return {kAllKinds.begin(), kAllKinds.end()};
  std::vector<FormulationKind> kinds;
  for (const auto& name : split(text, ',')) {
    try {
      kinds.push_back(parse_kind(name));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  if (kinds.empty()) throw UsageError("no formulation kinds given");
  return kinds;
}

std::string join_kinds(const std::vector<FormulationKind>& kinds) {
  std::string out;
  for (std::size_t t = 0; t < kinds.size(); ++t) out += (t ? "," : "") + std::string(to_string(kinds[t]));
  return out;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw UsageError("invalid rational '" + text + "'");
  }
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string seed_text(const WeightedInstance& inst) {
  return inst.seed() ? std::to_string(*inst.seed()) : "-";
}

std::string instance_id(const fs::path& path) { return path.stem().string(); }

void echo(std::ostream& err, const std::string& config) { err << "config: " << config << '\n'; }

std::string quote_paths(const std::vector<std::string>& paths) {
  std::string out;
  for (const auto& p : paths) out += " " + p;
  return out;
}

std::string limits_text(const SolveLimits& limits) {
  std::string out;
  if (limits.node_limit) out += " --node-limit " + std::to_string(*limits.node_limit);
  if (limits.time_limit_seconds) {
    std::ostringstream os;
    os << *limits.time_limit_seconds;
    out += " --time-limit " + os.str();
  }
  return out;
}

GeneratorConfig fuzz_config(Family family, int n, std::uint64_t seed) {
  GeneratorConfig config;
  config.family = family;
  config.n = n;
  config.seed = seed;
  if (family == Family::Structured && n % config.k_clusters != 0)
    config.k_clusters = default_cluster_count(n);
  if (family == Family::Modularity && config.ba_attach >= n) config.ba_attach = n - 1;
  return config;
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  std::string family;
  int n = 30;
  std::uint64_t seed = 1;
  int count = 1;
  int clusters = 5;
  std::string p_in = "3/4";
  int attach = 2;
  std::string out_dir = ".";
};

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  GeneratorConfig config;
  try {
    config.family = parse_family(o.family);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  config.n = o.n;
  config.k_clusters = o.clusters;
  config.p_in = parse_rational(o.p_in);
  config.ba_attach = o.attach;
  if (o.count < 0) throw UsageError("--count must be nonnegative");
  try {
    config.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  echo(err, "gen " + o.family + " " + std::to_string(o.n) + " --seed " + std::to_string(o.seed) +
                " --count " + std::to_string(o.count) + " --clusters " + std::to_string(o.clusters) +
                " --p-in " + format_rational(config.p_in) + " --attach " +
                std::to_string(o.attach) + " --out " + o.out_dir);
  fs::create_directories(o.out_dir);
  for (int t = 0; t < o.count; ++t) {
    config.seed = o.seed + static_cast<std::uint64_t>(t);
    const auto inst = generate(config);
    const fs::path path = fs::path(o.out_dir) / (o.family + "_n" + std::to_string(o.n) + "_s" +
                                                 std::to_string(config.seed) + ".cpp");
    save_instance(inst, path);
    out << path.string() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// count

struct CountOptions {
  std::vector<std::string> files;
  std::string kinds = "all";
  bool expected = false;
  std::string format = "csv";
};

int cmd_count(const CountOptions& o, std::ostream& out, std::ostream& err) {
  const auto kinds = parse_kinds(o.kinds);
  const auto format = parse_report_format(o.format);
  echo(err, "count" + quote_paths(o.files) + " --kinds " + join_kinds(kinds) +
                (o.expected ? " --expected" : "") + " --format " + o.format);
  Table table;
  table.header = {"instance", "family", "n", "seed"};
  for (auto k : kinds) table.header.emplace_back(to_string(k));
  if (o.expected)
    for (auto k : kinds) table.header.push_back("E[" + std::string(to_string(k)) + "]");
  for (const auto& file : o.files) {
    const auto inst = load_instance(file);
    std::vector<std::string> row{instance_id(file), std::string(to_string(inst.family())),
                                 std::to_string(inst.n()), seed_text(inst)};
    for (auto k : kinds) row.push_back(std::to_string(count_constraints(inst, k)));
    if (o.expected) {
      const bool known = inst.family() == Family::Random || inst.family() == Family::Sparse;
      for (auto k : kinds)
        row.push_back(known ? format_rational(expected_count(k, inst.family(), inst.n())) : "-");
    }
    table.rows.push_back(std::move(row));
  }
  write_table(table, format, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// solve

struct SolveOptions {
  std::string file;
  std::string kind = "P";
  std::string engine = "bnb";
  std::optional<std::uint64_t> node_limit;
  std::optional<double> time_limit;
  bool all = false;
  std::string format = "text";
};

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  const auto kind = parse_kinds(o.kind).front();
  if (o.engine != "vectors" && o.engine != "bnb" && o.engine != "oracle")
    throw UsageError("unknown engine '" + o.engine + "' (vectors, bnb, oracle)");
  if (o.format != "text" && o.format != "json") throw UsageError("solve supports --format text|json");
  const SolveLimits limits{o.node_limit, o.time_limit};
  echo(err, "solve " + o.file + " --kind " + std::string(to_string(kind)) + " --engine " +
                o.engine + limits_text(limits) + (o.all ? " --all" : "") + " --format " + o.format);

  const auto inst = load_instance(o.file);
  const int n = inst.n();
  if (o.engine == "vectors" && n > kMaxVectorVertices)
    throw UsageError("engine vectors supports n <= " + std::to_string(kMaxVectorVertices) +
                     " (instance has n = " + std::to_string(n) + ")");
  if (o.engine == "oracle" && n > kMaxOracleVertices)
    throw UsageError("engine oracle supports n <= " + std::to_string(kMaxOracleVertices) +
                     " (instance has n = " + std::to_string(n) + ")");
  const auto mode = o.all ? SolveMode::All : SolveMode::One;
  const std::size_t constraints = n >= 3 ? count_constraints(inst, kind) : 0;

  SolveReport report;
  if (o.engine == "vectors")
    report = solve_vectors(build_constraints(inst, kind), mode);
  else if (o.engine == "oracle")
    report = solve_oracle(inst, mode);
  else
    report = solve_bnb(inst, limits);

  nlohmann::ordered_json j;
  j["instance"] = instance_id(o.file);
  j["kind"] = to_string(kind);
  if (is_experimental(kind)) j["note"] = kExperimentalNote;
  j["engine"] = o.engine;
  j["constraints"] = constraints;
  j["status"] = to_string(report.status);
  if (report.scaled_objective) j["objective_value"] = report.optimal_value;
  j["value"] = report.original_value;
  auto sols = nlohmann::ordered_json::array();
  Weight repaired_best = std::numeric_limits<Weight>::min();
  bool all_feasible = true;
  for (const auto& x : report.solutions) {
    const auto repaired = repair_to_clique_partitioning(x);
    const Weight rv = objective_value(inst, repaired);
    repaired_best = std::max(repaired_best, rv);
    all_feasible = all_feasible && is_clique_partitioning(x);
    nlohmann::ordered_json s;
    s["edges"] = x.to_string();
    s["clique_partitioning"] = is_clique_partitioning(x);
    s["partition"] = edges_to_partition(repaired).to_string();
    s["repaired_value"] = rv;
    sols.push_back(std::move(s));
  }
  j["repaired_value"] = repaired_best;
  j["clique_partitioning"] = all_feasible;
  j["explored"] = report.explored;
  j["elapsed"] = report.elapsed.count();
  j["solutions"] = sols;

  if (o.format == "json") {
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "solutions") continue;
    out << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
  }
  for (const auto& s : sols)
    out << "solution: " << s["partition"].get<std::string>()
        << " edges=" << s["edges"].get<std::string>()
        << " repaired_value=" << s["repaired_value"].dump() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::vector<std::string> files;
  std::vector<std::string> fuzz;
  bool experimental = false;
  int jobs = 1;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  struct Task {
    std::string label;
    std::optional<std::string> file;
    GeneratorConfig config;
  };
  std::vector<Task> tasks;
  std::string config_text = "verify" + quote_paths(o.files);
  if (!o.fuzz.empty()) {
    if (o.fuzz.size() != 4) throw UsageError("--fuzz expects: family n count seed");
    Family family;
    int n = 0;
    long long count = 0;
    std::uint64_t seed = 0;
    try {
      family = parse_family(o.fuzz[0]);
      n = std::stoi(o.fuzz[1]);
      count = std::stoll(o.fuzz[2]);
      seed = std::stoull(o.fuzz[3]);
    } catch (const std::exception& e) {
      throw UsageError(std::string("invalid --fuzz arguments: ") + e.what());
    }
    if (n < 3 || n > kMaxVectorVertices)
      throw UsageError("verify supports 3 <= n <= " + std::to_string(kMaxVectorVertices));
    if (count < 0) throw UsageError("fuzz count must be nonnegative");
    try {
      fuzz_config(family, n, seed).validate();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    for (long long t = 0; t < count; ++t) {
      auto config = fuzz_config(family, n, seed + static_cast<std::uint64_t>(t));
      tasks.push_back({o.fuzz[0] + "_n" + std::to_string(n) + "_s" + std::to_string(config.seed),
                       std::nullopt, config});
    }
    config_text += " --fuzz " + o.fuzz[0] + " " + o.fuzz[1] + " " + o.fuzz[2] + " " + o.fuzz[3];
  }
  for (const auto& f : o.files) tasks.push_back({instance_id(f), f, {}});
  if (tasks.empty()) throw UsageError("verify needs instance files or --fuzz");
  echo(err, config_text + (o.experimental ? " --experimental" : "") + " --jobs " +
                std::to_string(o.jobs));

  std::vector<VerifyOutcome> outcomes(tasks.size());
  parallel_for(tasks.size(), o.jobs, [&](std::size_t t) {
    try {
      const auto inst = tasks[t].file ? load_instance(*tasks[t].file) : generate(tasks[t].config);
      if (inst.n() < 3 || inst.n() > kMaxVectorVertices)
        throw Error("verify supports 3 <= n <= " + std::to_string(kMaxVectorVertices) +
                    " (got n = " + std::to_string(inst.n()) + ")");
      outcomes[t] = verify_instance(inst, o.experimental);
    } catch (const std::exception& e) {
      outcomes[t].passed = false;
      outcomes[t].failures.push_back(std::string("error: ") + e.what());
    }
  });

  std::size_t passed = 0;
  std::size_t counterexamples = 0;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const auto& oc = outcomes[t];
    if (oc.passed) ++passed;
    for (const auto& f : oc.failures) out << "FAIL " << tasks[t].label << ": " << f << '\n';
    for (const auto& c : oc.conjecture) {
      out << "XFRP conjecture counterexample " << tasks[t].label << ": " << c << '\n';
      ++counterexamples;
    }
  }
  out << "verified: " << passed << "/" << tasks.size() << " pass\n";
  if (o.experimental)
    out << "XFRP (" << kExperimentalNote << "): " << counterexamples << " counterexample(s)\n";
  return passed == tasks.size() ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// export

struct ExportOptions {
  std::string file;
  std::string kinds = "all";
  std::string out_dir = ".";
};

int cmd_export(const ExportOptions& o, std::ostream& out, std::ostream& err) {
  const auto kinds = parse_kinds(o.kinds);
  echo(err, "export " + o.file + " --kinds " + join_kinds(kinds) + " --out " + o.out_dir);
  const auto inst = load_instance(o.file);
  if (inst.n() < 3) throw UsageError("export needs n >= 3");
  fs::create_directories(o.out_dir);
  for (auto kind : kinds) {
    const fs::path path =
        fs::path(o.out_dir) / (instance_id(o.file) + "__" + std::string(to_string(kind)) + ".lp");
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot open '" + path.string() + "' for writing");
    write_lp(build_constraints(inst, kind), file);
    out << path.string() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::string manifest;
  std::string kinds = "MRP,PCP,PFRP";
  std::string engine = "bnb";
  std::optional<std::uint64_t> node_limit;
  std::optional<double> time_limit;
  std::string format = "csv";
  int jobs = 1;
  bool no_timing = false;
};

std::vector<fs::path> read_manifest(const fs::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw Error("cannot open manifest '" + manifest.string() + "'");
  std::vector<fs::path> paths;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    fs::path p = line.substr(first, last - first + 1);
    if (p.is_relative()) p = manifest.parent_path() / p;
    paths.push_back(p);
  }
  return paths;
}

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  const auto kinds = parse_kinds(o.kinds);
  const auto format = parse_report_format(o.format);
  if (o.engine != "vectors" && o.engine != "bnb" && o.engine != "oracle")
    throw UsageError("unknown engine '" + o.engine + "' (vectors, bnb, oracle)");
  const SolveLimits limits{o.node_limit, o.time_limit};
  echo(err, "bench " + o.manifest + " --kinds " + join_kinds(kinds) + " --engine " + o.engine +
                limits_text(limits) + " --format " + o.format + " --jobs " +
                std::to_string(o.jobs) + (o.no_timing ? " --no-timing" : ""));

  const auto paths = read_manifest(o.manifest);
  std::vector<WeightedInstance> instances;
  for (const auto& p : paths) instances.push_back(load_instance(p));
  for (const auto& inst : instances) {
    const int cap = o.engine == "vectors" ? kMaxVectorVertices
                    : o.engine == "oracle" ? kMaxOracleVertices
                                           : kMaxVertices;
    if (inst.n() > cap || inst.n() < 3)
      throw UsageError("engine " + o.engine + " supports 3 <= n <= " + std::to_string(cap));
  }

  std::vector<BenchRow> rows(instances.size() * kinds.size());
  std::vector<std::string> errors(rows.size());
  parallel_for(rows.size(), o.jobs, [&](std::size_t t) {
    const auto& inst = instances[t / kinds.size()];
    const auto kind = kinds[t % kinds.size()];
    auto& row = rows[t];
    row.instance_id = instance_id(paths[t / kinds.size()]);
    row.family = to_string(inst.family());
    row.n = inst.n();
    row.seed = seed_text(inst);
    row.kind = to_string(kind);
    row.solver = o.engine;
    try {
      const auto cs = build_constraints(inst, kind);
      row.constraint_count = cs.constraints.size();
      SolveReport report;
      if (o.engine == "vectors")
        report = solve_vectors(cs, SolveMode::One);
      else if (o.engine == "oracle")
        report = solve_oracle(inst);
      else
        report = solve_bnb(inst, limits);
      row.status = to_string(report.status);
      row.value = objective_value(inst, repair_to_clique_partitioning(report.solutions.front()));
      row.elapsed_seconds = o.no_timing ? 0.0 : report.elapsed.count();
    } catch (const std::exception& e) {
      errors[t] = e.what();
    }
  });
  for (const auto& e : errors)
    if (!e.empty()) throw Error(e);
  write_report(rows, format, out);
  return kExitOk;
}

}  // namespace

int default_jobs() {
  if (const char* env = std::getenv("CLIQUEPART_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

VerifyOutcome verify_instance(const WeightedInstance& inst, bool experimental) {
  VerifyOutcome outcome;
  auto fail = [&](std::string message) {
    outcome.passed = false;
    outcome.failures.push_back(std::move(message));
  };

  const auto theorem = verify_theorem1(inst);
  if (!theorem.holds)
    fail("P and FRP optimal sets differ" +
         (theorem.witness ? ", witness " + theorem.witness->to_string() : std::string()));

  for (auto kind : {FormulationKind::MRP, FormulationKind::PCP, FormulationKind::PFRP}) {
    const auto pipeline = verify_reduction_pipeline(inst, kind);
    if (!pipeline.ok)
      fail(std::string(to_string(kind)) + " pipeline: " + pipeline.failure +
           (pipeline.witness ? ", witness " + pipeline.witness->to_string() : std::string()));
  }

  const auto frp = solve_vectors(build_constraints(inst, FormulationKind::FRP), SolveMode::All);
  for (const auto& x : frp.solutions) {
    const auto report = verify_observation1(inst, x, false);
    if (!report.passed()) fail("observation diagnostics fail on FRP optimum " + x.to_string());
  }

  std::vector<ConstraintSet> sets;
  for (auto k : kAllKinds) sets.push_back(build_constraints(inst, k));
  auto set_of = [&](FormulationKind k) -> const ConstraintSet& {
    return sets[static_cast<std::size_t>(std::find(kAllKinds.begin(), kAllKinds.end(), k) -
                                         kAllKinds.begin())];
  };
  using K = FormulationKind;
  const std::pair<K, K> chain[] = {{K::PFRP, K::FRP}, {K::FRP, K::RP}, {K::RP, K::P},
                                   {K::MRP, K::RP},   {K::PCP, K::CP}, {K::CP, K::P}};
  for (auto [sub, super] : chain)
    if (!constraints_subset(set_of(sub), set_of(super)))
      fail("inclusion " + std::string(to_string(sub)) + " <= " + std::string(to_string(super)) +
           " violated");

  if (experimental) {
    const auto p = solve_vectors(set_of(K::P), SolveMode::All);
    const auto x = solve_vectors(set_of(K::XFRP), SolveMode::All);
    if (p.solutions != x.solutions)
      outcome.conjecture.push_back("XFRP optimal set differs from P (P value " +
                                   std::to_string(p.optimal_value) + ", XFRP value " +
                                   std::to_string(x.optimal_value) + ", XFRP optimum " +
                                   x.solutions.front().to_string() + ")");
  }
  return outcome;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clique partitioning formulations: generate, count, solve, verify, export, bench",
               "cliquepart"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate seeded instance files");
  gen_cmd->add_option("family", gen.family, "random | sparse | structured | modularity")->required();
  gen_cmd->add_option("n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--seed", gen.seed, "Base seed; file i uses seed + i");
  gen_cmd->add_option("--count", gen.count, "Number of instances");
  gen_cmd->add_option("--clusters", gen.clusters, "Structured: cluster count (must divide n)");
  gen_cmd->add_option("--p-in", gen.p_in, "Structured: within-cluster +1 probability, e.g. 3/4");
  gen_cmd->add_option("--attach", gen.attach, "Modularity: Barabasi-Albert attachment");
  gen_cmd->add_option("--out", gen.out_dir, "Output directory");

  CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "Count transitivity constraints per formulation");
  count_cmd->add_option("files", count.files, "Instance files")->required();
  count_cmd->add_option("--kinds", count.kinds, "Comma separated kinds or 'all'");
  count_cmd->add_flag("--expected", count.expected, "Add closed-form expectations (random/sparse)");
  count_cmd->add_option("--format", count.format, "csv | markdown | json");

  SolveOptions solve;
  std::uint64_t solve_nodes = 0;
  double solve_time = 0;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("file", solve.file, "Instance file")->required();
  solve_cmd->add_option("--kind", solve.kind, "Formulation kind");
  solve_cmd->add_option("--engine", solve.engine, "vectors | bnb | oracle");
  auto* solve_nodes_opt = solve_cmd->add_option("--node-limit", solve_nodes, "Branch-and-bound node limit");
  auto* solve_time_opt = solve_cmd->add_option("--time-limit", solve_time, "Branch-and-bound time limit (s)");
  solve_cmd->add_flag("--all", solve.all, "Report every optimal solution (vectors, oracle)");
  solve_cmd->add_option("--format", solve.format, "text | json");

  VerifyOptions verify;
  verify.jobs = default_jobs();
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check formulations on small instances");
  verify_cmd->add_option("files", verify.files, "Instance files");
  verify_cmd->add_option("--fuzz", verify.fuzz, "family n count seed")->expected(4);
  verify_cmd->add_flag("--experimental", verify.experimental, "Also test the XFRP conjecture");
  verify_cmd->add_option("--jobs", verify.jobs, "Parallel workers (default $CLIQUEPART_JOBS or 1)");

  ExportOptions exp;
  auto* export_cmd = app.add_subcommand("export", "Write LP model files");
  export_cmd->add_option("file", exp.file, "Instance file")->required();
  export_cmd->add_option("--kinds", exp.kinds, "Comma separated kinds or 'all'");
  export_cmd->add_option("--out", exp.out_dir, "Output directory");

  BenchOptions bench;
  bench.jobs = default_jobs();
  std::uint64_t bench_nodes = 0;
  double bench_time = 0;
  auto* bench_cmd = app.add_subcommand("bench", "Solve every manifest instance for each kind");
  bench_cmd->add_option("manifest", bench.manifest, "File listing instance paths")->required();
  bench_cmd->add_option("--kinds", bench.kinds, "Comma separated kinds or 'all'");
  bench_cmd->add_option("--engine", bench.engine, "vectors | bnb | oracle");
  auto* bench_nodes_opt = bench_cmd->add_option("--node-limit", bench_nodes, "Branch-and-bound node limit");
  auto* bench_time_opt = bench_cmd->add_option("--time-limit", bench_time, "Branch-and-bound time limit (s)");
  bench_cmd->add_option("--format", bench.format, "csv | markdown | json");
  bench_cmd->add_option("--jobs", bench.jobs, "Parallel workers (default $CLIQUEPART_JOBS or 1)");
  bench_cmd->add_flag("--no-timing", bench.no_timing, "Report elapsed as 0 for byte-stable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out, err);
    if (*count_cmd) return cmd_count(count, out, err);
    if (*solve_cmd) {
      if (*solve_nodes_opt) solve.node_limit = solve_nodes;
      if (*solve_time_opt) solve.time_limit = solve_time;
      return cmd_solve(solve, out, err);
    }
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*export_cmd) return cmd_export(exp, out, err);
    if (*bench_cmd) {
      if (*bench_nodes_opt) bench.node_limit = bench_nodes;
      if (*bench_time_opt) bench.time_limit = bench_time;
      return cmd_bench(bench, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace cliquepart::cli
