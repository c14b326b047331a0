#include "cliquepart/solvers.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace cliquepart {

namespace {

using Clock = std::chrono::steady_clock;

constexpr Weight kMinusInf = std::numeric_limits<Weight>::min();

void sort_unique(std::vector<EdgeVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Restricted-growth enumeration. Gains of joining each open block are computed
// once per node and reused by all of its children.
class PartitionEnumerator {
 public:
  PartitionEnumerator(const WeightedInstance& inst, SolveMode mode)
      : inst_(inst), mode_(mode), labels_(static_cast<std::size_t>(inst.n()), 0),
        gains_(static_cast<std::size_t>(inst.n()) * (inst.n() + 1), 0) {}

  void run() {
    labels_[0] = 0;
    descend(1, 1, 0);
  }

  Weight best = kMinusInf;
  std::vector<std::vector<int>> optima;
  std::uint64_t leaves = 0;

 private:
  void descend(int v, int blocks, Weight value) {
    const int n = inst_.n();
    if (v == n) {
      ++leaves;
      if (value > best) {
        best = value;
        optima.clear();
      }
      if (value == best && (mode_ == SolveMode::All || optima.empty())) optima.push_back(labels_);
      return;
    }
    Weight* gain = &gains_[static_cast<std::size_t>(v) * (n + 1)];
    std::fill(gain, gain + blocks, 0);
    for (int u = 0; u < v; ++u) gain[labels_[u]] += inst_.weight(u, v);
    for (int b = 0; b < blocks; ++b) {
      labels_[v] = b;
      descend(v + 1, blocks, value + gain[b]);
    }
    labels_[v] = blocks;
    descend(v + 1, blocks + 1, value);
  }

  const WeightedInstance& inst_;
  SolveMode mode_;
  std::vector<int> labels_;
  std::vector<Weight> gains_;
};

// Depth-first over edge bits in index order, 0 before 1, so leaves are met in
// lexicographic order. A constraint is checked as soon as its last variable is
// fixed.
class VectorEnumerator {
 public:
  VectorEnumerator(const ConstraintSet& cs, SolveMode mode) : cs_(cs), mode_(mode) {
    const std::size_t m = pair_count(cs.n);
    by_last_.resize(m);
    for (const auto& c : cs.constraints) {
      const auto a = static_cast<std::uint32_t>(edge_index_unordered(cs.n, c.i, c.j));
      const auto b = static_cast<std::uint32_t>(edge_index_unordered(cs.n, c.j, c.k));
      const auto r = static_cast<std::uint32_t>(edge_index_unordered(cs.n, c.i, c.k));
      by_last_[std::max({a, b, r})].push_back({a, b, r});
    }
    suffix_positive_.assign(m + 1, 0);
    for (std::size_t t = m; t-- > 0;)
      suffix_positive_[t] = suffix_positive_[t + 1] + std::max<Weight>(0, cs.objective_weights[t]);
  }

  void run() { descend(0, 0, 0); }

  Weight best = kMinusInf;
  std::vector<std::uint64_t> optima;
  std::uint64_t nodes = 0;

 private:
  struct Row {
    std::uint32_t lhs1, lhs2, rhs;
  };

  bool satisfied(std::size_t t, std::uint64_t mask) const {
    for (const Row& r : by_last_[t])
      if (((mask >> r.lhs1) & 1U) && ((mask >> r.lhs2) & 1U) && !((mask >> r.rhs) & 1U))
        return false;
    return true;
  }

  void descend(std::size_t t, std::uint64_t mask, Weight value) {
    ++nodes;
    const std::size_t m = by_last_.size();
    if (t == m) {
      if (value > best) {
        best = value;
        optima.clear();
      }
      if (value == best && (mode_ == SolveMode::All || optima.empty())) optima.push_back(mask);
      return;
    }
    const Weight bound = value + suffix_positive_[t];
    if (best != kMinusInf && (bound < best || (mode_ == SolveMode::One && bound == best))) return;
    if (satisfied(t, mask)) descend(t + 1, mask, value);
    const std::uint64_t with = mask | (std::uint64_t{1} << t);
    if (satisfied(t, with)) descend(t + 1, with, value + cs_.objective_weights[t]);
  }

  const ConstraintSet& cs_;
  SolveMode mode_;
  std::vector<std::vector<Row>> by_last_;
  std::vector<Weight> suffix_positive_;
};

class BranchAndBound {
 public:
  BranchAndBound(const WeightedInstance& inst, const SolveLimits& limits)
      : inst_(inst), limits_(limits), labels_(static_cast<std::size_t>(inst.n()), 0),
        gains_(static_cast<std::size_t>(inst.n()) * (inst.n() + 1), 0),
        rest_positive_(static_cast<std::size_t>(inst.n()) + 1, 0), start_(Clock::now()) {
    // rest_positive_[v]: positive weight on pairs whose larger endpoint is >= v,
    // i.e. pairs still touching an unassigned vertex once 0..v-1 are placed.
    const int n = inst.n();
    for (int v = n - 1; v >= 0; --v) {
      Weight row = 0;
      for (int u = 0; u < v; ++u) row += std::max<Weight>(0, inst.weight(u, v));
      rest_positive_[v] = rest_positive_[v + 1] + row;
    }
    best_labels_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) best_labels_[v] = v;
  }

  void run() {
    labels_[0] = 0;
    descend(1, 1, 0);
  }

  Weight best = 0;  // all singletons
  SolveStatus status = SolveStatus::Optimal;
  std::uint64_t nodes = 0;
  const std::vector<int>& best_labels() const { return best_labels_; }

 private:
  bool out_of_budget() {
    if (status != SolveStatus::Optimal) return true;
    if (limits_.node_limit && nodes > *limits_.node_limit) {
      status = SolveStatus::NodeLimit;
      return true;
    }
    if (limits_.time_limit_seconds && (nodes & 0xFFF) == 0 &&
        std::chrono::duration<double>(Clock::now() - start_).count() > *limits_.time_limit_seconds) {
      status = SolveStatus::TimeLimit;
      return true;
    }
    return false;
  }

  void descend(int v, int blocks, Weight value) {
    ++nodes;
    if (out_of_budget()) return;
    const int n = inst_.n();
    if (v == n) {
      if (value > best) {
        best = value;
        best_labels_ = labels_;
      }
      return;
    }
    if (value + rest_positive_[v] <= best) return;
    Weight* gain = &gains_[static_cast<std::size_t>(v) * (n + 1)];
    std::fill(gain, gain + blocks, 0);
    for (int u = 0; u < v; ++u) gain[labels_[u]] += inst_.weight(u, v);
    for (int b = 0; b < blocks; ++b) {
      labels_[v] = b;
      descend(v + 1, blocks, value + gain[b]);
      if (status != SolveStatus::Optimal) return;
    }
    labels_[v] = blocks;
    descend(v + 1, blocks + 1, value);
  }

  const WeightedInstance& inst_;
  SolveLimits limits_;
  std::vector<int> labels_;
  std::vector<int> best_labels_;
  std::vector<Weight> gains_;
  std::vector<Weight> rest_positive_;
  Clock::time_point start_;
};

}  // namespace

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::NodeLimit: return "node_limit";
    case SolveStatus::TimeLimit: return "time_limit";
  }
  return "?";
}

SolveReport solve_oracle(const WeightedInstance& inst, SolveMode mode) {
  if (inst.n() > kMaxOracleVertices)
    throw Error("partition oracle supports n <= " + std::to_string(kMaxOracleVertices) +
                " (got n = " + std::to_string(inst.n()) + ")");
  const auto start = Clock::now();
  PartitionEnumerator en(inst, mode);
  en.run();

  SolveReport report;
  report.solver = "oracle";
  report.optimal_value = report.original_value = en.best;
  report.explored = en.leaves;
  for (const auto& labels : en.optima) {
    report.partitions.push_back(Partition::from_labels(labels));
    report.solutions.push_back(partition_to_edges(report.partitions.back()));
  }
  std::sort(report.partitions.begin(), report.partitions.end());
  sort_unique(report.solutions);
  report.elapsed = Clock::now() - start;
  return report;
}

SolveReport solve_vectors(const ConstraintSet& cs, SolveMode mode) {
  if (cs.n > kMaxVectorVertices)
    throw Error("vector enumeration supports n <= " + std::to_string(kMaxVectorVertices) +
                " (got n = " + std::to_string(cs.n) + ")");
  if (cs.objective_weights.size() != pair_count(cs.n))
    throw Error("constraint set objective has the wrong dimension");
  const auto start = Clock::now();
  VectorEnumerator en(cs, mode);
  en.run();

  SolveReport report;
  report.solver = "vectors";
  report.kind = cs.kind;
  report.scaled_objective = cs.scaled_objective;
  report.experimental = is_experimental(cs.kind);
  report.optimal_value = en.best;
  report.explored = en.nodes;
  for (std::uint64_t mask : en.optima) report.solutions.push_back(EdgeVector::from_mask(cs.n, mask));
  sort_unique(report.solutions);
  const EdgeVector& first = report.solutions.front();
  if (cs.scaled_objective) {
    const Weight numerator = en.best + static_cast<Weight>(first.count());
    if (numerator % cs.scale != 0) throw Error("scaled optimum inconsistent with its support");
    report.original_value = numerator / cs.scale;
  } else {
    report.original_value = en.best;
  }
  report.elapsed = Clock::now() - start;
  return report;
}

SolveReport solve_bnb(const WeightedInstance& inst, const SolveLimits& limits) {
  const auto start = Clock::now();
  BranchAndBound bb(inst, limits);
  bb.run();

  SolveReport report;
  report.solver = "bnb";
  report.status = bb.status;
  report.optimal_value = report.original_value = bb.best;
  report.explored = bb.nodes;
  report.partitions.push_back(Partition::from_labels(bb.best_labels()));
  report.solutions.push_back(partition_to_edges(report.partitions.back()));
  report.elapsed = Clock::now() - start;
  return report;
}

// ---------------------------------------------------------------------------
// Verifiers

Theorem1Result verify_theorem1(const WeightedInstance& inst) {
  const auto full = solve_vectors(build_constraints(inst, FormulationKind::P), SolveMode::All);
  const auto reduced = solve_vectors(build_constraints(inst, FormulationKind::FRP), SolveMode::All);
  Theorem1Result result;
  result.optimal_value = full.optimal_value;
  result.optimal_count = full.solutions.size();
  result.holds = full.optimal_value == reduced.optimal_value && full.solutions == reduced.solutions;
  if (!result.holds) {
    std::vector<EdgeVector> diff;
    std::set_symmetric_difference(full.solutions.begin(), full.solutions.end(),
                                  reduced.solutions.begin(), reduced.solutions.end(),
                                  std::back_inserter(diff));
    if (!diff.empty()) result.witness = diff.front();
  }
  return result;
}

PipelineResult verify_reduction_pipeline(const WeightedInstance& inst, FormulationKind kind) {
  if (!uses_scaled_objective(kind))
    throw Error("the repair pipeline applies to MRP, PCP and PFRP only");
  PipelineResult result;
  result.kind = kind;
  result.oracle_value = solve_oracle(inst).optimal_value;
  const auto report = solve_vectors(build_constraints(inst, kind), SolveMode::All);
  result.optima = report.solutions.size();
  result.ok = true;
  for (const auto& x : report.solutions) {
    const bool feasible = is_clique_partitioning(x);
    result.pre_repair_feasible = result.pre_repair_feasible && feasible;
    const Weight repaired = objective_value(inst, repair_to_clique_partitioning(x));
    std::string failure;
    if (repaired != result.oracle_value)
      failure = "repaired value " + std::to_string(repaired) + " != oracle " +
                std::to_string(result.oracle_value);
    else if (kind == FormulationKind::PFRP && !feasible)
      failure = "PFRP optimum is not a clique partitioning before repair";
    if (!failure.empty() && result.ok) {
      result.ok = false;
      result.witness = x;
      result.failure = failure;
    }
  }
  return result;
}

bool Observation1Report::passed() const {
  return std::all_of(components.begin(), components.end(), [](const ComponentDiagnostics& d) {
    return d.c1_connected && d.c2_ok && d.c3_ok;
  });
}

namespace {

bool connected(const Component& comp) {
  const auto size = comp.vertices.size();
  if (size <= 1) return true;
  auto local = [&](int v) {
    return static_cast<std::size_t>(
        std::lower_bound(comp.vertices.begin(), comp.vertices.end(), v) - comp.vertices.begin());
  };
  std::vector<std::vector<std::size_t>> adj(size);
  for (auto [a, b] : comp.edges) {
    adj[local(a)].push_back(local(b));
    adj[local(b)].push_back(local(a));
  }
  std::vector<bool> seen(size, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == size;
}

// Minimum over all 2^(s-1) - 1 proper cuts, enumerated in Gray-code order with
// the first vertex pinned outside S.
Weight min_cut_exhaustive(const WeightedInstance& inst, const EdgeVector& x, const Component& comp) {
  const auto& vs = comp.vertices;
  const int s = static_cast<int>(vs.size());
  std::vector<Weight> f(static_cast<std::size_t>(s) * s, 0);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      if (a != b && x.get(vs[a], vs[b])) f[a * s + b] = inst.weight(vs[a], vs[b]);
  std::vector<bool> in_s(static_cast<std::size_t>(s), false);
  Weight cut = 0;
  Weight best = std::numeric_limits<Weight>::max();
  const std::uint64_t total = std::uint64_t{1} << (s - 1);
  for (std::uint64_t step = 1; step < total; ++step) {
    const int flip = 1 + std::countr_zero(step);  // local vertex 1..s-1
    for (int u = 0; u < s; ++u) {
      if (u == flip) continue;
      cut += (in_s[u] == in_s[flip]) ? f[flip * s + u] : -f[flip * s + u];
    }
    in_s[flip] = !in_s[flip];
    best = std::min(best, cut);
  }
  return best;
}

}  // namespace

Observation1Report verify_observation1(const WeightedInstance& inst, const EdgeVector& x,
                                       bool check_optimality) {
  if (x.n() != inst.n()) throw Error("edge vector dimension mismatch");
  if (check_optimality && inst.n() >= 3 && inst.n() <= kMaxVectorVertices) {
    const auto frp = solve_vectors(build_constraints(inst, FormulationKind::FRP), SolveMode::All);
    if (!std::binary_search(frp.solutions.begin(), frp.solutions.end(), x))
      throw Error("edge vector is not an FRP optimum");
  }
  Observation1Report report;
  for (auto& comp : edges_to_components(x)) {
    ComponentDiagnostics d;
    d.c1_connected = connected(comp);
    const int s = static_cast<int>(comp.vertices.size());
    if (s > kMaxExhaustiveCut) {
      d.c2_skipped = true;
    } else if (s >= 2) {
      d.c2_min_cut = min_cut_exhaustive(inst, x, comp);
      d.c2_ok = *d.c2_min_cut >= 0;
    }
    for (int j : comp.vertices)
      for (int i : comp.vertices)
        for (int k : comp.vertices) {
          if (i >= k || i == j || k == j) continue;
          if (x.get(i, j) && x.get(j, k) && !x.get(i, k) &&
              inst.weight(i, j) + inst.weight(j, k) >= 0)
            d.c3_violations.push_back({i, j, k});
        }
    std::sort(d.c3_violations.begin(), d.c3_violations.end());
    d.c3_ok = d.c3_violations.empty();
    d.component = std::move(comp);
    report.components.push_back(std::move(d));
  }
  return report;
}

}  // namespace cliquepart
