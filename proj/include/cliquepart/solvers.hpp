#pragma once

// Exact solvers and verifiers.
//
//   solve_oracle   enumerates every set partition (restricted-growth strings)
//   solve_vectors  enumerates 0-1 edge vectors against an arbitrary
//                  constraint set; the independent ground truth for reduced
//                  formulations
//   solve_bnb      vertex-by-vertex branch and bound on partitions
//
// The verify_* functions compare these against one another.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquepart/core.hpp"
#include "cliquepart/formulations.hpp"

namespace cliquepart {

inline constexpr int kMaxOracleVertices = 13;
inline constexpr int kMaxVectorVertices = 7;
inline constexpr int kMaxExhaustiveCut = 20;

enum class SolveStatus { Optimal, NodeLimit, TimeLimit };
enum class SolveMode { One, All };

std::string_view to_string(SolveStatus status);

struct SolveLimits {
  std::optional<std::uint64_t> node_limit;
  std::optional<double> time_limit_seconds;
};

struct SolveReport {
  std::string solver;  // "oracle", "bnb" or "vectors"
  std::optional<FormulationKind> kind;
  SolveStatus status = SolveStatus::Optimal;
  // Best value in the objective's own scale, and the same solution measured
  // with the original weights. They differ only for perturbed objectives.
  Weight optimal_value = 0;
  Weight original_value = 0;
  bool scaled_objective = false;
  bool experimental = false;
  // Lex sorted and duplicate free; a single entry in SolveMode::One.
  std::vector<EdgeVector> solutions;
  std::vector<Partition> partitions;  // oracle and bnb only
  std::uint64_t explored = 0;
  std::chrono::duration<double> elapsed{0};
};

// Throws Error naming the bound when n > 13.
SolveReport solve_oracle(const WeightedInstance& inst, SolveMode mode = SolveMode::One);

// Throws Error naming the bound when n > 7. Maximises the set's objective
// weights over vectors satisfying every listed constraint.
SolveReport solve_vectors(const ConstraintSet& cs, SolveMode mode = SolveMode::One);

SolveReport solve_bnb(const WeightedInstance& inst, const SolveLimits& limits = {});

struct Theorem1Result {
  bool holds = false;
  Weight optimal_value = 0;
  std::size_t optimal_count = 0;
  std::optional<EdgeVector> witness;  // in exactly one of the two optimal sets
};

// Optimal vector sets of P and FRP under the original weights must coincide.
Theorem1Result verify_theorem1(const WeightedInstance& inst);

struct PipelineResult {
  bool ok = false;
  FormulationKind kind = FormulationKind::PFRP;
  Weight oracle_value = 0;
  std::size_t optima = 0;
  bool pre_repair_feasible = true;  // every optimum already a clique partitioning
  std::optional<EdgeVector> witness;
  std::string failure;
};

// Every optimum of a perturbed formulation (MRP, PCP, PFRP), once repaired,
// attains the oracle optimum; PFRP optima must need no repair.
PipelineResult verify_reduction_pipeline(const WeightedInstance& inst, FormulationKind kind);

struct ComponentDiagnostics {
  Component component;
  bool c1_connected = true;
  bool c2_skipped = false;
  std::optional<Weight> c2_min_cut;  // empty for singletons and skipped components
  bool c2_ok = true;
  bool c3_ok = true;
  std::vector<TransitivityConstraint> c3_violations;
};

struct Observation1Report {
  std::vector<ComponentDiagnostics> components;
  bool passed() const;
};

// Component diagnostics for an FRP optimum x: connectivity, every cut weight
// nonnegative, and w_ij + w_jk < 0 on each open path i-j-k. With
// check_optimality and n <= 7, x is first confirmed optimal for FRP.
Observation1Report verify_observation1(const WeightedInstance& inst, const EdgeVector& x,
                                       bool check_optimality = true);

}  // namespace cliquepart
