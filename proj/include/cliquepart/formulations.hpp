#pragma once

// Transitivity-constraint sets of the clique partitioning ILP and the sign
// rules that thin them out.
//
// A constraint (i, j, k) with i < k and centre j stands for
//   x_ij + x_jk <= 1 + x_ik.
// Kinds and the rule each one keeps a constraint by:
//   P     always
//   RP    w_ij >= 0 or w_jk >= 0
//   MRP   w_ij >= 1 or w_jk >= 1        (strict rule on perturbed weights)
//   FRP   w_ij + w_jk >= 0              (same optimal set as P)
//   PFRP  w_ij + w_jk >= 1              (strict rule on perturbed weights)
//   CP    one designated edge of the triangle has weight >= 0
//   PCP   that edge has weight >= 1
//   XFRP  w_ij + w_jk - w_ik >= 0       (experimental, unproven)
// For integer weights, "w >= 1" is exactly "w - eps > 0" and "a + b >= 1" is
// exactly "(a - eps) + (b - eps) > 0" for eps = 1 / (2m + 1), which is what
// ScaledInstance materialises without fractions.

#include <array>
#include <compare>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquepart/core.hpp"

namespace cliquepart {

struct TransitivityConstraint {
  int i = 0;
  int j = 0;  // centre
  int k = 0;

  auto operator<=>(const TransitivityConstraint&) const = default;
};

enum class FormulationKind { P, RP, MRP, CP, PCP, FRP, PFRP, XFRP };

inline constexpr std::array<FormulationKind, 8> kAllKinds = {
    FormulationKind::P,   FormulationKind::RP,  FormulationKind::MRP,  FormulationKind::CP,
    FormulationKind::PCP, FormulationKind::FRP, FormulationKind::PFRP, FormulationKind::XFRP};

inline constexpr std::string_view kExperimentalNote = "experimental: correctness conjectural";

std::string_view to_string(FormulationKind kind);
// Case-insensitive; accepts "mRP", "pFRP" and friends.
FormulationKind parse_kind(std::string_view text);

// MRP, PCP and PFRP are solved against the perturbed (scaled) weights.
bool uses_scaled_objective(FormulationKind kind);
bool is_experimental(FormulationKind kind);

// Integer realisation of w' = w - eps with eps = 1 / (2m + 1):
//   W_ij = (2m + 1) * w_ij - 1.
// The constructor checks that no two weights sharing a vertex sum to zero and
// that signs line up with the >= 1 thresholds on the original weights.
class ScaledInstance {
 public:
  explicit ScaledInstance(const WeightedInstance& base);

  const WeightedInstance& base() const { return base_; }
  int n() const { return base_.n(); }
  Weight scale() const { return scale_; }  // 2m + 1
  Weight weight(int i, int j) const { return weights_[edge_index_unordered(n(), i, j)]; }
  std::span<const Weight> weights() const { return weights_; }

  // Recovers sum(w x) from sum(W x) and the number of selected pairs.
  Weight original_value(Weight scaled_value, std::size_t selected) const;

 private:
  WeightedInstance base_;
  Weight scale_ = 1;
  std::vector<Weight> weights_;
};

ScaledInstance perturb_scale(const WeightedInstance& inst);

struct ConstraintSet {
  int n = 0;
  FormulationKind kind = FormulationKind::P;
  std::vector<TransitivityConstraint> constraints;  // (i, j, k) lex order
  std::vector<Weight> objective_weights;            // per pair, edge_index order
  bool scaled_objective = false;
  Weight scale = 1;  // 2m + 1 when scaled_objective
};

// 3 * C(n, 3); throws for n < 3.
std::uint64_t total_triples(int n);

// Every constraint for n vertices in (i, j, k) lex order.
std::vector<TransitivityConstraint> all_constraints(int n);

// The triangle edge whose sign decides a CP/PCP constraint.
std::pair<int, int> cp_condition_edge(const TransitivityConstraint& c);

// Membership rule evaluated on the original integer weights.
bool keeps(FormulationKind kind, const WeightedInstance& inst, const TransitivityConstraint& c);
// Strict membership rule on the perturbed weights; only MRP, PCP and PFRP.
bool keeps_strict(FormulationKind kind, const ScaledInstance& scaled,
                  const TransitivityConstraint& c);

ConstraintSet build_constraints(const WeightedInstance& inst, FormulationKind kind);
std::size_t count_constraints(const WeightedInstance& inst, FormulationKind kind);

// True when every constraint of sub also appears in super.
bool constraints_subset(const ConstraintSet& sub, const ConstraintSet& super);

// Closed-form E[count_constraints] for the random and sparse families.
Rational expected_count(FormulationKind kind, Family family, int n);

}  // namespace cliquepart
