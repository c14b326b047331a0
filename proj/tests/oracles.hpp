#pragma once

// Test-only brute-force references. Nothing here calls the library's
// solvers or constraint filters.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cliquepart/core.hpp"
#include "cliquepart/formulations.hpp"
#include "cliquepart/instances.hpp"

namespace oracle {

using cliquepart::EdgeVector;
using cliquepart::FormulationKind;
using cliquepart::TransitivityConstraint;
using cliquepart::Weight;
using cliquepart::WeightedInstance;

inline int pairs(int n) { return n * (n - 1) / 2; }

inline int idx(int n, int a, int b) {
  if (a > b) std::swap(a, b);
  int t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++t)
      if (i == a && j == b) return t;
  return -1;
}

// Weight lookup that walks the pair list instead of using edge_index.
inline Weight w(const WeightedInstance& inst, int a, int b) {
  return inst.weights()[static_cast<std::size_t>(idx(inst.n(), a, b))];
}

inline std::vector<TransitivityConstraint> triples(int n) {
  std::vector<TransitivityConstraint> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = i + 1; k < n; ++k)
        if (j != i && j != k) out.push_back({i, j, k});
  std::sort(out.begin(), out.end());
  return out;
}

// Condition edge for CP/PCP, written as a table over the sorted triangle.
inline std::pair<int, int> cp_edge(const TransitivityConstraint& c) {
  int v[3] = {c.i, c.j, c.k};
  std::sort(v, v + 3);
  const int a = v[0], b = v[1], cc = v[2];
  if (c.i == a && c.k == cc) return {b, cc};  // rhs (a,c)
  if (c.i == b && c.k == cc) return {a, cc};  // rhs (b,c)
  return {b, cc};                             // rhs (a,b)
}

inline bool rule(FormulationKind kind, const WeightedInstance& inst, const TransitivityConstraint& c) {
  const Weight a = w(inst, c.i, c.j), b = w(inst, c.j, c.k), o = w(inst, c.i, c.k);
  const auto [p, q] = cp_edge(c);
  const Weight e = w(inst, p, q);
  switch (kind) {
    case FormulationKind::P: return true;
    case FormulationKind::RP: return a >= 0 || b >= 0;
    case FormulationKind::MRP: return a >= 1 || b >= 1;
    case FormulationKind::FRP: return a + b >= 0;
    case FormulationKind::PFRP: return a + b >= 1;
    case FormulationKind::CP: return e >= 0;
    case FormulationKind::PCP: return e >= 1;
    case FormulationKind::XFRP: return a + b - o >= 0;
  }
  return true;
}

inline std::vector<TransitivityConstraint> kept(FormulationKind kind, const WeightedInstance& inst) {
  std::vector<TransitivityConstraint> out;
  for (const auto& c : triples(inst.n()))
    if (rule(kind, inst, c)) out.push_back(c);
  return out;
}

inline bool scaled(FormulationKind kind) {
  return kind == FormulationKind::MRP || kind == FormulationKind::PCP ||
         kind == FormulationKind::PFRP;
}

inline std::vector<Weight> objective(FormulationKind kind, const WeightedInstance& inst) {
  std::vector<Weight> out(inst.weights().begin(), inst.weights().end());
  if (scaled(kind)) {
    const Weight s = 2 * pairs(inst.n()) + 1;
    for (auto& v : out) v = s * v - 1;
  }
  return out;
}

inline bool bit(std::uint64_t mask, int n, int a, int b) { return (mask >> idx(n, a, b)) & 1u; }

inline bool satisfies(std::uint64_t mask, int n, const std::vector<TransitivityConstraint>& cs) {
  for (const auto& c : cs)
    if (bit(mask, n, c.i, c.j) + bit(mask, n, c.j, c.k) > 1 + bit(mask, n, c.i, c.k)) return false;
  return true;
}

inline Weight value(std::uint64_t mask, const std::vector<Weight>& weights) {
  Weight s = 0;
  for (std::size_t t = 0; t < weights.size(); ++t)
    if ((mask >> t) & 1u) s += weights[t];
  return s;
}

struct Optima {
  Weight best = 0;
  std::set<std::uint64_t> masks;
};

// Full 2^m scan.
inline Optima optimal_vectors(int n, const std::vector<TransitivityConstraint>& cs,
                              const std::vector<Weight>& weights) {
  Optima out;
  bool any = false;
  const std::uint64_t total = std::uint64_t{1} << pairs(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!satisfies(mask, n, cs)) continue;
    const Weight v = value(mask, weights);
    if (!any || v > out.best) {
      out.best = v;
      out.masks.clear();
      any = true;
    }
    if (v == out.best) out.masks.insert(mask);
  }
  return out;
}

inline std::uint64_t to_mask(const EdgeVector& x) {
  std::uint64_t m = 0;
  for (std::size_t t = 0; t < x.pairs(); ++t)
    if (x.bit(t)) m |= std::uint64_t{1} << t;
  return m;
}

inline std::set<std::uint64_t> masks_of(const std::vector<EdgeVector>& xs) {
  std::set<std::uint64_t> out;
  for (const auto& x : xs) out.insert(to_mask(x));
  return out;
}

// Every labeling in [0,n)^n; value over same-label pairs.
inline Weight best_partition_value(const WeightedInstance& inst) {
  const int n = inst.n();
  std::vector<int> lab(static_cast<std::size_t>(n), 0);
  Weight best = 0;
  while (true) {
    Weight v = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (lab[i] == lab[j]) v += w(inst, i, j);
    best = std::max(best, v);
    int p = 0;
    while (p < n && ++lab[p] == n) lab[p++] = 0;
    if (p == n) break;
  }
  return best;
}

// Transitive closure by repeated squaring on a dense matrix.
inline std::uint64_t closure(std::uint64_t mask, int n) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (bit(mask, n, i, j)) r[i][j] = r[j][i] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && r[i][k] && r[k][j]) r[i][j] = true;
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (r[i][j]) out |= std::uint64_t{1} << idx(n, i, j);
  return out;
}

// Hand-rolled weight generator for property tests (independent of SplitMix64).
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  WeightedInstance instance(int n, int lo, int hi) {
    std::vector<Weight> ws(static_cast<std::size_t>(pairs(n)));
    for (auto& v : ws) v = between(lo, hi);
    return WeightedInstance(n, ws);
  }
};

}  // namespace oracle
