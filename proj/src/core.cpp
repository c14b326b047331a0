#include "cliquepart/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cliquepart {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

std::vector<int> component_labels(const EdgeVector& x) {
  const int n = x.n();
  UnionFind uf(n);
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx)
      if (x.bit(idx)) uf.merge(i, j);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) labels[v] = uf.find(v);
  return labels;
}

}  // namespace

std::pair<int, int> edge_endpoints(int n, std::size_t index) {
  if (index >= pair_count(n)) throw Error("edge index out of range");
  int i = 0;
  std::size_t row = static_cast<std::size_t>(n - 1);
  while (index >= row) {
    index -= row;
    ++i;
    --row;
  }
  return {i, i + 1 + static_cast<int>(index)};
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Random: return "random";
    case Family::Sparse: return "sparse";
    case Family::Structured: return "structured";
    case Family::Modularity: return "modularity";
    case Family::Custom: return "custom";
  }
  return "custom";
}

Family parse_family(std::string_view text) {
  for (Family f : {Family::Random, Family::Sparse, Family::Structured, Family::Modularity,
                   Family::Custom})
    if (to_string(f) == text) return f;
  throw Error("unknown instance family '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Partition

Partition Partition::from_labels(std::span<const int> labels) {
  Partition p;
  p.block_of_.reserve(labels.size());
  std::vector<std::pair<int, int>> seen;  // (raw label, canonical id)
  for (int raw : labels) {
    auto it = std::find_if(seen.begin(), seen.end(), [raw](auto& s) { return s.first == raw; });
    if (it == seen.end()) {
      seen.emplace_back(raw, static_cast<int>(seen.size()));
      p.block_of_.push_back(seen.back().second);
    } else {
      p.block_of_.push_back(it->second);
    }
  }
  return p;
}

Partition Partition::singletons(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

Partition Partition::one_block(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  return from_labels(labels);
}

int Partition::block_count() const {
  return block_of_.empty() ? 0 : *std::max_element(block_of_.begin(), block_of_.end()) + 1;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count()));
  for (int v = 0; v < size(); ++v) out[block_of_[v]].push_back(v);
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (const auto& block : blocks()) {
    os << '{';
    for (std::size_t t = 0; t < block.size(); ++t) os << (t ? "," : "") << block[t];
    os << '}';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// WeightedInstance

WeightedInstance::WeightedInstance(int n, std::vector<Weight> weights, Family family,
                                   std::optional<std::uint64_t> seed)
    : n_(n), weights_(std::move(weights)), family_(family), seed_(seed) {
  if (n < 1 || n > kMaxVertices)
    throw Error("vertex count " + std::to_string(n) + " outside [1, " +
                std::to_string(kMaxVertices) + "]");
  if (weights_.size() != pair_count(n))
    throw Error("expected " + std::to_string(pair_count(n)) + " weights, got " +
                std::to_string(weights_.size()));
  for (Weight w : weights_)
    if (w > kMaxAbsWeight || w < -kMaxAbsWeight)
      throw Error("weight " + std::to_string(w) + " exceeds the supported magnitude 2^20");
}

void WeightedInstance::set_ground_truth(Partition p) {
  if (p.size() != n_) throw Error("ground truth size does not match instance");
  ground_truth_ = std::move(p);
}

bool WeightedInstance::same_data(const WeightedInstance& other) const {
  return n_ == other.n_ && weights_ == other.weights_ && family_ == other.family_ &&
         seed_ == other.seed_;
}

// ---------------------------------------------------------------------------
// EdgeVector

EdgeVector EdgeVector::from_mask(int n, std::uint64_t mask) {
  EdgeVector x(n);
  if (x.pairs() > 64) throw Error("edge mask supports at most 64 pairs");
  for (std::size_t t = 0; t < x.pairs(); ++t) x.bits_[t] = (mask >> t) & 1U;
  return x;
}

EdgeVector EdgeVector::from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
  EdgeVector x(n);
  for (auto [a, b] : pairs) {
    if (a == b || a < 0 || b < 0 || a >= n || b >= n) throw Error("invalid pair");
    x.set(a, b);
  }
  return x;
}

std::size_t EdgeVector::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<std::pair<int, int>> EdgeVector::selected_pairs() const {
  std::vector<std::pair<int, int>> out;
  std::size_t idx = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j, ++idx)
      if (bits_[idx]) out.emplace_back(i, j);
  return out;
}

std::string EdgeVector::to_string() const {
  std::ostringstream os;
  for (auto [a, b] : selected_pairs()) os << '{' << a << ',' << b << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Operations

Weight objective_value(std::span<const Weight> weights, const EdgeVector& x) {
  if (weights.size() != x.pairs()) throw Error("edge vector dimension mismatch");
  Weight total = 0;
  for (std::size_t t = 0; t < weights.size(); ++t)
    if (x.bit(t)) total += weights[t];
  return total;
}

Weight objective_value(const WeightedInstance& inst, const EdgeVector& x) {
  if (inst.n() != x.n()) throw Error("edge vector dimension mismatch");
  return objective_value(inst.weights(), x);
}

EdgeVector partition_to_edges(const Partition& p) {
  const int n = p.size();
  EdgeVector x(n);
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx) x.set_bit(idx, p.block_of(i) == p.block_of(j));
  return x;
}

std::vector<Component> edges_to_components(const EdgeVector& x) {
  const auto labels = component_labels(x);
  std::vector<Component> comps;
  std::vector<int> comp_of_root(labels.size(), -1);
  for (int v = 0; v < x.n(); ++v) {
    int& c = comp_of_root[labels[v]];
    if (c < 0) {
      c = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[c].vertices.push_back(v);
  }
  for (auto [a, b] : x.selected_pairs()) comps[comp_of_root[labels[a]]].edges.emplace_back(a, b);
  return comps;
}

Partition edges_to_partition(const EdgeVector& x) {
  return Partition::from_labels(component_labels(x));
}

bool is_clique_partitioning(const EdgeVector& x) {
  for (const auto& c : edges_to_components(x))
    if (c.edges.size() != pair_count(static_cast<int>(c.vertices.size()))) return false;
  return true;
}

EdgeVector repair_to_clique_partitioning(const EdgeVector& x) {
  return partition_to_edges(edges_to_partition(x));
}

Weight cut_weight(const WeightedInstance& inst, const Component& comp,
                  std::span<const int> s_side) {
  if (s_side.empty() || s_side.size() >= comp.vertices.size())
    throw Error("cut side must be a nonempty proper subset of the component");
  std::set<int> side(s_side.begin(), s_side.end());
  if (side.size() != s_side.size()) throw Error("cut side contains duplicates");
  for (int v : side)
    if (!std::binary_search(comp.vertices.begin(), comp.vertices.end(), v))
      throw Error("cut side vertex " + std::to_string(v) + " is not in the component");
  Weight total = 0;
  for (auto [a, b] : comp.edges)
    if (side.contains(a) != side.contains(b)) total += inst.weight(a, b);
  return total;
}

}  // namespace cliquepart
