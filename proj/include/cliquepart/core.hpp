#pragma once

// Graph, partition, and edge-vector primitives for the clique partitioning
// problem on a complete graph with integer edge weights.
//
// Every module addresses the unordered pair {i, j}, i < j, through the same
// linear index i*n - i*(i+1)/2 + (j-i-1), so a weight vector, an edge vector
// and an LP variable list all line up position by position.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace cliquepart {

using Weight = std::int64_t;
using Rational = boost::rational<std::int64_t>;

inline constexpr int kMaxVertices = 64;
inline constexpr Weight kMaxAbsWeight = Weight{1} << 20;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t pair_count(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
}

// Requires 0 <= i < j < n.
constexpr std::size_t edge_index(int n, int i, int j) {
  return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i + 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

constexpr std::size_t edge_index_unordered(int n, int a, int b) {
  return a < b ? edge_index(n, a, b) : edge_index(n, b, a);
}

// Inverse of edge_index; linear in n.
std::pair<int, int> edge_endpoints(int n, std::size_t index);

enum class Family { Random, Sparse, Structured, Modularity, Custom };

std::string_view to_string(Family family);
Family parse_family(std::string_view text);

// A set partition of {0..n-1} stored as a restricted-growth labeling, so two
// partitions are equal exactly when their label vectors are.
class Partition {
 public:
  Partition() = default;

  static Partition from_labels(std::span<const int> labels);
  static Partition singletons(int n);
  static Partition one_block(int n);

  int size() const { return static_cast<int>(block_of_.size()); }
  int block_count() const;
  int block_of(int v) const { return block_of_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& labels() const { return block_of_; }
  std::vector<std::vector<int>> blocks() const;

  std::string to_string() const;  // e.g. "{0,1}{2}"

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> block_of_;
};

class WeightedInstance {
 public:
  WeightedInstance() = default;
  // Throws Error unless weights.size() == n(n-1)/2, 1 <= n <= 64 and every
  // |weight| <= 2^20.
  WeightedInstance(int n, std::vector<Weight> weights, Family family = Family::Custom,
                   std::optional<std::uint64_t> seed = std::nullopt);

  int n() const { return n_; }
  std::size_t pairs() const { return weights_.size(); }
  Weight weight(int i, int j) const { return weights_[edge_index_unordered(n_, i, j)]; }
  std::span<const Weight> weights() const { return weights_; }
  Family family() const { return family_; }
  std::optional<std::uint64_t> seed() const { return seed_; }

  // Planted partition of a structured instance; not part of the file format.
  const std::optional<Partition>& ground_truth() const { return ground_truth_; }
  void set_ground_truth(Partition p);

  // Compares n, weights, family and seed.
  bool same_data(const WeightedInstance& other) const;

 private:
  int n_ = 0;
  std::vector<Weight> weights_;
  Family family_ = Family::Custom;
  std::optional<std::uint64_t> seed_;
  std::optional<Partition> ground_truth_;
};

class EdgeVector {
 public:
  EdgeVector() = default;
  explicit EdgeVector(int n) : n_(n), bits_(pair_count(n), false) {}

  // Bit t of mask is the pair with linear index t. Requires n(n-1)/2 <= 64.
  static EdgeVector from_mask(int n, std::uint64_t mask);
  static EdgeVector from_pairs(int n, std::span<const std::pair<int, int>> pairs);

  int n() const { return n_; }
  std::size_t pairs() const { return bits_.size(); }
  bool get(int i, int j) const { return bits_[edge_index_unordered(n_, i, j)]; }
  void set(int i, int j, bool value = true) { bits_[edge_index_unordered(n_, i, j)] = value; }
  bool bit(std::size_t index) const { return bits_[index]; }
  void set_bit(std::size_t index, bool value) { bits_[index] = value; }
  std::size_t count() const;
  std::vector<std::pair<int, int>> selected_pairs() const;

  std::string to_string() const;  // e.g. "{0,1}{1,2}"

  auto operator<=>(const EdgeVector&) const = default;

 private:
  int n_ = 0;
  std::vector<bool> bits_;
};

struct Component {
  std::vector<int> vertices;               // ascending
  std::vector<std::pair<int, int>> edges;  // (a, b), a < b, lex order
};

Weight objective_value(const WeightedInstance& inst, const EdgeVector& x);
Weight objective_value(std::span<const Weight> weights, const EdgeVector& x);

EdgeVector partition_to_edges(const Partition& p);

// Connected components of (V, X), singletons included, ordered by smallest
// vertex.
std::vector<Component> edges_to_components(const EdgeVector& x);

// Block structure of the components of x. Only a faithful encoding of x when
// x is already a clique partitioning.
Partition edges_to_partition(const EdgeVector& x);

bool is_clique_partitioning(const EdgeVector& x);

// Transitive closure: every component is completed into a clique.
EdgeVector repair_to_clique_partitioning(const EdgeVector& x);

// Weight of the component edges with exactly one endpoint in s_side.
Weight cut_weight(const WeightedInstance& inst, const Component& comp,
                  std::span<const int> s_side);

}  // namespace cliquepart
