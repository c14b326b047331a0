#pragma once

// Seeded instance generators and the plain-text instance file format.
//
// All randomness comes from SplitMix64 (Steele, Lea and Flood), seeded with the
// user seed:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// Weights are drawn pair by pair in (i, j) lexicographic order.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cliquepart/core.hpp"

namespace cliquepart {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform in [0, bound) by rejection of the low 2^64 mod bound outputs.
  std::uint64_t below(std::uint64_t bound);
  // True with probability p; p must lie in [0, 1].
  bool bernoulli(const Rational& p);

 private:
  std::uint64_t state_;
};

struct GeneratorConfig {
  Family family = Family::Random;
  int n = 30;
  std::uint64_t seed = 0;
  int k_clusters = 5;
  Rational p_in{3, 4};
  int ba_attach = 2;

  // Throws Error on a violated parameter constraint.
  void validate() const;
};

WeightedInstance generate(const GeneratorConfig& config);

// Weights in {-1, +1}: the top bit of one draw, set -> +1.
WeightedInstance gen_random(int n, std::uint64_t seed);
// Weights in {-1, 0, +1}: below(3) - 1.
WeightedInstance gen_sparse(int n, std::uint64_t seed);
// Contiguous equal clusters; +1 with probability p_in inside a cluster and
// 1 - p_in across clusters, -1 otherwise. Records the planted partition.
WeightedInstance gen_structured(int n, int k_clusters, const Rational& p_in, std::uint64_t seed);
// Modularity coefficients 2M*A_ij - d_i*d_j of a Barabasi-Albert graph.
WeightedInstance gen_modularity(int n, int ba_attach, std::uint64_t seed);

struct SimpleGraph {
  int n = 0;
  EdgeVector adjacency;
  std::vector<int> degree;
  int edge_count = 0;
};

// Starts from a clique on attach+1 vertices; every later vertex picks attach
// distinct targets with probability proportional to their current degree
// (uniform draws from the endpoint multiset, duplicates redrawn).
SimpleGraph barabasi_albert_graph(int n, int attach, std::uint64_t seed);

// Largest divisor of n in [2, 5] below n, else 1; used when a structured
// instance is requested without an explicit cluster count that divides n.
int default_cluster_count(int n);

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  std::string message_;
};

// Format: header `cpp 1 <n> <family> <seed|->`, then `<i> <j> <w>` per pair in
// (i, j) lexicographic order, LF terminated.
void write_instance(const WeightedInstance& inst, std::ostream& out);
std::string format_instance(const WeightedInstance& inst);
WeightedInstance read_instance(std::istream& in);
WeightedInstance parse_instance(const std::string& text);

void save_instance(const WeightedInstance& inst, const std::filesystem::path& path);
WeightedInstance load_instance(const std::filesystem::path& path);

}  // namespace cliquepart
