#include "cliquepart/instances.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cliquepart {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw Error("below(0) is undefined");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

bool SplitMix64::bernoulli(const Rational& p) {
  if (p < 0 || p > 1) throw Error("probability outside [0, 1]");
  return static_cast<std::int64_t>(below(static_cast<std::uint64_t>(p.denominator()))) <
         p.numerator();
}

void GeneratorConfig::validate() const {
  if (n < 3 || n > kMaxVertices)
    throw Error("n = " + std::to_string(n) + " outside [3, " + std::to_string(kMaxVertices) +
                "]");
  switch (family) {
    case Family::Structured:
      if (k_clusters < 1 || n % k_clusters != 0)
        throw Error("structured instances need k_clusters dividing n (n = " +
                    std::to_string(n) + ", k = " + std::to_string(k_clusters) + ")");
      if (p_in < 0 || p_in > 1 || p_in.denominator() > 100)
        throw Error("p_in must be a rational in [0, 1] with denominator <= 100");
      break;
    case Family::Modularity:
      if (ba_attach < 1 || ba_attach >= n)
        throw Error("Barabasi-Albert attachment must satisfy 1 <= attach < n");
      break;
    case Family::Custom:
      throw Error("the custom family has no generator");
    default:
      break;
  }
}

WeightedInstance generate(const GeneratorConfig& config) {
  config.validate();
  switch (config.family) {
    case Family::Random: return gen_random(config.n, config.seed);
    case Family::Sparse: return gen_sparse(config.n, config.seed);
    case Family::Structured:
      return gen_structured(config.n, config.k_clusters, config.p_in, config.seed);
    case Family::Modularity: return gen_modularity(config.n, config.ba_attach, config.seed);
    case Family::Custom: break;
  }
  throw Error("the custom family has no generator");
}

WeightedInstance gen_random(int n, std::uint64_t seed) {
  GeneratorConfig{Family::Random, n, seed}.validate();
  SplitMix64 rng(seed);
  std::vector<Weight> w(pair_count(n));
  for (auto& v : w) v = (rng.next() >> 63) ? 1 : -1;
  return WeightedInstance(n, std::move(w), Family::Random, seed);
}

WeightedInstance gen_sparse(int n, std::uint64_t seed) {
  GeneratorConfig{Family::Sparse, n, seed}.validate();
  SplitMix64 rng(seed);
  std::vector<Weight> w(pair_count(n));
  for (auto& v : w) v = static_cast<Weight>(rng.below(3)) - 1;
  return WeightedInstance(n, std::move(w), Family::Sparse, seed);
}

WeightedInstance gen_structured(int n, int k_clusters, const Rational& p_in, std::uint64_t seed) {
  GeneratorConfig config{Family::Structured, n, seed, k_clusters, p_in};
  config.validate();
  const int cluster_size = n / k_clusters;
  const Rational p_out = Rational(1) - p_in;
  SplitMix64 rng(seed);
  std::vector<Weight> w;
  w.reserve(pair_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool within = i / cluster_size == j / cluster_size;
      w.push_back(rng.bernoulli(within ? p_in : p_out) ? 1 : -1);
    }
  WeightedInstance inst(n, std::move(w), Family::Structured, seed);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) labels[v] = v / cluster_size;
  inst.set_ground_truth(Partition::from_labels(labels));
  return inst;
}

SimpleGraph barabasi_albert_graph(int n, int attach, std::uint64_t seed) {
  if (attach < 1 || attach >= n) throw Error("Barabasi-Albert attachment must satisfy 1 <= attach < n");
  SimpleGraph g{n, EdgeVector(n), std::vector<int>(static_cast<std::size_t>(n), 0), 0};
  std::vector<int> endpoints;  // vertex v appears degree(v) times
  auto add_edge = [&](int a, int b) {
    g.adjacency.set(a, b);
    ++g.degree[a];
    ++g.degree[b];
    ++g.edge_count;
    endpoints.push_back(a);
    endpoints.push_back(b);
  };
  for (int i = 0; i <= attach; ++i)
    for (int j = i + 1; j <= attach; ++j) add_edge(i, j);

  SplitMix64 rng(seed);
  std::vector<int> targets;
  for (int v = attach + 1; v < n; ++v) {
    targets.clear();
    while (static_cast<int>(targets.size()) < attach) {
      const int t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (int t : targets) add_edge(t, v);
  }
  return g;
}

WeightedInstance gen_modularity(int n, int ba_attach, std::uint64_t seed) {
  GeneratorConfig{Family::Modularity, n, seed, 5, Rational(3, 4), ba_attach}.validate();
  const SimpleGraph g = barabasi_albert_graph(n, ba_attach, seed);
  const Weight two_m = 2 * static_cast<Weight>(g.edge_count);
  std::vector<Weight> w;
  w.reserve(pair_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      w.push_back(two_m * (g.adjacency.get(i, j) ? 1 : 0) -
                  static_cast<Weight>(g.degree[i]) * g.degree[j]);
  return WeightedInstance(n, std::move(w), Family::Modularity, seed);
}

int default_cluster_count(int n) {
  for (int k = 5; k >= 2; --k)
    if (k < n && n % k == 0) return k;
  return 1;
}

// ---------------------------------------------------------------------------
// File format

ParseError::ParseError(int line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line), message_(message) {}

void write_instance(const WeightedInstance& inst, std::ostream& out) {
  out << "cpp 1 " << inst.n() << ' ' << to_string(inst.family()) << ' ';
  if (inst.seed())
    out << *inst.seed();
  else
    out << '-';
  out << '\n';
  std::size_t idx = 0;
  for (int i = 0; i < inst.n(); ++i)
    for (int j = i + 1; j < inst.n(); ++j, ++idx)
      out << i << ' ' << j << ' ' << inst.weights()[idx] << '\n';
}

std::string format_instance(const WeightedInstance& inst) {
  std::ostringstream os;
  write_instance(inst, os);
  return os.str();
}

namespace {

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(' ', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view token, int line, const char* what) {
  Int value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end)
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
  return value;
}

}  // namespace

WeightedInstance read_instance(std::istream& in) {
  std::string line;
  int line_no = 1;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  const auto header = split_spaces(line);
  if (header.size() != 5 || header[0] != "cpp")
    throw ParseError(1, "expected header 'cpp 1 <n> <family> <seed>'");
  if (header[1] != "1") throw ParseError(1, "unsupported format version '" + std::string(header[1]) + "'");
  const int n = parse_int<int>(header[2], 1, "vertex count");
  if (n < 1 || n > kMaxVertices) throw ParseError(1, "vertex count out of range");
  Family family;
  try {
    family = parse_family(header[3]);
  } catch (const Error& e) {
    throw ParseError(1, e.what());
  }
  std::optional<std::uint64_t> seed;
  if (header[4] != "-") seed = parse_int<std::uint64_t>(header[4], 1, "seed");

  std::vector<Weight> weights;
  weights.reserve(pair_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ++line_no;
      if (!std::getline(in, line)) throw ParseError(line_no, "unexpected end of file");
      const auto tok = split_spaces(line);
      if (tok.size() != 3) throw ParseError(line_no, "expected '<i> <j> <w>'");
      if (parse_int<int>(tok[0], line_no, "vertex") != i ||
          parse_int<int>(tok[1], line_no, "vertex") != j)
        throw ParseError(line_no, "expected pair " + std::to_string(i) + " " + std::to_string(j));
      const Weight w = parse_int<Weight>(tok[2], line_no, "weight");
      if (w > kMaxAbsWeight || w < -kMaxAbsWeight)
        throw ParseError(line_no, "weight magnitude exceeds 2^20");
      weights.push_back(w);
    }
  if (std::getline(in, line)) throw ParseError(line_no + 1, "unexpected trailing content");
  return WeightedInstance(n, std::move(weights), family, seed);
}

WeightedInstance parse_instance(const std::string& text) {
  std::istringstream is(text);
  return read_instance(is);
}

void save_instance(const WeightedInstance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_instance(inst, out);
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

WeightedInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  try {
    return read_instance(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.message());
  }
}

}  // namespace cliquepart
