#pragma once

// Simple connected undirected graphs with a canonical arc indexing.
//
// Edge i = {u, v} with u < v owns arcs 2i (u -> v) and 2i + 1 (v -> u), so the
// inverse of arc e is e ^ 1. Edges are kept sorted lexicographically, which
// fixes every downstream matrix layout.

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gzeta/error.hpp"

namespace gzeta {

using Edge = std::pair<int, int>;

struct Arc {
  int origin;
  int terminus;
};

class Graph {
 public:
  /// Validates and canonicalizes an edge list. Each pair may be given in
  /// either orientation; loops, duplicates, out-of-range endpoints and
  /// disconnected inputs are rejected.
  static Graph from_edges(int n, std::vector<Edge> edges, bool vertex_transitive = false,
                          std::string name = {}) {
    if (n < 2) throw Error(ErrorCode::invalid_parameter, "graph needs at least two vertices");
    for (auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error(ErrorCode::invalid_parameter, "edge endpoint out of range");
      if (u == v) throw Error(ErrorCode::invalid_parameter, "loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw Error(ErrorCode::invalid_parameter, "duplicate edge");
    Graph g(n, std::move(edges), vertex_transitive, std::move(name));
    if (!g.connected()) throw Error(ErrorCode::invalid_parameter, "graph is disconnected");
    return g;
  }

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  int num_arcs() const noexcept { return 2 * num_edges(); }
  int betti() const noexcept { return num_edges() - n_ + 1; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& arc(int e) const { return arcs_[static_cast<std::size_t>(e)]; }
  int origin(int e) const { return arc(e).origin; }
  int terminus(int e) const { return arc(e).terminus; }
  static constexpr int inverse(int e) noexcept { return e ^ 1; }

  int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }

  /// Arcs e with o(e) = v, in increasing arc order.
  std::span<const int> out_arcs(int v) const {
    const auto begin = static_cast<std::size_t>(out_offset_[static_cast<std::size_t>(v)]);
    const auto end = static_cast<std::size_t>(out_offset_[static_cast<std::size_t>(v) + 1]);
    return std::span<const int>(out_arcs_).subspan(begin, end - begin);
  }

  int min_degree() const { return *std::min_element(degrees_.begin(), degrees_.end()); }
  int max_degree() const { return *std::max_element(degrees_.begin(), degrees_.end()); }
  bool is_regular() const { return min_degree() == max_degree(); }

  /// Degree q + 1 when the graph is regular.
  std::optional<int> regular_degree() const {
    if (!is_regular()) return std::nullopt;
    return degrees_.front();
  }

  /// Set by the deterministic family builders, which are vertex-transitive by
  /// construction. Graphs read from files or sampled at random are untagged.
  bool vertex_transitive() const noexcept { return vertex_transitive_; }
  const std::string& name() const noexcept { return name_; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  Graph(int n, std::vector<Edge> edges, bool vertex_transitive, std::string name)
      : n_(n),
        edges_(std::move(edges)),
        degrees_(static_cast<std::size_t>(n), 0),
        vertex_transitive_(vertex_transitive),
        name_(std::move(name)) {
    arcs_.reserve(2 * edges_.size());
    for (const auto& [u, v] : edges_) {
      arcs_.push_back({u, v});
      arcs_.push_back({v, u});
      ++degrees_[static_cast<std::size_t>(u)];
      ++degrees_[static_cast<std::size_t>(v)];
    }
    out_offset_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& a : arcs_) ++out_offset_[static_cast<std::size_t>(a.origin) + 1];
    std::partial_sum(out_offset_.begin(), out_offset_.end(), out_offset_.begin());
    out_arcs_.resize(arcs_.size());
    std::vector<int> cursor(out_offset_.begin(), out_offset_.end() - 1);
    for (int e = 0; e < num_arcs(); ++e)
      out_arcs_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(origin(e))]++)] = e;
  }

  bool connected() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int e : out_arcs(v)) {
        const int w = terminus(e);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++reached;
          frontier.push(w);
        }
      }
    }
    return reached == n_;
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
  std::vector<int> degrees_;
  std::vector<int> out_offset_;
  std::vector<int> out_arcs_;
  bool vertex_transitive_;
  std::string name_;
};

// ---------------------------------------------------------------------------
// Deterministic families

inline Graph build_cycle(int N) {
  if (N < 3) throw Error(ErrorCode::invalid_parameter, "cycle needs N >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < N; ++i) edges.emplace_back(i, (i + 1) % N);
  return Graph::from_edges(N, std::move(edges), true, "C" + std::to_string(N));
}

/// Vertex (k_1, ..., k_d) of the torus has index sum_j k_j N^(j-1).
inline Graph build_torus(int d, int N) {
  if (d < 1) throw Error(ErrorCode::invalid_parameter, "torus needs d >= 1");
  if (N < 3) throw Error(ErrorCode::invalid_parameter, "torus needs N >= 3");
  long long n = 1;
  for (int j = 0; j < d; ++j) {
    n *= N;
    if (n > (1LL << 24)) throw Error(ErrorCode::invalid_parameter, "torus too large");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
  for (long long v = 0; v < n; ++v) {
    long long stride = 1;
    for (int j = 0; j < d; ++j) {
      const long long coord = (v / stride) % N;
      const long long next = v + (((coord + 1) % N) - coord) * stride;
      edges.emplace_back(static_cast<int>(v), static_cast<int>(next));
      stride *= N;
    }
  }
  return Graph::from_edges(static_cast<int>(n), std::move(edges), true,
                           "T" + std::to_string(d) + "_" + std::to_string(N));
}

inline Graph build_circulant(int N, std::vector<int> offsets) {
  if (N < 3) throw Error(ErrorCode::invalid_parameter, "circulant needs N >= 3");
  if (offsets.empty()) throw Error(ErrorCode::invalid_parameter, "circulant needs offsets");
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  int g = N;
  for (int s : offsets) {
    if (s < 1 || s > N / 2)
      throw Error(ErrorCode::invalid_parameter, "circulant offset outside 1..N/2");
    g = std::gcd(g, s);
  }
  if (g != 1) throw Error(ErrorCode::invalid_parameter, "circulant offsets give a disconnected graph");
  std::set<Edge> unique;
  for (int i = 0; i < N; ++i)
    for (int s : offsets) {
      const int j = (i + s) % N;
      unique.insert({std::min(i, j), std::max(i, j)});
    }
  std::string name = "Circ" + std::to_string(N) + "[";
  for (std::size_t k = 0; k < offsets.size(); ++k)
    name += (k ? "," : "") + std::to_string(offsets[k]);
  name += "]";
  return Graph::from_edges(N, {unique.begin(), unique.end()}, true, std::move(name));
}

inline Graph build_complete(int n) {
  if (n < 3) throw Error(ErrorCode::invalid_parameter, "complete graph needs n >= 3");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges), true, "K" + std::to_string(n));
}

inline Graph build_petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, std::move(edges), true, "Petersen");
}

/// Accepts "petersen", "complete(n)", "complete:n" or "K<n>".
inline Graph build_named(const std::string& name) {
  if (name == "petersen" || name == "Petersen") return build_petersen();
  auto parse_size = [&](std::string_view digits) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw Error(ErrorCode::invalid_parameter, "unknown graph name '" + name + "'");
    return std::stoi(std::string(digits));
  };
  std::string_view s(name);
  if (s.starts_with("complete(") && s.ends_with(")"))
    return build_complete(parse_size(s.substr(9, s.size() - 10)));
  if (s.starts_with("complete:")) return build_complete(parse_size(s.substr(9)));
  if (s.starts_with("K")) return build_complete(parse_size(s.substr(1)));
  throw Error(ErrorCode::invalid_parameter, "unknown graph name '" + name + "'");
}

// ---------------------------------------------------------------------------
// Seeded random graphs
//
// All sampling draws from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Bounded integers and shuffles are implemented here rather
// than through <random> distributions, which are implementation-defined.

namespace detail {

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle(std::vector<T>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i)
    std::swap(values[i - 1], values[uniform_below(rng, i)]);
}

inline bool connected_edges(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int components = n;
  for (const auto& [u, v] : edges) {
    const int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[static_cast<std::size_t>(ru)] = rv;
      --components;
    }
  }
  return components == 1;
}

inline constexpr int max_rejections = 1'000'000;

}  // namespace detail

/// Pairing (configuration) model, rejecting loops, multi-edges and
/// disconnected outcomes.
inline Graph build_random_regular(int n, int k, std::uint64_t seed) {
  if (k < 2 || n <= k || (static_cast<long long>(n) * k) % 2 != 0)
    throw Error(ErrorCode::generation_failure,
                "infeasible regular parameters n=" + std::to_string(n) + " k=" + std::to_string(k));
  std::mt19937_64 rng(seed);
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
  for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(k), v);
  std::vector<Edge> edges;
  for (int attempt = 0; attempt < detail::max_rejections; ++attempt) {
    detail::shuffle(stubs, rng);
    edges.clear();
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      const int u = std::min(stubs[i], stubs[i + 1]);
      const int v = std::max(stubs[i], stubs[i + 1]);
      simple = u != v;
      edges.emplace_back(u, v);
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    if (!detail::connected_edges(n, edges)) continue;
    return Graph::from_edges(n, std::move(edges), false,
                             "RR" + std::to_string(n) + "_" + std::to_string(k) + "_s" +
                                 std::to_string(seed));
  }
  throw Error(ErrorCode::generation_failure, "too many rejections in the pairing model");
}

/// Erdos-Renyi G(n, p) conditioned on connectivity and a minimum degree.
inline Graph build_random_connected(int n, double edge_probability, std::uint64_t seed,
                                    int min_degree = 1) {
  if (n < 2 || !(edge_probability > 0.0) || edge_probability > 1.0 || min_degree < 1 ||
      min_degree >= n)
    throw Error(ErrorCode::generation_failure, "infeasible random graph parameters");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < detail::max_rejections; ++attempt) {
    edges.clear();
    std::fill(degree.begin(), degree.end(), 0);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (detail::uniform_unit(rng) < edge_probability) {
          edges.emplace_back(u, v);
          ++degree[static_cast<std::size_t>(u)];
          ++degree[static_cast<std::size_t>(v)];
        }
    if (*std::min_element(degree.begin(), degree.end()) < min_degree) continue;
    if (!detail::connected_edges(n, edges)) continue;
    return Graph::from_edges(n, std::move(edges), false,
                             "G" + std::to_string(n) + "_s" + std::to_string(seed));
  }
  throw Error(ErrorCode::generation_failure, "too many rejections for a connected sample");
}

// ---------------------------------------------------------------------------
// Vertex matrices

struct GraphMatrices {
  Eigen::MatrixXd adjacency;
  Eigen::MatrixXd degree;
  Eigen::MatrixXd transition;
  Eigen::MatrixXd laplacian;
  int betti = 0;
};

inline GraphMatrices matrices(const Graph& g) {
  const int n = g.num_vertices();
  GraphMatrices out;
  out.adjacency = Eigen::MatrixXd::Zero(n, n);
  out.degree = Eigen::MatrixXd::Zero(n, n);
  out.transition = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    out.adjacency(u, v) = out.adjacency(v, u) = 1.0;
    out.transition(u, v) = 1.0 / g.degree(u);
    out.transition(v, u) = 1.0 / g.degree(v);
  }
  for (int v = 0; v < n; ++v) out.degree(v, v) = g.degree(v);
  out.laplacian = out.degree - out.adjacency;
  out.betti = g.betti();
  return out;
}

/// Eigenvalues of the symmetric transition matrix of a regular graph,
/// ascending.
inline std::vector<double> transition_spectrum(const Graph& g) {
  if (!g.is_regular()) throw Error(ErrorCode::not_regular, "transition spectrum needs a regular graph");
  const auto m = matrices(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.transition, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

inline std::vector<double> laplacian_spectrum(const Graph& g) {
  const auto m = matrices(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.laplacian, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

/// { (1/d) sum_j cos(2 pi k_j / N) : k in {0..N-1}^d }, ascending.
inline std::vector<double> transition_spectrum_torus(int d, int N) {
  if (d < 1 || N < 3) throw Error(ErrorCode::invalid_parameter, "torus needs d >= 1 and N >= 3");
  std::vector<double> cosines(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) cosines[static_cast<std::size_t>(k)] = std::cos(2.0 * std::numbers::pi * k / N);
  std::vector<double> out{0.0};
  for (int j = 0; j < d; ++j) {
    std::vector<double> next;
    next.reserve(out.size() * static_cast<std::size_t>(N));
    for (double partial : out)
      for (double c : cosines) next.push_back(partial + c);
    out = std::move(next);
  }
  for (double& x : out) x /= d;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gzeta
