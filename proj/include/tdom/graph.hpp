#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tdom {

/// Thrown when a graph would violate the simple-graph or size invariants.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subset of {0, ..., 63}, one bit per vertex.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }
  std::vector<int> to_vector() const { return {begin(), end()}; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

struct Edge {
  int u;
  int v;
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1 with n <= 64.
///
/// Adjacency is stored as one 64-bit row per vertex. Every constructor
/// checks symmetry and loop-freeness, so a Graph value always satisfies
/// them.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Takes adjacency rows directly; throws GraphError unless they describe a simple graph.
  static Graph from_rows(std::vector<std::uint64_t> rows);

  int order() const { return n_; }
  int size() const { return m_; }
  VertexSet vertices() const { return VertexSet::first_n(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  std::span<const std::uint64_t> rows() const { return adj_; }

  int min_degree() const;
  int max_degree() const;
  /// Number of degree-1 vertices.
  int leaf_count() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in ascending id order.
  Graph induced(VertexSet keep) const;
  Graph without(VertexSet removed) const { return induced(vertices() - removed); }
  Graph without(int v) const { return without(VertexSet::singleton(v)); }
  /// Adds vertex n adjacent to `nbrs`.
  Graph with_vertex(VertexSet nbrs) const;
  Graph with_edge(int u, int v) const;
  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabel(std::span<const int> perm) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  void validate() const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Mutable builder for Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  GraphBuilder& add_edge(int u, int v);
  int order() const { return static_cast<int>(rows_.size()); }
  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  Graph build() const { return Graph::from_rows(rows_); }

 private:
  std::vector<std::uint64_t> rows_;
};

struct VertexDegree {
  int vertex;
  int degree;
  bool operator==(const VertexDegree&) const = default;
};

/// Degrees sorted ascending by (degree, vertex id).
std::vector<VertexDegree> degree_sequence(const Graph& g);

bool is_connected(const Graph& g);
/// Connected and m = n - 1. The one-vertex graph is a tree.
bool is_tree(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
/// Vertices whose removal increases the number of components.
VertexSet cut_vertices(const Graph& g);
/// Length of a shortest cycle, or nullopt for a forest.
std::optional<int> girth(const Graph& g);
/// Vertices adjacent to every other vertex.
VertexSet universal_vertices(const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{1,leaves}; vertex 0 is the center.
Graph star_graph(int leaves);

std::string to_string(VertexSet s);

}  // namespace tdom
