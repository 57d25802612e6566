#include "tdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace tdom {

namespace {

void check_order(int n) {
  if (n < 0 || n > Graph::kMaxOrder) {
    throw GraphError("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(n));
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  n_ = n;
  adj_.assign(n, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return b.build();
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
  Graph g;
  check_order(static_cast<int>(rows.size()));
  g.n_ = static_cast<int>(rows.size());
  g.adj_ = std::move(rows);
  g.validate();
  int twice_m = 0;
  for (auto r : g.adj_) twice_m += std::popcount(r);
  g.m_ = twice_m / 2;
  return g;
}

void Graph::validate() const {
  const std::uint64_t outside = ~VertexSet::first_n(n_).bits();
  for (int v = 0; v < n_; ++v) {
    if (adj_[v] & outside) throw GraphError("adjacency row references a vertex >= n");
    if (has_edge(v, v)) throw GraphError("self-loop at vertex " + std::to_string(v));
    for (int u : neighbors(v)) {
      if (!has_edge(u, v)) throw GraphError("asymmetric adjacency");
    }
  }
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : kMaxOrder;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::leaf_count() const {
  int c = 0;
  for (int v = 0; v < n_; ++v) c += degree(v) == 1;
  return c;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::vector<int> index(n_, -1);
  int k = 0;
  for (int v : keep) index[v] = k++;
  std::vector<std::uint64_t> rows(k, 0);
  for (int v : keep) {
    for (int u : neighbors(v) & keep) rows[index[v]] |= std::uint64_t{1} << index[u];
  }
  return from_rows(std::move(rows));
}

Graph Graph::with_vertex(VertexSet nbrs) const {
  check_order(n_ + 1);
  if (!nbrs.is_subset_of(vertices())) throw GraphError("new vertex joined to a missing vertex");
  std::vector<std::uint64_t> rows = adj_;
  for (int u : nbrs) rows[u] |= std::uint64_t{1} << n_;
  rows.push_back(nbrs.bits());
  return from_rows(std::move(rows));
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  std::vector<std::uint64_t> rows = adj_;
  rows[u] |= std::uint64_t{1} << v;
  rows[v] |= std::uint64_t{1} << u;
  return from_rows(std::move(rows));
}

Graph Graph::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation length differs from order");
  std::vector<bool> seen(n_, false);
  for (int p : perm) {
    check_vertex(n_, p);
    if (seen[p]) throw GraphError("relabelling is not a permutation");
    seen[p] = true;
  }
  std::vector<std::uint64_t> rows(n_, 0);
  for (int v = 0; v < n_; ++v) {
    for (int u : neighbors(v)) rows[perm[v]] |= std::uint64_t{1} << perm[u];
  }
  return from_rows(std::move(rows));
}

GraphBuilder::GraphBuilder(int n) {
  check_order(n);
  rows_.assign(n, 0);
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  const int n = order();
  check_vertex(n, u);
  check_vertex(n, v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
  return *this;
}

std::vector<VertexDegree> degree_sequence(const Graph& g) {
  std::vector<VertexDegree> seq;
  seq.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) seq.push_back({v, g.degree(v)});
  std::ranges::sort(seq, [](const VertexDegree& a, const VertexDegree& b) {
    return std::pair(a.degree, a.vertex) < std::pair(b.degree, b.vertex);
  });
  return seq;
}

namespace {

VertexSet reach(const Graph& g, int start, VertexSet allowed) {
  VertexSet seen = VertexSet::singleton(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next &= allowed;
    frontier = next - seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reach(g, 0, g.vertices()) == g.vertices();
}

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet c = reach(g, left.first(), left);
    comps.push_back(c);
    left -= c;
  }
  return comps;
}

VertexSet cut_vertices(const Graph& g) {
  VertexSet cuts;
  const auto base = connected_components(g).size();
  for (int v = 0; v < g.order(); ++v) {
    VertexSet rest = g.vertices() - VertexSet::singleton(v);
    std::size_t comps = 0;
    while (!rest.empty()) {
      rest -= reach(g, rest.first(), rest);
      ++comps;
    }
    // Removing an isolated vertex drops a component rather than splitting one.
    if (g.degree(v) > 0 && comps > base) cuts.insert(v);
  }
  return cuts;
}

std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  const int n = g.order();
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : g.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        } else if (parent[v] != u) {
          int len = dist[u] + dist[v] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

VertexSet universal_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) out.insert(v);
  }
  return out;
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph star_graph(int leaves) {
  GraphBuilder b(leaves + 1);
  for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
  return b.build();
}

std::string to_string(VertexSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace tdom
