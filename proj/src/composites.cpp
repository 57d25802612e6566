#include "tdom/composites.hpp"

#include <numeric>
#include <string>

namespace tdom {

namespace {

void require_order(int n, const char* what) {
  if (n > Graph::kMaxOrder) {
    throw SizeCapExceeded(std::string(what) + " would have " + std::to_string(n) +
                          " vertices; the limit is 64");
  }
}

}  // namespace

BijectionSpec::BijectionSpec(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (int x : image_) {
    if (x < 0 || x >= size() || hit[x]) throw GraphError("bijection is not a permutation");
    hit[x] = true;
  }
}

BijectionSpec BijectionSpec::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return BijectionSpec(std::move(id));
}

BijectionSpec BijectionSpec::inverse() const {
  std::vector<int> inv(image_.size());
  for (int u = 0; u < size(); ++u) inv[image_[u]] = u;
  return BijectionSpec(std::move(inv));
}

Graph triangulate(const Graph& g) {
  const int n = g.order();
  require_order(n + g.size(), "triangulation");
  GraphBuilder b(n + g.size());
  int apex = n;
  for (const Edge& e : g.edges()) {
    b.add_edge(e.u, e.v);
    b.add_edge(apex, e.u);
    b.add_edge(apex, e.v);
    ++apex;
  }
  return b.build();
}

Graph double_graph(const Graph& g) {
  const int n = g.order();
  require_order(2 * n, "double graph");
  GraphBuilder b(2 * n);
  for (const Edge& e : g.edges()) {
    b.add_edge(e.u, e.v);
    b.add_edge(e.u + n, e.v + n);
    b.add_edge(e.u, e.v + n);
    b.add_edge(e.u + n, e.v);
  }
  return b.build();
}

Graph bijection_graph(const Graph& g, const Graph& h, const BijectionSpec& f) {
  const int n = g.order();
  if (h.order() != n || f.size() != n) {
    throw GraphError("bijection graph needs n(G) = n(H) = |f|");
  }
  require_order(2 * n, "bijection graph");
  GraphBuilder b(2 * n);
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) b.add_edge(e.u + n, e.v + n);
  for (int u = 0; u < n; ++u) b.add_edge(u, n + f(u));
  return b.build();
}

Graph mycielskian(const Graph& g) {
  const int n = g.order();
  require_order(2 * n + 1, "Mycielskian");
  GraphBuilder b(2 * n + 1);
  for (const Edge& e : g.edges()) {
    b.add_edge(e.u, e.v);
    b.add_edge(n + e.u, e.v);
    b.add_edge(e.u, n + e.v);
  }
  for (int i = 0; i < n; ++i) b.add_edge(2 * n, n + i);
  return b.build();
}

Graph universally_identify(const Graph& g, int v, const Graph& h, int u) {
  if (v < 0 || v >= g.order()) throw GraphError("identify: vertex v outside G");
  if (u < 0 || u >= h.order()) throw GraphError("identify: vertex u outside H");
  if (!universal_vertices(h).contains(u)) {
    throw GraphError("identify: vertex " + std::to_string(u) + " is not universal in H");
  }
  const int n = g.order() + h.order() - 1;
  require_order(n, "universally-identifying graph");
  std::vector<int> place(h.order());
  int next = g.order();
  for (int x = 0; x < h.order(); ++x) place[x] = x == u ? v : next++;

  GraphBuilder b(n);
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) b.add_edge(place[e.u], place[e.v]);
  return b.build();
}

int identify_order_threshold(int n_g) {
  // ceil(n/3 + 2) == ceil(n/3) + 2 for integer n.
  return (n_g + 2) / 3 + 2;
}

bool meets_identify_order_bound(int n_g, int n_h) { return n_h >= identify_order_threshold(n_g); }

bool meets_cut_vertex_hypothesis(const Graph& g) {
  const int n = g.order();
  const int delta = g.max_degree();
  if (!is_connected(g) || delta < n / 4 + 4) return false;
  for (int v : cut_vertices(g)) {
    const Graph rest = g.without(v);
    for (VertexSet c : connected_components(rest)) {
      if (c.size() == n - delta) return true;
    }
  }
  return false;
}

Graph cut_vertex_instance(Rng& rng, int side, int delta) {
  const int n = side + delta;
  require_order(n, "cut-vertex instance");
  if (side < 1 || delta < n / 4 + 4 || side >= delta) {
    throw GraphError("cut-vertex instance needs 1 <= side < delta and delta >= floor(n/4 + 4)");
  }
  const Graph part = random_connected_graph(rng, side, 0.3);
  const int hub = side;
  GraphBuilder b(n);
  for (const Edge& e : part.edges()) b.add_edge(e.u, e.v);
  b.add_edge(hub, uniform_int(rng, 0, side - 1));
  for (int x = side + 1; x < n; ++x) {
    b.add_edge(hub, x);
    for (int y = x + 1; y < n; ++y) {
      if (uniform_int(rng, 0, 2) == 0) b.add_edge(x, y);
    }
  }
  return b.build();
}

}  // namespace tdom
