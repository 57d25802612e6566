#pragma once

#include <stdexcept>
#include <vector>

#include "tdom/graph.hpp"
#include "tdom/random.hpp"

namespace tdom {

/// A construction would exceed the 64-vertex limit.
class SizeCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// f : V(G) -> V(H) as an index array.
class BijectionSpec {
 public:
  /// Throws GraphError unless `image` is a permutation of 0..n-1.
  explicit BijectionSpec(std::vector<int> image);
  static BijectionSpec identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int u) const { return image_[u]; }
  const std::vector<int>& image() const { return image_; }
  BijectionSpec inverse() const;

 private:
  std::vector<int> image_;
};

/// One apex per edge, joined to both ends. Apexes follow the original
/// vertices in lexicographic edge order. n' = n + m, m' = 3m.
Graph triangulate(const Graph& g);

/// Copies u1 = u and u2 = u + n, with u1v2 and u2v1 for every edge uv.
/// n' = 2n, m' = 4m.
Graph double_graph(const Graph& g);

/// G on 0..n-1, H on n..2n-1, plus the matching u -- n + f(u).
/// m' = m(G) + m(H) + n.
Graph bijection_graph(const Graph& g, const Graph& h, const BijectionSpec& f);

/// G on 0..n-1, shadows u_i = n + i adjacent to N_G(v_i), apex 2n joined to
/// every shadow. n' = 2n + 1, m' = 3m + n.
Graph mycielskian(const Graph& g);

/// Merges vertex v of G with the universal vertex u of H. G keeps its ids;
/// the other vertices of H follow in ascending id order.
/// Throws GraphError if u is not universal in H.
Graph universally_identify(const Graph& g, int v, const Graph& h, int u);

/// n(H) >= ceil(n(G)/3 + 2), reading the ceiling over the whole expression.
bool meets_identify_order_bound(int n_g, int n_h);
/// Smallest n(H) accepted by meets_identify_order_bound.
int identify_order_threshold(int n_g);

/// Connected, has a cut vertex v with Delta >= floor(n/4 + 4), and some
/// component of G - v has exactly n - Delta vertices.
bool meets_cut_vertex_hypothesis(const Graph& g);

/// Builds a graph satisfying meets_cut_vertex_hypothesis: a connected
/// part of order `side` hangs off a hub v through one edge, and v is the
/// universal vertex of a random graph on `delta` vertices. `delta` must be
/// at least floor((side + delta)/4 + 4) and exceed every other degree.
Graph cut_vertex_instance(Rng& rng, int side, int delta);

}  // namespace tdom
