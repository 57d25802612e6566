#include "tdom/random.hpp"

#include <numeric>

namespace tdom {

int uniform_int(Rng& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = Rng::max() - (Rng::max() % span);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

namespace {

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

VertexSet random_subset(Rng& rng, VertexSet from, int k) {
  std::vector<int> pool = from.to_vector();
  VertexSet out;
  for (int i = 0; i < k; ++i) {
    int j = uniform_int(rng, i, static_cast<int>(pool.size()) - 1);
    std::swap(pool[i], pool[j]);
    out.insert(pool[i]);
  }
  return out;
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[uniform_int(rng, 0, i)]);
  return p;
}

Graph random_connected_graph(Rng& rng, int n, double extra_edge_prob, int max_edges) {
  GraphBuilder b(n);
  int m = 0;
  if (n == 2) {
    b.add_edge(0, 1);
    m = 1;
  } else if (n > 2) {
    std::vector<int> prufer(n - 2);
    for (int& x : prufer) x = uniform_int(rng, 0, n - 1);
    std::vector<int> degree(n, 1);
    for (int x : prufer) ++degree[x];
    for (int x : prufer) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      b.add_edge(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) {
        if (u < 0) {
          u = v;
        } else {
          b.add_edge(u, v);
        }
      }
    }
    m = n - 1;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (m >= max_edges) break;
      if (b.has_edge(u, v)) continue;
      if (uniform_unit(rng) < extra_edge_prob) {
        b.add_edge(u, v);
        ++m;
      }
    }
  }
  return b.build();
}

GammaTree random_gamma_tree(Rng& rng, int ops, std::optional<GammaOp> last) {
  GammaTree t = GammaTree::t0();
  for (int i = 0; i < ops; ++i) {
    GammaOp op = (i + 1 == ops && last) ? *last : (uniform_int(rng, 0, 1) == 0 ? GammaOp::O1 : GammaOp::O2);
    std::vector<int> sites;
    for (int y = 0; y < t.tree().order(); ++y) {
      if (op == GammaOp::O1 ? t.can_apply_o1(y) : t.can_apply_o2(y)) sites.push_back(y);
    }
    if (sites.empty()) break;
    int y = sites[uniform_int(rng, 0, static_cast<int>(sites.size()) - 1)];
    t = op == GammaOp::O1 ? t.apply_o1(y) : t.apply_o2(y);
  }
  return t;
}

}  // namespace tdom
