#include "tdom/invariants.hpp"

#include <algorithm>
#include <string>

namespace tdom {

AnnihilationResult annihilation_number(const Graph& g) {
  AnnihilationResult r;
  for (const VertexDegree& vd : degree_sequence(g)) {
    if (r.degree_sum + vd.degree > g.size()) break;
    r.degree_sum += vd.degree;
    r.set.insert(vd.vertex);
    ++r.a;
  }
  return r;
}

int sum_of_set(VertexSet s, const Graph& g) {
  if (!s.is_subset_of(g.vertices())) {
    throw GraphError("vertex set " + to_string(s) + " is not inside a graph of order " +
                     std::to_string(g.order()));
  }
  int sum = 0;
  for (int v : s) sum += g.degree(v);
  return sum;
}

bool is_total_dominating(VertexSet s, const Graph& g) {
  VertexSet dominated;
  for (int v : s & g.vertices()) dominated |= g.neighbors(v);
  return g.vertices().is_subset_of(dominated);
}

namespace {

void require_defined(const Graph& g) {
  if (g.order() < 2) throw UndefinedInvariant("total domination needs at least two vertices");
  if (g.min_degree() == 0) throw UndefinedInvariant("total domination undefined: isolated vertex");
  if (!is_connected(g)) throw UndefinedInvariant("total domination undefined: graph is disconnected");
}

VertexSet greedy_cover(const Graph& g) {
  VertexSet chosen;
  VertexSet dominated;
  const VertexSet all = g.vertices();
  while (dominated != all) {
    const VertexSet open = all - dominated;
    int pick = -1;
    int gain = 0;
    for (int w : all - chosen) {
      int c = (g.neighbors(w) & open).size();
      if (c > gain) {
        gain = c;
        pick = w;
      }
    }
    chosen.insert(pick);
    dominated |= g.neighbors(pick);
  }
  return chosen;
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g) : g_(g), all_(g.vertices()) {
    best_ = greedy_cover(g);
  }

  VertexSet solve() {
    search(VertexSet{}, VertexSet{}, VertexSet{});
    return best_;
  }

 private:
  void search(VertexSet chosen, VertexSet dominated, VertexSet forbidden) {
    const VertexSet open = all_ - dominated;
    if (open.empty()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + 1 >= best_.size()) return;

    const VertexSet allowed = all_ - chosen - forbidden;
    int max_cover = 0;
    for (int w : allowed) max_cover = std::max(max_cover, (g_.neighbors(w) & open).size());
    if (max_cover == 0) return;
    const int lower = chosen.size() + (open.size() + max_cover - 1) / max_cover;
    if (lower >= best_.size()) return;

    int pivot = -1;
    int fewest = Graph::kMaxOrder + 1;
    for (int u : open) {
      int options = (g_.neighbors(u) & allowed).size();
      if (options == 0) return;
      if (options < fewest) {
        fewest = options;
        pivot = u;
      }
    }

    std::vector<int> branches = (g_.neighbors(pivot) & allowed).to_vector();
    std::ranges::stable_sort(branches, [&](int a, int b) {
      return (g_.neighbors(a) & open).size() > (g_.neighbors(b) & open).size();
    });
    for (int w : branches) {
      VertexSet next = chosen;
      next.insert(w);
      search(next, dominated | g_.neighbors(w), forbidden);
      forbidden.insert(w);
    }
  }

  const Graph& g_;
  const VertexSet all_;
  VertexSet best_;
};

// Next larger integer with the same popcount.
std::uint64_t next_combination(std::uint64_t x) {
  std::uint64_t low = x & (~x + 1);
  std::uint64_t ripple = x + low;
  return ripple | (((x ^ ripple) >> 2) / low);
}

}  // namespace

DomResult total_domination_number(const Graph& g) {
  require_defined(g);
  VertexSet best = BranchAndBound(g).solve();
  return {best.size(), best};
}

DomResult total_domination_oracle(const Graph& g) {
  require_defined(g);
  const int n = g.order();
  if (n > kOracleMaxOrder) {
    throw std::length_error("subset-enumeration oracle limited to n <= " +
                            std::to_string(kOracleMaxOrder));
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (int k = 1; k <= n; ++k) {
    for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit; s = next_combination(s)) {
      if (is_total_dominating(VertexSet(s), g)) return {k, VertexSet(s)};
    }
  }
  throw std::logic_error("no total dominating set found on a graph without isolated vertices");
}

}  // namespace tdom
