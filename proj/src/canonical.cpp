#include "tdom/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "tdom/graph6.hpp"

namespace tdom {

namespace {

using Partition = std::vector<VertexSet>;

// Splits every cell by the number of neighbours its members have in each
// cell, until the partition is equitable. New cells are ordered by their
// count vectors, so the result depends only on structure and the input order.
Partition refine(const Graph& g, Partition cells) {
  struct Signature {
    std::vector<std::uint8_t> counts;
    int vertex;
  };
  while (true) {
    Partition next;
    next.reserve(g.order());
    std::vector<Signature> sigs;
    for (VertexSet cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      sigs.clear();
      for (int v : cell) {
        Signature s{std::vector<std::uint8_t>(cells.size()), v};
        for (std::size_t k = 0; k < cells.size(); ++k) {
          s.counts[k] = static_cast<std::uint8_t>((g.neighbors(v) & cells[k]).size());
        }
        sigs.push_back(std::move(s));
      }
      std::ranges::sort(sigs, [](const Signature& a, const Signature& b) {
        return std::tie(a.counts, a.vertex) < std::tie(b.counts, b.vertex);
      });
      VertexSet part;
      for (std::size_t i = 0; i < sigs.size(); ++i) {
        if (i > 0 && sigs[i].counts != sigs[i - 1].counts) {
          next.push_back(part);
          part = VertexSet{};
        }
        part.insert(sigs[i].vertex);
      }
      next.push_back(part);
    }
    if (next.size() == cells.size()) return next;
    cells = std::move(next);
  }
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g) {}

  void run(Partition initial) { descend(refine(g_, std::move(initial)), 0); }

  const std::vector<int>& best_order() const { return best_order_; }
  const std::vector<std::uint64_t>& best_rows() const { return best_rows_; }

 private:
  // Returns the level the search should resume at; a value below the
  // caller's level means "keep unwinding".
  int descend(const Partition& cells, int level) {
    const int n = g_.order();
    if (static_cast<int>(cells.size()) == n) return leaf(cells, level);

    auto target_it = std::ranges::find_if(cells, [](VertexSet c) { return c.size() > 1; });
    const auto target = static_cast<std::size_t>(target_it - cells.begin());

    VertexSet explored;
    for (int v : cells[target]) {
      if (!explored.empty() && in_explored_orbit(v, explored)) continue;
      Partition child = cells;
      child[target].erase(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), VertexSet::singleton(v));
      path_.push_back(v);
      int resume = descend(refine(g_, std::move(child)), level + 1);
      path_.pop_back();
      if (resume < level) return resume;
      explored.insert(v);
    }
    return level;
  }

  int leaf(const Partition& cells, int level) {
    std::vector<int> order;
    order.reserve(cells.size());
    for (VertexSet c : cells) order.push_back(c.first());
    std::vector<std::uint64_t> rows = relabelled_rows(order);

    if (first_order_.empty()) {
      first_order_ = best_order_ = order;
      first_rows_ = best_rows_ = rows;
      first_path_ = path_;
      return level;
    }
    if (rows == first_rows_) {
      record_automorphism(first_order_, order);
      std::size_t common = 0;
      while (common < path_.size() && common < first_path_.size() && path_[common] == first_path_[common]) {
        ++common;
      }
      return static_cast<int>(common);
    }
    if (rows == best_rows_) {
      record_automorphism(best_order_, order);
    } else if (rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_order_ = std::move(order);
    }
    return level;
  }

  std::vector<std::uint64_t> relabelled_rows(const std::vector<int>& order) const {
    const int n = g_.order();
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    std::vector<std::uint64_t> rows(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int u : g_.neighbors(order[i])) rows[i] |= std::uint64_t{1} << position[u];
    }
    return rows;
  }

  void record_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> perm(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) perm[from[i]] = to[i];
    automorphisms_.push_back(std::move(perm));
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // current path pointwise; every such automorphism fixes the node.
  bool in_explored_orbit(int v, VertexSet explored) const {
    UnionFind uf(g_.order());
    bool any = false;
    for (const auto& perm : automorphisms_) {
      if (!std::ranges::all_of(path_, [&](int p) { return perm[p] == p; })) continue;
      any = true;
      for (int x = 0; x < g_.order(); ++x) uf.unite(x, perm[x]);
    }
    if (!any) return false;
    for (int u : explored) {
      if (uf.find(u) == uf.find(v)) return true;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> path_;
  std::vector<int> first_path_;
  std::vector<int> first_order_;
  std::vector<std::uint64_t> first_rows_;
  std::vector<int> best_order_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<std::vector<int>> automorphisms_;
};

CanonicalLabeling label(const Graph& g, Partition initial, std::span<const int> colors) {
  const int n = g.order();
  CanonicalLabeling out;
  if (n == 0) {
    out.form.bytes = write_graph6(g);
    return out;
  }
  Search search(g);
  search.run(std::move(initial));
  const auto& order = search.best_order();
  out.labeling.resize(n);
  for (int i = 0; i < n; ++i) out.labeling[order[i]] = i;

  std::string bytes;
  if (!colors.empty()) {
    for (int i = 0; i < n; ++i) bytes += std::to_string(colors[order[i]]) + ',';
    bytes += ';';
  }
  bytes += write_graph6(Graph::from_rows(search.best_rows()));
  out.form.bytes = std::move(bytes);
  return out;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  return label(g, {g.vertices()}, {});
}

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != g.order()) {
    throw GraphError("colour vector length differs from graph order");
  }
  int max_color = -1;
  for (int c : colors) {
    if (c < 0) throw GraphError("colours must be non-negative");
    max_color = std::max(max_color, c);
  }
  Partition initial(max_color + 1);
  for (int v = 0; v < g.order(); ++v) initial[colors[v]].insert(v);
  std::erase_if(initial, [](VertexSet c) { return c.empty(); });
  return label(g, std::move(initial), colors);
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) {
  return canonical_labeling(g, colors).form;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace tdom
