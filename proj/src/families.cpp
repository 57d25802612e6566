#include "tdom/families.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "tdom/canonical.hpp"
#include "tdom/invariants.hpp"

namespace tdom {

char status_char(Status s) {
  switch (s) {
    case Status::A: return 'A';
    case Status::B: return 'B';
    case Status::C: return 'C';
  }
  return '?';
}

GammaTree GammaTree::t0() {
  GammaTree t;
  t.tree_ = path_graph(6);
  t.status_ = {Status::C, Status::A, Status::B, Status::B, Status::A, Status::C};
  return t;
}

GammaTree GammaTree::replay(std::span<const GammaStep> steps) {
  GammaTree t = t0();
  for (const GammaStep& s : steps) t = t.apply(s.op, s.at);
  return t;
}

bool GammaTree::can_apply_o1(int y) const {
  return y >= 0 && y < tree_.order() && status_[y] == Status::C && tree_.degree(y) == 1 &&
         tree_.order() + 4 <= Graph::kMaxOrder;
}

bool GammaTree::can_apply_o2(int y) const {
  return y >= 0 && y < tree_.order() && status_[y] == Status::B &&
         tree_.order() + 3 <= Graph::kMaxOrder;
}

GammaTree GammaTree::apply_o1(int y) const { return apply(GammaOp::O1, y); }
GammaTree GammaTree::apply_o2(int y) const { return apply(GammaOp::O2, y); }

GammaTree GammaTree::apply(GammaOp op, int y) const {
  const bool ok = op == GammaOp::O1 ? can_apply_o1(y) : can_apply_o2(y);
  if (!ok) {
    throw NotApplicable(std::string(op == GammaOp::O1 ? "o1" : "o2") + " not applicable at vertex " +
                        std::to_string(y));
  }
  const std::vector<Status> added_status =
      op == GammaOp::O1 ? std::vector{Status::B, Status::B, Status::A, Status::C}
                        : std::vector{Status::B, Status::A, Status::C};
  const int n = tree_.order();
  const int k = static_cast<int>(added_status.size());

  GraphBuilder b(n + k);
  for (const Edge& e : tree_.edges()) b.add_edge(e.u, e.v);
  b.add_edge(y, n);
  for (int i = 0; i + 1 < k; ++i) b.add_edge(n + i, n + i + 1);

  GammaTree out;
  out.tree_ = b.build();
  out.status_ = status_;
  out.status_.insert(out.status_.end(), added_status.begin(), added_status.end());
  out.trace_ = trace_;
  GammaStep step{op, y, {}};
  for (int i = 0; i < k; ++i) step.added.push_back(n + i);
  out.trace_.push_back(std::move(step));
  return out;
}

std::optional<GammaOp> GammaTree::last_op() const {
  if (trace_.empty()) return std::nullopt;
  return trace_.back().op;
}

VertexSet GammaTree::last_added() const {
  VertexSet s;
  if (!trace_.empty()) {
    for (int v : trace_.back().added) s.insert(v);
  }
  return s;
}

std::string GammaTree::status_string() const {
  std::string s;
  for (Status st : status_) s.push_back(status_char(st));
  return s;
}

namespace {

std::vector<int> status_colors(const GammaTree& t) {
  std::vector<int> colors;
  colors.reserve(t.statuses().size());
  for (Status s : t.statuses()) colors.push_back(static_cast<int>(s));
  return colors;
}

}  // namespace

std::vector<GammaTree> enumerate_gamma(int max_n) {
  if (max_n > Graph::kMaxOrder) throw GraphError("enumerate_gamma: max_n exceeds 64");
  std::vector<GammaTree> out;
  if (max_n < 6) return out;

  // Breadth-first over labelled states; a state is a tree together with its
  // statuses, so two traces reaching the same status-coloured tree merge.
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen_states;
  std::map<std::pair<int, CanonicalForm>, GammaTree> unlabelled;

  std::vector<GammaTree> frontier{GammaTree::t0()};
  seen_states.insert(canonical_form(frontier[0].tree(), status_colors(frontier[0])));
  while (!frontier.empty()) {
    std::vector<GammaTree> next;
    for (const GammaTree& t : frontier) {
      unlabelled.try_emplace({t.tree().order(), canonical_form(t.tree())}, t);
      for (int y = 0; y < t.tree().order(); ++y) {
        for (GammaOp op : {GammaOp::O1, GammaOp::O2}) {
          const int grow = op == GammaOp::O1 ? 4 : 3;
          if (t.tree().order() + grow > max_n) continue;
          const bool ok = op == GammaOp::O1 ? t.can_apply_o1(y) : t.can_apply_o2(y);
          if (!ok) continue;
          GammaTree child = op == GammaOp::O1 ? t.apply_o1(y) : t.apply_o2(y);
          if (seen_states.insert(canonical_form(child.tree(), status_colors(child))).second) {
            next.push_back(std::move(child));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  out.reserve(unlabelled.size());
  for (auto& [key, t] : unlabelled) out.push_back(std::move(t));
  return out;
}

bool gamma_membership(const Graph& t) {
  if (!is_tree(t)) throw GraphError("gamma_membership expects a tree");
  if (t.order() < 3) return false;
  return total_domination_number(t).gamma_t == annihilation_number(t).a + 1;
}

// Level sequences follow Wright, Richmond, Odlyzko and McKay: a free tree is
// represented by the depth sequence of a canonically rooted ordered tree,
// and successors are produced directly in that representation.
namespace {

using Layout = std::vector<int>;

std::optional<Layout> next_rooted_tree(const Layout& pred, std::optional<std::size_t> p_hint = {}) {
  std::size_t p;
  if (p_hint) {
    p = *p_hint;
  } else {
    p = pred.size() - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

std::pair<Layout, Layout> split_tree(const Layout& layout) {
  bool one_found = false;
  std::size_t m = layout.size();
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  Layout left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  Layout rest{0};
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

std::optional<Layout> next_tree(const Layout& candidate) {
  auto [left, rest] = split_tree(candidate);
  const int left_height = *std::ranges::max_element(left);
  const int rest_height = *std::ranges::max_element(rest);
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  std::optional<Layout> jumped = next_rooted_tree(candidate, p);
  if (jumped && candidate[p] > 2) {
    auto [new_left, new_rest] = split_tree(*jumped);
    const int h = *std::ranges::max_element(new_left);
    const std::size_t len = static_cast<std::size_t>(h) + 1;
    for (std::size_t i = 0; i < len; ++i) (*jumped)[jumped->size() - len + i] = static_cast<int>(i) + 1;
  }
  return jumped;
}

Graph layout_to_graph(const Layout& layout) {
  GraphBuilder b(static_cast<int>(layout.size()));
  std::vector<int> stack;
  for (int i = 0; i < static_cast<int>(layout.size()); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      b.add_edge(i, stack.back());
    }
    stack.push_back(i);
  }
  return b.build();
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder) {
    throw GraphError("free-tree enumeration supports 1 <= n <= " + std::to_string(kMaxOrder));
  }
  if (n >= 3) {
    // Start from the path rooted at its centre.
    for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) layout_.push_back(i);
  }
}

std::optional<Graph> FreeTreeGenerator::next() {
  if (done_) return std::nullopt;
  if (n_ <= 2) {
    done_ = true;
    return path_graph(n_);
  }
  std::optional<Layout> valid = next_tree(layout_);
  if (!valid) {
    done_ = true;
    return std::nullopt;
  }
  Graph g = layout_to_graph(*valid);
  std::optional<Layout> succ = next_rooted_tree(*valid);
  if (succ) {
    layout_ = std::move(*succ);
  } else {
    done_ = true;
  }
  return g;
}

std::vector<Graph> enumerate_free_trees(int n) {
  std::vector<Graph> out;
  FreeTreeGenerator gen(n);
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

}  // namespace tdom
