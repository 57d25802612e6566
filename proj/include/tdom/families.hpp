#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdom/graph.hpp"

namespace tdom {

/// An operation's precondition does not hold for the chosen vertex.
class NotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Status : std::uint8_t { A, B, C };

char status_char(Status s);

/// o1 hangs a 4-vertex path off a C-status leaf; o2 hangs a 3-vertex path
/// off a B-status vertex.
enum class GammaOp : std::uint8_t { O1, O2 };

struct GammaStep {
  GammaOp op;
  /// Attachment vertex y.
  int at;
  /// New vertices in path order: x, w, v (, z).
  std::vector<int> added;

  bool operator==(const GammaStep&) const = default;
};

/// A labelled tree of the family built from the status-labelled P6 by
/// repeated o1/o2 applications, together with the trace that built it.
class GammaTree {
 public:
  /// The labelled P6 0-1-2-3-4-5 with statuses C,A,B,B,A,C.
  static GammaTree t0();
  /// Rebuilds a tree from T0 by applying `steps` in order.
  static GammaTree replay(std::span<const GammaStep> steps);

  const Graph& tree() const { return tree_; }
  Status status(int v) const { return status_[v]; }
  std::span<const Status> statuses() const { return status_; }
  const std::vector<GammaStep>& trace() const { return trace_; }

  /// Throws NotApplicable unless y is a C-status leaf.
  GammaTree apply_o1(int y) const;
  /// Throws NotApplicable unless y has status B.
  GammaTree apply_o2(int y) const;

  bool can_apply_o1(int y) const;
  bool can_apply_o2(int y) const;

  std::optional<GammaOp> last_op() const;
  /// Vertices added by the last operation (empty for T0).
  VertexSet last_added() const;

  std::string status_string() const;

 private:
  GammaTree apply(GammaOp op, int y) const;

  Graph tree_;
  std::vector<Status> status_;
  std::vector<GammaStep> trace_;
};

/// Every family member with at most max_n vertices, one per unlabelled
/// isomorphism class, ordered by (order, canonical form). Each carries the
/// first trace that reached it.
std::vector<GammaTree> enumerate_gamma(int max_n);

/// True iff the tree has n >= 3 and gamma_t = a + 1, which characterises
/// family membership. Throws GraphError for non-trees.
bool gamma_membership(const Graph& t);

/// Free trees by level-sequence successor generation, one per isomorphism
/// class, in generation order.
class FreeTreeGenerator {
 public:
  inline static constexpr int kMaxOrder = 20;
  explicit FreeTreeGenerator(int n);
  std::optional<Graph> next();

 private:
  int n_;
  bool done_ = false;
  std::vector<int> layout_;
};

std::vector<Graph> enumerate_free_trees(int n);

}  // namespace tdom
