#pragma once

#include <optional>
#include <string>

#include "tdom/families.hpp"
#include "tdom/graph.hpp"
#include "tdom/random.hpp"

namespace tdom {

/// Vertices x with g - x a tree.
VertexSet quasi_vertices(const Graph& g);

/// Has a quasi-vertex and is not itself a tree.
bool is_nontrivial_quasi_tree(const Graph& g);

struct QuasiTreeType {
  enum Kind { Type1, Type2 } kind;
  /// For Type1: the smallest quasi-vertex h with g - h in the family.
  std::optional<int> witness;
};

/// Throws GraphError unless g is a non-trivial quasi-tree.
QuasiTreeType classify_type(const Graph& g);

/// The six constructive subclasses of type-1 quasi-trees.
enum class QTClass { QT1 = 1, QT2, QT3, QT4, QT5, QT6 };

std::string to_string(QTClass c);
/// o1 for QT1/QT3/QT5, o2 for the rest.
GammaOp required_last_op(QTClass c);

/// A type-1 quasi-tree built from a family tree T and a new hub vertex h.
///
/// Vertex ids of T are kept; h = n(T). `near` are the hub's neighbours
/// among the vertices T's last operation added, `far` those elsewhere in T.
struct QTInstance {
  Graph graph;
  QTClass cls;
  GammaTree base;
  int hub;
  /// x, w, v (, z) of the base's last operation.
  VertexSet last_op_vertices;
  /// Attachment vertex y of the base's last operation.
  int y;
  VertexSet near;
  VertexSet far;

  VertexSet attachments() const { return near | far; }
  int t() const { return attachments().size(); }
  int t1() const { return near.size(); }
  int t2() const { return far.size(); }
};

/// Validates the class constraints on `attachments` (a subset of V(T)) and
/// builds the instance. Throws NotApplicable on a wrong last operation or
/// attachment set.
QTInstance build_qt(QTClass cls, const GammaTree& base, VertexSet attachments);

/// Uniform draw: t (or t1, t2) uniform over the valid range, then a uniform
/// subset of that size. The base gets `base_ops` random operations, the
/// last one forced to the class's kind.
QTInstance random_qt(QTClass cls, Rng& rng, int base_ops);

/// The reduced graph G' of the class: G minus {x,w,v,z} (QT1, QT5),
/// {x,w,v} (QT2, QT6), {h,x,w,v,z} (QT3) or {h,x,w,v} (QT4).
Graph lemma_reduction(const QTInstance& q);

/// Vertex set removed by lemma_reduction.
VertexSet lemma_removed(const QTInstance& q);

/// n + m + (number of leaves).
int induction_measure(const Graph& g);

}  // namespace tdom
