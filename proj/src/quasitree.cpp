#include "tdom/quasitree.hpp"

namespace tdom {

VertexSet quasi_vertices(const Graph& g) {
  VertexSet out;
  for (int x = 0; x < g.order(); ++x) {
    if (g.size() - g.degree(x) != g.order() - 2) continue;
    if (is_tree(g.without(x))) out.insert(x);
  }
  return out;
}

bool is_nontrivial_quasi_tree(const Graph& g) {
  return g.order() >= 2 && !is_tree(g) && !quasi_vertices(g).empty();
}

QuasiTreeType classify_type(const Graph& g) {
  if (!is_nontrivial_quasi_tree(g)) throw GraphError("classify_type expects a non-trivial quasi-tree");
  for (int h : quasi_vertices(g)) {
    if (gamma_membership(g.without(h))) return {QuasiTreeType::Type1, h};
  }
  return {QuasiTreeType::Type2, std::nullopt};
}

std::string to_string(QTClass c) { return "QT" + std::to_string(static_cast<int>(c)); }

GammaOp required_last_op(QTClass c) {
  switch (c) {
    case QTClass::QT1:
    case QTClass::QT3:
    case QTClass::QT5: return GammaOp::O1;
    default: return GammaOp::O2;
  }
}

namespace {

struct Bounds {
  int near_min, near_max, far_min, far_max;
};

// Admissible (near, far) attachment counts for each class.
Bounds bounds(QTClass cls, int last_size, int far_size) {
  switch (cls) {
    case QTClass::QT1:
    case QTClass::QT2: return {0, 0, 2, far_size};
    case QTClass::QT3:
    case QTClass::QT4: return {2, last_size, 0, 0};
    case QTClass::QT5:
    case QTClass::QT6: return {1, last_size, 1, far_size};
  }
  return {};
}

}  // namespace

QTInstance build_qt(QTClass cls, const GammaTree& base, VertexSet attachments) {
  if (base.last_op() != required_last_op(cls)) {
    throw NotApplicable(to_string(cls) + " needs a base whose last operation was " +
                        (required_last_op(cls) == GammaOp::O1 ? "o1" : "o2"));
  }
  const Graph& t = base.tree();
  if (!attachments.is_subset_of(t.vertices())) {
    throw NotApplicable("hub attachments must lie in the base tree");
  }
  const VertexSet last = base.last_added();
  QTInstance q{.graph = t.with_vertex(attachments),
               .cls = cls,
               .base = base,
               .hub = t.order(),
               .last_op_vertices = last,
               .y = base.trace().back().at,
               .near = attachments & last,
               .far = attachments - last};
  const Bounds b = bounds(cls, last.size(), (t.vertices() - last).size());
  if (q.t1() < b.near_min || q.t1() > b.near_max || q.t2() < b.far_min || q.t2() > b.far_max) {
    throw NotApplicable(to_string(cls) + ": attachment set " + to_string(attachments) +
                        " violates the class constraints");
  }
  return q;
}

QTInstance random_qt(QTClass cls, Rng& rng, int base_ops) {
  GammaTree base = random_gamma_tree(rng, std::max(base_ops, 1), required_last_op(cls));
  const VertexSet last = base.last_added();
  const VertexSet rest = base.tree().vertices() - last;
  const Bounds b = bounds(cls, last.size(), rest.size());
  VertexSet chosen = random_subset(rng, last, uniform_int(rng, b.near_min, b.near_max));
  chosen |= random_subset(rng, rest, uniform_int(rng, b.far_min, b.far_max));
  return build_qt(cls, base, chosen);
}

VertexSet lemma_removed(const QTInstance& q) {
  VertexSet removed = q.last_op_vertices;
  if (q.cls == QTClass::QT3 || q.cls == QTClass::QT4) removed.insert(q.hub);
  return removed;
}

Graph lemma_reduction(const QTInstance& q) { return q.graph.without(lemma_removed(q)); }

int induction_measure(const Graph& g) { return g.order() + g.size() + g.leaf_count(); }

}  // namespace tdom
