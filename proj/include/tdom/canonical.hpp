#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tdom/graph.hpp"

namespace tdom {

/// Byte string identifying an isomorphism class. It is the graph6 encoding
/// of the canonically relabelled graph, prefixed by the vertex colours when
/// a colouring was supplied.
struct CanonicalForm {
  std::string bytes;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// labeling[v] is the canonical position of vertex v.
  std::vector<int> labeling;
};

/// Canonical labelling by equitable partition refinement and
/// individualisation, with automorphism pruning.
CanonicalLabeling canonical_labeling(const Graph& g);
/// Same, but only colour-preserving relabellings are considered.
/// `colors` holds one small non-negative integer per vertex.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors);

CanonicalForm canonical_form(const Graph& g);
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors);

bool are_isomorphic(const Graph& a, const Graph& b);

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const { return std::hash<std::string>{}(f.bytes); }
};

}  // namespace tdom
