#pragma once

// Seeded generators shared by property tests, campaigns and the CLI.
// Draws avoid std::uniform_int_distribution so that a seed produces the
// same instances with every standard library.

#include <cstdint>
#include <optional>
#include <random>

#include "tdom/families.hpp"
#include "tdom/graph.hpp"

namespace tdom {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20220531;

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);
/// Uniform k-subset of `from`.
VertexSet random_subset(Rng& rng, VertexSet from, int k);
/// Uniform random permutation of 0..n-1.
std::vector<int> random_permutation(Rng& rng, int n);

/// Random labelled tree (uniform Prüfer sequence) plus each remaining
/// vertex pair as an edge with probability `extra_edge_prob`, stopping
/// once `max_edges` is reached.
Graph random_connected_graph(Rng& rng, int n, double extra_edge_prob, int max_edges = 64 * 63 / 2);

/// Applies `ops` random family operations to T0. When `last` is set the
/// final operation is forced to that kind.
GammaTree random_gamma_tree(Rng& rng, int ops, std::optional<GammaOp> last = std::nullopt);

}  // namespace tdom
