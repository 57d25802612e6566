#pragma once

#include <stdexcept>

#include "tdom/graph.hpp"

namespace tdom {

/// Raised for inputs on which total domination is not defined
/// (isolated vertices, disconnected graphs, fewer than two vertices).
class UndefinedInvariant : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct DomResult {
  int gamma_t = 0;
  /// A minimum total dominating set.
  VertexSet witness;
};

struct AnnihilationResult {
  int a = 0;
  /// The first `a` vertices of the degree sequence.
  VertexSet set;
  int degree_sum = 0;
};

/// Largest k whose k smallest degrees sum to at most m.
AnnihilationResult annihilation_number(const Graph& g);

/// Degree sum of `s` in `g`. Throws GraphError for a vertex outside g.
int sum_of_set(VertexSet s, const Graph& g);

/// Every vertex of g has a neighbour in s.
bool is_total_dominating(VertexSet s, const Graph& g);

/// Exact total domination number by branch and bound.
///
/// Branches on the neighbours of the undominated vertex with the fewest
/// remaining candidate dominators; a neighbour rejected in one branch is
/// forbidden in its later siblings. A branch is cut when the partial set
/// plus ceil(undominated / best remaining coverage) cannot beat the
/// incumbent, which starts from a greedy cover.
///
/// Requires a connected graph with n >= 2; throws UndefinedInvariant otherwise.
DomResult total_domination_number(const Graph& g);

/// Subset enumeration by increasing cardinality; the first total
/// dominating set found wins. Limited to n <= 20.
DomResult total_domination_oracle(const Graph& g);

inline constexpr int kOracleMaxOrder = 20;

}  // namespace tdom
