#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "tdom/canonical.hpp"
#include "tdom/graph6.hpp"
#include "tdom/invariants.hpp"
#include "tdom/random.hpp"

namespace tdom {
namespace {

TEST(AnnihilationTest, Examples) {
  EXPECT_EQ(annihilation_number(cycle_graph(3)).a, 1);
  EXPECT_EQ(annihilation_number(cycle_graph(7)).a, 3);
  EXPECT_EQ(annihilation_number(path_graph(6)).a, 3);
  EXPECT_EQ(annihilation_number(path_graph(2)).a, 1);
  EXPECT_EQ(annihilation_number(cycle_graph(4)).a, 2);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(annihilation_number(star_graph(n)).a, n) << n;
}

TEST(AnnihilationTest, SetIsDegreePrefix) {
  const AnnihilationResult r = annihilation_number(star_graph(4));
  EXPECT_EQ(r.set, VertexSet::of({1, 2, 3, 4}));
  EXPECT_EQ(r.degree_sum, 4);
}

TEST(AnnihilationTest, MatchesDefinition) {
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_connected_graph(rng, uniform_int(rng, 2, 40), uniform_int(rng, 0, 5) / 10.0);
    const AnnihilationResult r = annihilation_number(g);
    ASSERT_EQ(r.a, oracle::annihilation(g));
    EXPECT_EQ(r.set.size(), r.a);
    EXPECT_EQ(sum_of_set(r.set, g), r.degree_sum);
    EXPECT_LE(r.degree_sum, g.size());
    EXPECT_GE(r.a, g.order() / 2);
  }
}

TEST(SumOfSetTest, Examples) {
  EXPECT_EQ(sum_of_set(VertexSet(), cycle_graph(7)), 0);
  EXPECT_EQ(sum_of_set(VertexSet::first_n(7), cycle_graph(7)), 14);
  EXPECT_EQ(sum_of_set(VertexSet::of({0}), star_graph(3)), 3);
  EXPECT_THROW(sum_of_set(VertexSet::of({5}), path_graph(3)), GraphError);
}

TEST(TotalDominationTest, Predicate) {
  EXPECT_TRUE(is_total_dominating(VertexSet::of({0, 1}), path_graph(2)));
  EXPECT_FALSE(is_total_dominating(VertexSet::of({0}), path_graph(2)));
  EXPECT_TRUE(is_total_dominating(VertexSet::of({1, 2}), path_graph(4)));
  EXPECT_FALSE(is_total_dominating(VertexSet::of({0, 3}), path_graph(4)));
  EXPECT_TRUE(is_total_dominating(VertexSet::of({0, 1}), star_graph(3)));
  EXPECT_FALSE(is_total_dominating(VertexSet::of({0}), star_graph(3)));
  EXPECT_FALSE(is_total_dominating(VertexSet(), path_graph(2)));
}

TEST(TotalDominationTest, Examples) {
  EXPECT_EQ(total_domination_number(cycle_graph(3)).gamma_t, 2);
  EXPECT_EQ(total_domination_number(cycle_graph(7)).gamma_t, 4);
  EXPECT_EQ(total_domination_number(path_graph(2)).gamma_t, 2);
  EXPECT_EQ(total_domination_number(path_graph(3)).gamma_t, 2);
  EXPECT_EQ(total_domination_number(path_graph(6)).gamma_t, 4);
  EXPECT_EQ(total_domination_number(path_graph(7)).gamma_t, 4);
  EXPECT_EQ(total_domination_oracle(star_graph(3)).gamma_t, 2);
  EXPECT_EQ(total_domination_number(complete_graph(10)).gamma_t, 2);
}

TEST(TotalDominationTest, Undefined) {
  EXPECT_THROW(total_domination_number(Graph(1)), UndefinedInvariant);
  EXPECT_THROW(total_domination_number(Graph(3)), UndefinedInvariant);
  EXPECT_THROW(total_domination_number(Graph::from_edges(4, {{0, 1}, {2, 3}})), UndefinedInvariant);
  EXPECT_THROW(total_domination_oracle(Graph::from_edges(3, {{0, 1}})), UndefinedInvariant);
  EXPECT_THROW(total_domination_oracle(path_graph(21)), std::length_error);
}

void expect_minimum(const Graph& g, const DomResult& r) {
  ASSERT_TRUE(is_total_dominating(r.witness, g)) << write_graph6(g);
  ASSERT_EQ(r.witness.size(), r.gamma_t);
  for (int v : r.witness) {
    EXPECT_FALSE(is_total_dominating(r.witness - VertexSet::singleton(v), g));
  }
}

TEST(TotalDominationTest, AgreesWithOracleOnSmallGraphs) {
  std::function<CanonicalForm(const Graph&)> key = [](const Graph& g) { return canonical_form(g); };
  int checked = 0;
  for (const Graph& g : oracle::graphs_by_extension<CanonicalForm>(7, key)) {
    if (!oracle::connected(g)) continue;
    const DomResult fast = total_domination_number(g);
    const DomResult slow = total_domination_oracle(g);
    ASSERT_EQ(fast.gamma_t, slow.gamma_t) << write_graph6(g);
    expect_minimum(g, fast);
    ++checked;
  }
  EXPECT_EQ(checked, 853);
}

TEST(TotalDominationTest, AgreesWithOracleOnRandomGraphs) {
  Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_connected_graph(rng, uniform_int(rng, 2, 18), uniform_int(rng, 0, 4) / 10.0);
    ASSERT_EQ(total_domination_number(g).gamma_t, total_domination_oracle(g).gamma_t) << write_graph6(g);
  }
}

TEST(TotalDominationTest, LargeSparseGraphs) {
  Rng rng(4);
  for (int i = 0; i < 10; ++i) {
    const Graph g = random_connected_graph(rng, 64, 0.02);
    const DomResult r = total_domination_number(g);
    expect_minimum(g, r);
    EXPECT_LE(3 * r.gamma_t, 2 * g.order());
  }
}

}  // namespace
}  // namespace tdom
