#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"

#include "tdom/canonical.hpp"
#include "tdom/composites.hpp"
#include "tdom/graph6.hpp"
#include "tdom/invariants.hpp"
#include "tdom/random.hpp"

namespace tdom {
namespace {

TEST(TriangulateTest, Examples) {
  EXPECT_EQ(triangulate(path_graph(2)), complete_graph(3));
  const Graph t = triangulate(path_graph(3));
  EXPECT_EQ(t.order(), 5);
  EXPECT_EQ(t.size(), 6);
  EXPECT_EQ(total_domination_number(t).gamma_t, 2);
  EXPECT_EQ(annihilation_number(t).a, 3);
  const Graph c = triangulate(cycle_graph(3));
  EXPECT_EQ(c.order(), 6);
  EXPECT_EQ(c.size(), 9);
  // Apex 3 belongs to edge 0-1, the first in lexicographic order.
  EXPECT_TRUE(t.has_edge(3, 0));
  EXPECT_TRUE(t.has_edge(3, 1));
}

TEST(DoubleTest, Examples) {
  const Graph d = double_graph(path_graph(2));
  EXPECT_EQ(write_graph6(d), "Cl");
  EXPECT_TRUE(are_isomorphic(d, cycle_graph(4)));
  EXPECT_TRUE(d.has_edge(0, 3));
  EXPECT_TRUE(d.has_edge(1, 2));
}

TEST(BijectionTest, Examples) {
  const Graph b = bijection_graph(path_graph(2), path_graph(2), BijectionSpec::identity(2));
  EXPECT_TRUE(are_isomorphic(b, cycle_graph(4)));
  const Graph twisted = bijection_graph(path_graph(2), path_graph(2), BijectionSpec({1, 0}));
  EXPECT_TRUE(are_isomorphic(twisted, cycle_graph(4)));
  EXPECT_THROW(BijectionSpec({0, 0}), GraphError);
  EXPECT_THROW(BijectionSpec({0, 2}), GraphError);
  EXPECT_THROW(bijection_graph(path_graph(2), path_graph(3), BijectionSpec::identity(2)), GraphError);
  const BijectionSpec f({2, 0, 1});
  EXPECT_EQ(f.inverse().image(), (std::vector<int>{1, 2, 0}));
}

TEST(MycielskianTest, Examples) {
  const Graph m = mycielskian(path_graph(2));
  EXPECT_TRUE(are_isomorphic(m, cycle_graph(5)));
  EXPECT_TRUE(m.has_edge(4, 2));
  EXPECT_TRUE(m.has_edge(4, 3));
  // The Grötzsch graph.
  const Graph g = mycielskian(cycle_graph(5));
  EXPECT_EQ(g.order(), 11);
  EXPECT_EQ(g.size(), 20);
  EXPECT_EQ(girth(g), 4);
}

TEST(IdentifyTest, Examples) {
  EXPECT_TRUE(are_isomorphic(universally_identify(path_graph(3), 2, path_graph(2), 0), path_graph(4)));
  const Graph g = universally_identify(path_graph(2), 1, star_graph(3), 0);
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.degree(1), 4);
  EXPECT_THROW(universally_identify(path_graph(2), 1, path_graph(3), 0), GraphError);
  EXPECT_THROW(universally_identify(path_graph(2), 2, path_graph(2), 0), GraphError);
}

TEST(IdentifyTest, OrderThreshold) {
  EXPECT_EQ(identify_order_threshold(1), 3);
  EXPECT_EQ(identify_order_threshold(3), 3);
  EXPECT_EQ(identify_order_threshold(4), 4);
  EXPECT_EQ(identify_order_threshold(12), 6);
  EXPECT_TRUE(meets_identify_order_bound(12, 6));
  EXPECT_FALSE(meets_identify_order_bound(12, 5));
  for (int n = 1; n <= 64; ++n) {
    EXPECT_TRUE(meets_identify_order_bound(n, identify_order_threshold(n)));
    EXPECT_FALSE(meets_identify_order_bound(n, identify_order_threshold(n) - 1));
    EXPECT_GE(3 * identify_order_threshold(n), n + 6);
    EXPECT_LT(3 * (identify_order_threshold(n) - 1), n + 6);
  }
}

TEST(CompositeTest, SizeIdentities) {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const int n = uniform_int(rng, 2, 12);
    const Graph g = random_connected_graph(rng, n, 0.3);
    const int m = g.size();
    const Graph t = triangulate(g);
    EXPECT_EQ(t.order(), n + m);
    EXPECT_EQ(t.size(), 3 * m);
    const Graph d = double_graph(g);
    EXPECT_EQ(d.order(), 2 * n);
    EXPECT_EQ(d.size(), 4 * m);
    const Graph h = random_connected_graph(rng, n, 0.3);
    const Graph b = bijection_graph(g, h, BijectionSpec(random_permutation(rng, n)));
    EXPECT_EQ(b.order(), 2 * n);
    EXPECT_EQ(b.size(), m + h.size() + n);
    const Graph my = mycielskian(g);
    EXPECT_EQ(my.order(), 2 * n + 1);
    EXPECT_EQ(my.size(), 3 * m + n);
    const Graph star = star_graph(uniform_int(rng, 1, 10));
    const Graph u = universally_identify(g, uniform_int(rng, 0, n - 1), star, 0);
    EXPECT_EQ(u.order(), n + star.order() - 1);
    EXPECT_EQ(u.size(), m + star.size());
  }
}

TEST(CompositeTest, SizeCap) {
  EXPECT_THROW(triangulate(complete_graph(12)), SizeCapExceeded);
  EXPECT_THROW(double_graph(path_graph(33)), SizeCapExceeded);
  EXPECT_THROW(mycielskian(path_graph(32)), SizeCapExceeded);
  EXPECT_NO_THROW(mycielskian(path_graph(31)));
}

TEST(DoubleTest, DominationDoesNotGrow) {
  EXPECT_EQ(annihilation_number(double_graph(path_graph(2))).a, 2);
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_connected_graph(rng, uniform_int(rng, 2, 12), uniform_int(rng, 0, 5) / 10.0);
    const Graph d = double_graph(g);
    ASSERT_LE(total_domination_number(d).gamma_t, total_domination_number(g).gamma_t) << write_graph6(g);
    EXPECT_LE(total_domination_number(d).gamma_t, annihilation_number(d).a + 1);
  }
}

TEST(BijectionTest, ProofBounds) {
  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const int n = uniform_int(rng, 2, 12);
    const Graph g = random_connected_graph(rng, n, uniform_int(rng, 0, 5) / 10.0);
    const Graph h = random_connected_graph(rng, n, uniform_int(rng, 0, 5) / 10.0);
    const Graph b = bijection_graph(g, h, BijectionSpec(random_permutation(rng, n)));
    const int gt = total_domination_number(b).gamma_t;
    const int a = annihilation_number(b).a;
    EXPECT_LE(gt, n);
    if (g.size() >= h.size()) EXPECT_GE(a, n);
    EXPECT_LE(gt, a + 1);
  }
}

TEST(MycielskianTest, DominationGrowsByExactlyOne) {
  auto check = [](const Graph& g) {
    const Graph m = mycielskian(g);
    ASSERT_EQ(total_domination_number(m).gamma_t, total_domination_number(g).gamma_t + 1) << write_graph6(g);
    ASSERT_GE(annihilation_number(m).a, annihilation_number(g).a + 1) << write_graph6(g);
  };
  // Every connected graph on up to 8 vertices, then random ones on 9 and 10.
  std::function<CanonicalForm(const Graph&)> key = [](const Graph& g) { return canonical_form(g); };
  std::vector<Graph> all = oracle::graphs_by_extension<CanonicalForm>(8, key);
  for (int n = 2; n <= 7; ++n) {
    std::vector<Graph> smaller = oracle::graphs_by_extension<CanonicalForm>(n, key);
    all.insert(all.end(), smaller.begin(), smaller.end());
  }
  int checked = 0;
  for (const Graph& g : all) {
    if (!oracle::connected(g)) continue;
    check(g);
    ++checked;
  }
  EXPECT_EQ(checked, 1 + 2 + 6 + 21 + 112 + 853 + 11117);
  Rng rng(47);
  for (int i = 0; i < 500; ++i) {
    check(random_connected_graph(rng, uniform_int(rng, 9, 10), uniform_int(rng, 0, 6) / 10.0));
  }
}

TEST(IdentifyTest, SizeConditionPairsSatisfyBound) {
  Rng rng(53);
  int sampled = 0;
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_connected_graph(rng, uniform_int(rng, 2, 12), uniform_int(rng, 0, 5) / 10.0);
    const int k = uniform_int(rng, 1, 14);
    GraphBuilder b(k);
    for (int x = 1; x < k; ++x) b.add_edge(0, x);
    for (int x = 1; x < k; ++x) {
      for (int y = x + 1; y < k; ++y) {
        if (uniform_int(rng, 0, 2) == 0) b.add_edge(x, y);
      }
    }
    const Graph h = b.build();
    if (!meets_identify_order_bound(g.order(), h.order())) continue;
    const Graph u = universally_identify(g, uniform_int(rng, 0, g.order() - 1), h, 0);
    EXPECT_LE(total_domination_number(u).gamma_t, annihilation_number(u).a + 1) << write_graph6(u);
    ++sampled;
  }
  EXPECT_GT(sampled, 50);
}

TEST(CutVertexTest, GeneratedInstancesMeetHypothesis) {
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const int side = uniform_int(rng, 1, 8);
    const int delta = std::max(side + 1, (side + 24) / 3 + 1);
    const Graph g = cut_vertex_instance(rng, side, delta);
    ASSERT_TRUE(meets_cut_vertex_hypothesis(g)) << write_graph6(g);
    EXPECT_EQ(g.order(), side + delta);
    EXPECT_EQ(g.max_degree(), delta);
  }
  EXPECT_FALSE(meets_cut_vertex_hypothesis(cycle_graph(8)));
  EXPECT_FALSE(meets_cut_vertex_hypothesis(path_graph(8)));
}

}  // namespace
}  // namespace tdom
