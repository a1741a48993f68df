#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "evencycles/connectivity.hpp"
#include "evencycles/errors.hpp"
#include "evencycles/finder.hpp"
#include "evencycles/generators.hpp"
#include "evencycles/oracle.hpp"
#include "test_oracles.hpp"

using namespace evencycles;
using testoracle::from_edges;

namespace {

Graph named(Family f, std::vector<int> p = {}) { return gen_named({f, std::move(p), 0}); }

Cycle ring(int len) {
  Cycle c;
  for (int i = 0; i < len; ++i) c.vertices.push_back(i);
  return c;
}

// Generalized Petersen graph GP(n, k): outer ring 0..n-1, inner star polygon n..2n-1.
Graph generalized_petersen(int n, int k) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    es.emplace_back(i, (i + 1) % n);
    es.emplace_back(i, n + i);
    es.emplace_back(n + i, n + (i + k) % n);
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return Graph(2 * n, es);
}

// The conditions of a stabilized cycle, checked directly.
void expect_stable(const Graph& g, const std::vector<Vertex>& avoid, const Cycle& c) {
  ASSERT_FALSE(cycle_defect(g, c));
  EXPECT_EQ(c.length() % 2, 0);
  for (Vertex v : avoid) EXPECT_FALSE(c.contains(v));
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!c.contains(v)) rest.push_back(v);
  }
  EXPECT_TRUE(is_connected(induced_subgraph(g, rest).graph));
  if (c.length() < 6) return;
  std::vector<std::pair<int, int>> found;
  for (int i = 0; i < c.length(); ++i) {
    for (int j = i + 2; j < c.length(); ++j) {
      if (i == 0 && j == c.length() - 1) continue;
      if (g.has_edge(c.vertices[static_cast<std::size_t>(i)], c.vertices[static_cast<std::size_t>(j)])) {
        found.emplace_back(i, j);
      }
    }
  }
  EXPECT_LE(found.size(), 1u);
  for (auto [i, j] : found) EXPECT_EQ((j - i) % 2, 0) << "chord splits the cycle into odd arcs";
}

void expect_oracle_pair(const Graph& g, const CyclePairCertificate& cert) {
  EXPECT_TRUE(validate(cert, g));
  const auto spectrum = testoracle::hamiltonian_spectrum(g);
  EXPECT_TRUE(spectrum.contains(cert.shorter.length()));
  EXPECT_TRUE(spectrum.contains(cert.longer.length()));
}

std::vector<Graph> random_three_connected(std::uint64_t seed, int count, int lo, int hi) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    const double p = 0.3 + 0.4 * static_cast<double>(rng() % 1000) / 1000.0;
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (static_cast<double>(rng() % 1000) / 1000.0 < p) es.emplace_back(u, v);
      }
    }
    Graph g(n, es);
    if (is_three_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST(QuasiDiagonalTest, KnownExamples) {
  const auto c4 = quasi_diagonal(ring(4));
  ASSERT_EQ(c4.components.size(), 1u);
  EXPECT_EQ(c4.components[0].size(), 4u);
  const auto c6 = quasi_diagonal(ring(6));
  ASSERT_EQ(c6.components.size(), 2u);
  for (const auto& comp : c6.components) {
    ASSERT_EQ(comp.size(), 3u);
    for (Vertex v : comp) EXPECT_EQ(v % 2, comp.front() % 2);
  }
  // Length divisible by four: the auxiliary graph is one cycle.
  const auto c8 = quasi_diagonal(ring(8));
  ASSERT_EQ(c8.components.size(), 1u);
  EXPECT_EQ(c8.components[0].size(), 8u);
  EXPECT_THROW(quasi_diagonal(ring(5)), InputError);
}

TEST(QuasiDiagonalTest, StructureForEveryEvenLengthUpToTwenty) {
  for (int len = 4; len <= 20; len += 2) {
    const Cycle c = ring(len);
    const auto qd = quasi_diagonal(c);
    for (Vertex v = 0; v < len; ++v) {
      std::set<Vertex> want;
      for (Vertex u = 0; u < len; ++u) {
        const int arc = ((u - v) % len + len) % len;
        if (arc == len / 2 - 1 || arc == len / 2 + 1) want.insert(u);
      }
      const auto& got = qd.partners(v);
      EXPECT_EQ((std::set<Vertex>{got[0], got[1]}), want) << "len " << len << " vertex " << v;
      for (Vertex u = 0; u < len; ++u) EXPECT_EQ(quasi_diagonal_pair(c, v, u), want.contains(u));
    }
    if (len % 4 == 0) {
      ASSERT_EQ(qd.components.size(), 1u);
      EXPECT_EQ(static_cast<int>(qd.components[0].size()), len);
    } else {
      ASSERT_EQ(qd.components.size(), 2u);
      for (const auto& comp : qd.components) {
        EXPECT_EQ(static_cast<int>(comp.size()), len / 2);
        EXPECT_EQ(comp.size() % 2, 1u);
      }
    }
    for (const auto& comp : qd.components) {
      for (std::size_t i = 0; i < comp.size(); ++i) {
        EXPECT_TRUE(quasi_diagonal_pair(c, comp[i], comp[(i + 1) % comp.size()]));
      }
    }
  }
}

TEST(StabilizeTest, KnownExamples) {
  const Graph k33 = named(Family::CompleteBipartite, {3, 3});
  const std::vector<Vertex> edge{0, 3};
  const Cycle c1 = stabilize_even_cycle(k33, edge);
  EXPECT_EQ(c1.length(), 4);
  expect_stable(k33, edge, c1);

  const Graph k6 = named(Family::Complete, {6});
  const std::vector<Vertex> one{0};
  expect_stable(k6, one, stabilize_even_cycle(k6, one));

  const Graph p = named(Family::Petersen);
  const std::vector<Vertex> inner{5, 6, 7, 8, 9};
  EXPECT_THROW(stabilize_even_cycle(p, inner), HypothesisFailure);
  const std::vector<Vertex> spoke{0, 5};
  expect_stable(p, spoke, stabilize_even_cycle(p, spoke));
}

TEST(StabilizeTest, PostconditionsOnRandomThreeConnectedGraphs) {
  std::mt19937_64 rng(11);
  for (const Graph& g : random_three_connected(5, 150, 6, 11)) {
    const Vertex start = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.order()));
    std::vector<Vertex> avoid{start};
    if (rng() % 2) avoid.push_back(g.neighbors(start).front());
    std::sort(avoid.begin(), avoid.end());
    try {
      expect_stable(g, avoid, stabilize_even_cycle(g, avoid));
    } catch (const HypothesisFailure&) {
      std::vector<Vertex> rest;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (!std::binary_search(avoid.begin(), avoid.end(), v)) rest.push_back(v);
      }
      EXPECT_FALSE(find_even_cycle(induced_subgraph(g, rest).graph).has_value());
    }
  }
}

TEST(CombineTest, KnownExamples) {
  // C4 on 0..3, triangle on 4..6, connectors 0-4 and 1-5.
  const Graph g = from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 4}, {0, 4}, {1, 5}});
  const std::vector<Path> connectors{Path{{0, 4}}, Path{{1, 5}}};
  const auto cert = combine_quasi_diagonal(g, Cycle{{0, 1, 2, 3}}, Cycle{{4, 5, 6}}, connectors);
  EXPECT_TRUE(validate(cert, g));
  EXPECT_EQ(cert.shorter.length(), 4);
  EXPECT_EQ(cert.longer.length(), 6);

  // C8 on 0..7 and a 5-cycle sharing 0; the connector leaves 3, quasi-diagonal with 0.
  const Graph h = from_edges(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0},
                                  {0, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 0}, {3, 9}});
  const std::vector<Path> one{Path{{3, 9}}};
  const auto shared = combine_quasi_diagonal(h, ring(8), Cycle{{0, 8, 9, 10, 11}}, one);
  EXPECT_TRUE(validate(shared, h));
  EXPECT_EQ(shared.shorter.length() % 2, 0);

  // Opposite vertices of a 4-cycle are not quasi-diagonal.
  const Graph bad = from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 4}, {0, 4}, {2, 5}});
  const std::vector<Path> across{Path{{0, 4}}, Path{{2, 5}}};
  EXPECT_THROW(combine_quasi_diagonal(bad, Cycle{{0, 1, 2, 3}}, Cycle{{4, 5, 6}}, across), InputError);
}

TEST(DisjointOddEvenTest, KnownExamples) {
  // K3,3 on 0..5 plus a triangle 6..8 joined by three edges.
  const Graph g = from_edges(9, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                                 {6, 7}, {7, 8}, {8, 6}, {0, 6}, {1, 7}, {3, 8}});
  ASSERT_TRUE(is_three_connected(g));
  expect_oracle_pair(g, pair_from_disjoint_odd_even(g, Cycle{{6, 7, 8}}));

  // K6 minus a triangle is a triangle, so the precondition fails; K7 leaves a K4.
  const Graph k6 = named(Family::Complete, {6});
  EXPECT_THROW(pair_from_disjoint_odd_even(k6, Cycle{{0, 1, 2}}), HypothesisFailure);
  const Graph k7 = named(Family::Complete, {7});
  const auto k7_pair = pair_from_disjoint_odd_even(k7, Cycle{{0, 1, 2}});
  expect_oracle_pair(k7, k7_pair);
  EXPECT_EQ(k7_pair.shorter.length(), 4);

  // Likewise the triangular prism has no even cycle beside a triangle.
  const Graph prism = named(Family::Prism, {3});
  EXPECT_THROW(pair_from_disjoint_odd_even(prism, Cycle{{0, 1, 2}}), HypothesisFailure);
  const Graph prism4 = named(Family::Prism, {4});
  const Graph bigger = prism4.with_edge(0, 2);
  expect_oracle_pair(bigger, pair_from_disjoint_odd_even(bigger, Cycle{{0, 1, 2}}));
}

TEST(SharedVertexTest, KnownExamples) {
  // Wheel on a 5-rim: hub 0, rim 1..5.
  const Graph w = named(Family::Wheel, {5});
  const auto cert = pair_from_shared_vertex(w, Cycle{{0, 1, 2, 3}}, Cycle{{0, 4, 5}}, 0);
  expect_oracle_pair(w, cert);
  EXPECT_EQ(cert.shorter.length(), 4);
  EXPECT_EQ(cert.longer.length(), 6);

  const Graph k6 = named(Family::Complete, {6});
  expect_oracle_pair(k6, pair_from_shared_vertex(k6, Cycle{{0, 1, 2, 3}}, Cycle{{0, 4, 5}}, 0));
  EXPECT_THROW(pair_from_shared_vertex(k6, Cycle{{0, 1, 2, 3}}, Cycle{{0, 1, 4}}, 0), InputError);
}

TEST(TwoDisjointOddTest, KnownExamples) {
  const Graph prism = named(Family::Prism, {3});
  const auto p = pair_from_two_disjoint_odd(prism);
  expect_oracle_pair(prism, p);
  EXPECT_EQ(p.shorter.length(), 4);

  const Graph petersen = named(Family::Petersen);
  const auto q = pair_from_two_disjoint_odd(petersen);
  expect_oracle_pair(petersen, q);
  EXPECT_EQ(q.shorter.length(), 6);
  EXPECT_EQ(q.longer.length(), 8);

  const Graph durer = generalized_petersen(6, 2);
  ASSERT_TRUE(is_three_connected(durer));
  expect_oracle_pair(durer, pair_from_two_disjoint_odd(durer));

  EXPECT_THROW(pair_from_two_disjoint_odd(named(Family::Complete, {5})), HypothesisFailure);
}

TEST(ThreeConnectedTest, KnownExamples) {
  const auto k33 = three_connected_pair(named(Family::CompleteBipartite, {3, 3}));
  EXPECT_EQ(k33.shorter.length(), 4);
  EXPECT_EQ(k33.longer.length(), 6);
  const Graph p = named(Family::Petersen);
  const auto pc = three_connected_pair(p);
  expect_oracle_pair(p, pc);
  EXPECT_EQ(pc.shorter.length(), 6);
  const Graph k6 = named(Family::Complete, {6});
  expect_oracle_pair(k6, three_connected_pair(k6));
  EXPECT_THROW(three_connected_pair(named(Family::Complete, {5})), HypothesisFailure);
  EXPECT_THROW(three_connected_pair(named(Family::Cycle, {7})), HypothesisFailure);
}

TEST(ThreeConnectedTest, AgreesWithOracleOnEnumeratedAndRandomGraphs) {
  std::vector<Graph> corpus;
  for (int n = 6; n <= 8; ++n) {
    auto gs = enumerate_small(n, {.three_connected = true});
    corpus.insert(corpus.end(), gs.begin(), gs.end());
  }
  for (Graph& g : random_three_connected(17, 200, 9, 12)) corpus.push_back(std::move(g));
  for (const Graph& g : corpus) {
    const auto cert = three_connected_pair(g);
    expect_oracle_pair(g, cert);
    EXPECT_EQ(three_connected_pair(g), cert) << "not deterministic";
  }
}

TEST(ThreeConnectedTest, MobiusKantor) {
  // GP(8, 3) is cubic and bipartite on 16 vertices.
  const Graph g = generalized_petersen(8, 3);
  ASSERT_TRUE(is_three_connected(g));
  const auto cert = three_connected_pair(g);
  EXPECT_TRUE(validate(cert, g));
  EXPECT_TRUE(cycle_spectrum(g, 16).has(cert.longer.length()));
  EXPECT_EQ(cert.shorter.length() % 2, 0);
}

TEST(TwoPathsTest, KnownExamples) {
  const Graph k5 = named(Family::Complete, {5}).without_edge(0, 1);
  const auto a = two_paths_diff_two(k5, 0, 1);
  EXPECT_TRUE(validate(a, k5));
  EXPECT_EQ(a.shorter.length(), 2);
  EXPECT_EQ(a.longer.length(), 4);

  // K3,4 with the large side 3..6.
  const Graph k34 = named(Family::CompleteBipartite, {3, 4});
  const auto b = two_paths_diff_two(k34, 3, 4);
  EXPECT_TRUE(validate(b, k34));
  EXPECT_EQ(b.shorter.length(), 2);
  EXPECT_EQ(b.longer.length(), 4);

  const Graph c6 = named(Family::Cycle, {6});
  const auto report = two_paths_hypotheses(c6, 0, 3);
  ASSERT_TRUE(report.has_value());
  EXPECT_EQ(report->hypothesis, "min-degree-3");
  EXPECT_THROW(two_paths_diff_two(c6, 0, 3), HypothesisFailure);
}

TEST(TwoPathsTest, ExhaustiveUpToSevenVertices) {
  int checked = 0;
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : enumerate_small(n, {.connected = true})) {
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
          if (two_paths_hypotheses(g, x, y)) continue;
          ++checked;
          const auto cert = two_paths_diff_two(g, x, y);
          ASSERT_TRUE(validate(cert, g));
          const auto lens = testoracle::xy_lengths(g.without_edge(x, y), x, y);
          EXPECT_TRUE(lens.contains(cert.shorter.length()));
          EXPECT_TRUE(lens.contains(cert.longer.length()));
        }
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(MainTheoremTest, KnownExamples) {
  const Graph k5 = named(Family::Complete, {5});
  const auto k5_out = main_theorem(k5);
  ASSERT_TRUE(std::holds_alternative<K5BlockWitness>(k5_out));
  const auto& w = std::get<K5BlockWitness>(k5_out);
  EXPECT_FALSE(k5_witness_defect(k5, w));
  EXPECT_TRUE(w.order_is_one_mod_four);
  EXPECT_EQ(w.block_is_k5, (std::vector<bool>{true}));

  const auto k6_out = main_theorem(named(Family::Complete, {6}));
  ASSERT_TRUE(std::holds_alternative<CyclePairCertificate>(k6_out));
  EXPECT_EQ(std::get<CyclePairCertificate>(k6_out).shorter.length(), 4);

  const Graph tree = gen_k5_block_tree(2, 0);
  EXPECT_EQ(tree.order(), 9);
  EXPECT_EQ(tree.size(), 20);
  const auto tree_out = main_theorem(tree);
  ASSERT_TRUE(std::holds_alternative<K5BlockWitness>(tree_out));
  EXPECT_FALSE(k5_witness_defect(tree, std::get<K5BlockWitness>(tree_out)));

  const auto sparse = main_theorem(named(Family::Cycle, {6}));
  ASSERT_TRUE(std::holds_alternative<HypothesisFailureReport>(sparse));
  EXPECT_EQ(std::get<HypothesisFailureReport>(sparse).hypothesis, "density-5(n-1)/2");
}

TEST(MainTheoremTest, BlockTreesWithAnExtraEdge) {
  for (int blocks = 2; blocks <= 5; ++blocks) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Graph tree = gen_k5_block_tree(blocks, seed);
      const auto out = main_theorem(tree);
      ASSERT_TRUE(std::holds_alternative<K5BlockWitness>(out));
      EXPECT_FALSE(k5_witness_defect(tree, std::get<K5BlockWitness>(out)));
      // Any missing edge breaks the exception.
      for (Vertex v = 1; v < tree.order(); ++v) {
        if (tree.has_edge(0, v)) continue;
        const Graph plus = tree.with_edge(0, v);
        const auto more = main_theorem(plus);
        ASSERT_TRUE(std::holds_alternative<CyclePairCertificate>(more));
        EXPECT_TRUE(validate(std::get<CyclePairCertificate>(more), plus));
        break;
      }
    }
  }
}

TEST(MainTheoremTest, DeterministicOutcomes) {
  Graph g = generalized_petersen(6, 2);
  for (Vertex v = 0; v < 6; ++v) g = g.with_edge(v, (v + 2) % 6).with_edge(6 + v, 6 + (v + 1) % 6);
  ASSERT_GE(2 * g.size(), 5 * (g.order() - 1));
  const auto a = main_theorem(g);
  const auto b = main_theorem(g);
  ASSERT_TRUE(std::holds_alternative<CyclePairCertificate>(a));
  EXPECT_EQ(std::get<CyclePairCertificate>(a), std::get<CyclePairCertificate>(b));
}

TEST(TwoModFourTest, KnownExamples) {
  EXPECT_EQ(cycle_two_mod_four(named(Family::Complete, {6})).length(), 6);
  const Graph k7 = named(Family::Complete, {7});
  const Cycle c = cycle_two_mod_four(k7);
  EXPECT_EQ(c.length(), 6);
  EXPECT_FALSE(cycle_defect(k7, c));
  EXPECT_THROW(cycle_two_mod_four(named(Family::Complete, {5})), HypothesisFailure);
}

TEST(TwoModFourTest, DenseSmallGraphsAgreeWithOracle) {
  int checked = 0;
  for (int n = 5; n <= 8; ++n) {
    for (const Graph& g : enumerate_small(n)) {
      if (2 * g.size() < 5 * n) continue;
      ++checked;
      const Cycle c = cycle_two_mod_four(g);
      EXPECT_FALSE(cycle_defect(g, c));
      EXPECT_EQ(c.length() % 4, 2);
      EXPECT_TRUE(cycle_mod_residue(g, 2, 4).has_value());
    }
  }
  EXPECT_GT(checked, 0);
}
