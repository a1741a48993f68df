#include <gtest/gtest.h>

#include <set>

#include "evencycles/connectivity.hpp"
#include "evencycles/errors.hpp"
#include "evencycles/generators.hpp"
#include "evencycles/oracle.hpp"
#include "test_oracles.hpp"

using namespace evencycles;
using testoracle::from_edges;

namespace {

Graph named(Family f, std::vector<int> p = {}) { return gen_named({f, std::move(p), 0}); }

std::set<int> lengths(const SpectrumReport& r) {
  std::set<int> out;
  for (const auto& [len, c] : r.representatives) out.insert(len);
  return out;
}

std::set<int> keys(const std::map<int, Path>& m) {
  std::set<int> out;
  for (const auto& [len, p] : m) out.insert(len);
  return out;
}

Graph cube() {
  return from_edges(8, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 5}, {5, 7}, {7, 6}, {6, 4},
                        {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

bool has_consecutive_even(const std::set<int>& s) {
  for (int len : s) {
    if (len % 2 == 0 && s.contains(len + 2)) return true;
  }
  return false;
}

}  // namespace

TEST(SpectrumTest, KnownExamples) {
  EXPECT_EQ(lengths(cycle_spectrum(named(Family::Complete, {5}))), (std::set<int>{3, 4, 5}));
  EXPECT_EQ(lengths(cycle_spectrum(named(Family::CompleteBipartite, {3, 3}))), (std::set<int>{4, 6}));
  const Graph p = named(Family::Petersen);
  EXPECT_EQ(lengths(cycle_spectrum(p)), (std::set<int>{5, 6, 8, 9}));
  EXPECT_EQ(lengths(cycle_spectrum(p)), testoracle::edge_subset_spectrum(p));
}

TEST(SpectrumTest, GuardIsEnforced) {
  EXPECT_THROW(cycle_spectrum(named(Family::Cycle, {15})), GuardExceeded);
  EXPECT_NO_THROW(cycle_spectrum(named(Family::Cycle, {15}), 15));
  EXPECT_THROW(find_consecutive_even_pair_bf(named(Family::Cycle, {15})), GuardExceeded);
  EXPECT_THROW(xy_path_lengths(named(Family::Cycle, {15}), 0, 1), GuardExceeded);
}

TEST(SpectrumTest, AgreesWithIndependentEnumeratorsUpToEight) {
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : enumerate_small(n)) {
      const auto report = cycle_spectrum(g);
      const auto got = lengths(report);
      ASSERT_EQ(got, testoracle::hamiltonian_spectrum(g));
      for (const auto& [len, c] : report.representatives) {
        EXPECT_EQ(c.length(), len);
        EXPECT_FALSE(cycle_defect(g, c));
      }
      if (n <= 7 || g.size() <= 14) {
        ASSERT_EQ(got, testoracle::edge_subset_spectrum(g));
      }
      const auto pair = find_consecutive_even_pair_bf(g);
      ASSERT_EQ(pair.has_value(), has_consecutive_even(got));
      if (pair) {
        EXPECT_TRUE(validate(*pair, g));
        int smallest = 0;
        for (int len : got) {
          if (len % 2 == 0 && got.contains(len + 2)) {
            smallest = len;
            break;
          }
        }
        EXPECT_EQ(pair->shorter.length(), smallest);
      }
    }
  }
}

TEST(ConsecutivePairTest, KnownExamples) {
  const auto k6 = find_consecutive_even_pair_bf(named(Family::Complete, {6}));
  ASSERT_TRUE(k6.has_value());
  EXPECT_EQ(k6->shorter.length(), 4);
  EXPECT_EQ(k6->longer.length(), 6);
  EXPECT_FALSE(find_consecutive_even_pair_bf(named(Family::Complete, {5})).has_value());
  const auto p = find_consecutive_even_pair_bf(named(Family::Petersen));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->shorter.length(), 6);
  EXPECT_EQ(p->longer.length(), 8);
}

TEST(PathLengthsTest, KnownExamples) {
  const Graph c4 = named(Family::Cycle, {4});
  EXPECT_EQ(keys(xy_path_lengths(c4, 0, 1)), (std::set<int>{1, 3}));
  EXPECT_EQ(keys(xy_path_lengths(c4, 0, 2)), (std::set<int>{2}));
  const Graph k5 = named(Family::Complete, {5}).without_edge(0, 1);
  EXPECT_EQ(keys(xy_path_lengths(k5, 0, 1)), (std::set<int>{2, 3, 4}));
  EXPECT_THROW(xy_path_lengths(c4, 2, 2), InputError);
}

TEST(PathLengthsTest, MatchesDepthFirstSearchAndIsSymmetric) {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_small(n, {.connected = true})) {
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
          const auto forward = xy_path_lengths(g, x, y);
          ASSERT_EQ(keys(forward), testoracle::xy_lengths(g, x, y));
          EXPECT_EQ(keys(forward), keys(xy_path_lengths(g, y, x)));
          EXPECT_EQ(forward.contains(1), g.has_edge(x, y));
          for (const auto& [len, p] : forward) {
            EXPECT_EQ(p.length(), len);
            EXPECT_FALSE(path_defect(g, p));
            EXPECT_EQ(p.front(), x);
            EXPECT_EQ(p.back(), y);
          }
        }
      }
    }
  }
}

TEST(BondyVinceTest, KnownExamples) {
  const auto k4 = bondy_vince_search(named(Family::Complete, {4}));
  ASSERT_TRUE(k4.has_value());
  EXPECT_EQ(k4->first.length(), 3);
  EXPECT_EQ(k4->second.length(), 4);
  EXPECT_FALSE(bondy_vince_search(named(Family::Cycle, {6})).has_value());
  const auto q3 = bondy_vince_search(cube());
  ASSERT_TRUE(q3.has_value());
  EXPECT_EQ(q3->first.length(), 4);
  EXPECT_EQ(q3->second.length(), 6);
}

TEST(BondyVinceTest, FindsANearPairWheneverOneExists) {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : enumerate_small(n)) {
      const auto spec = testoracle::edge_subset_spectrum(g);
      bool near = false;
      for (int len : spec) near = near || spec.contains(len + 1) || spec.contains(len + 2);
      const auto r = bondy_vince_search(g);
      ASSERT_EQ(r.has_value(), near);
      if (r) {
        EXPECT_TRUE(r->difference() == 1 || r->difference() == 2);
        EXPECT_FALSE(cycle_defect(g, r->first));
        EXPECT_FALSE(cycle_defect(g, r->second));
        if (has_consecutive_even(spec)) {
          EXPECT_EQ(r->difference(), 2);
          EXPECT_EQ(r->first.length() % 2, 0);
        }
      }
    }
  }
}

TEST(ModResidueTest, KnownExamples) {
  const auto k6 = cycle_mod_residue(named(Family::Complete, {6}), 2, 4);
  ASSERT_TRUE(k6.has_value());
  EXPECT_EQ(k6->length(), 6);
  EXPECT_FALSE(cycle_mod_residue(gen_k5_block_tree(3, 5), 2, 4).has_value());
  const auto p = cycle_mod_residue(named(Family::Petersen), 0, 4);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->length(), 8);
  EXPECT_THROW(cycle_mod_residue(named(Family::Petersen), 4, 4), InputError);
}

TEST(ModResidueTest, ShortestMatchingLength) {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : enumerate_small(n, {.connected = true})) {
      const auto spec = testoracle::edge_subset_spectrum(g);
      for (int m = 2; m <= 4; ++m) {
        for (int r = 0; r < m; ++r) {
          std::optional<int> want;
          for (int len : spec) {
            if (len % m == r) {
              want = len;
              break;
            }
          }
          const auto c = cycle_mod_residue(g, r, m);
          ASSERT_EQ(c.has_value(), want.has_value());
          if (c) {
            EXPECT_EQ(c->length(), *want);
            EXPECT_FALSE(cycle_defect(g, *c));
          }
        }
      }
    }
  }
}

TEST(ValidateTest, KnownExamples) {
  const Graph k6 = named(Family::Complete, {6});
  const CyclePairCertificate good{Cycle{{0, 1, 2, 3}}, Cycle{{0, 1, 2, 3, 4, 5}}};
  EXPECT_TRUE(validate(good, k6));

  const CyclePairCertificate odd{Cycle{{0, 1, 2, 3}}, Cycle{{0, 1, 2, 3, 4}}};
  const auto r1 = validate(odd, k6);
  EXPECT_FALSE(r1);
  EXPECT_EQ(r1.diagnosis.rfind("parity", 0), 0u);

  const Graph c8 = named(Family::Cycle, {8}).with_edge(0, 4);
  const PathPairCertificate far{0, 2, Path{{0, 1, 2}}, Path{{0, 7, 6, 5, 4, 3, 2}}};
  const auto r2 = validate(far, c8);
  EXPECT_FALSE(r2);
  EXPECT_EQ(r2.diagnosis.rfind("difference", 0), 0u);

  const CyclePairCertificate broken{Cycle{{0, 1, 2, 3}}, Cycle{{0, 2, 4, 6, 1, 3}}};
  const auto r3 = validate(broken, named(Family::Cycle, {8}).with_edge(0, 3));
  EXPECT_FALSE(r3);
  EXPECT_EQ(r3.diagnosis.rfind("cycle-invalid", 0), 0u);

  const PathPairCertificate edge{0, 1, Path{{0, 1}}, Path{{0, 2, 3, 1}}};
  EXPECT_FALSE(validate(edge, named(Family::Complete, {4})));
}
