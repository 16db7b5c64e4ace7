#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wei/classifiers.hpp"

using namespace wei;

namespace {

std::vector<std::vector<Weight>> all_tuples(std::size_t n, Weight max_weight) {
  std::vector<std::vector<Weight>> out;
  std::vector<Weight> w(n, 1);
  for (;;) {
    out.push_back(w);
    std::size_t k = 0;
    while (k < n && w[k] == max_weight) w[k++] = 1;
    if (k == n) break;
    ++w[k];
  }
  return out;
}

WeightedGraph complete_graph(const std::vector<Weight>& weights, std::size_t n) {
  std::vector<RawEdge> edges;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({std::int64_t(i), std::int64_t(j), weights.at(k++)});
  return make_graph(n, edges);
}

std::string edges_text(const WeightedGraph& g) {
  std::string out;
  for (const auto& e : g.edges())
    out += g.vertex_name(e.u) + g.vertex_name(e.v) + ":" + std::to_string(e.w) + " ";
  return out;
}

}  // namespace

TEST(TriviallyWeighted, Examples) {
  EXPECT_TRUE(is_trivially_weighted(make_cycle({2, 2, 2})));
  EXPECT_FALSE(is_trivially_weighted(make_path({1, 2})));
  EXPECT_TRUE(is_trivially_weighted(make_path({5})));
  EXPECT_TRUE(is_trivially_weighted(make_graph(3, {})));
}

TEST(FamilyRecognition, Basics) {
  EXPECT_TRUE(is_cycle_graph(make_cycle({1, 2, 3, 4})));
  EXPECT_FALSE(is_cycle_graph(make_path({1, 2, 3})));
  EXPECT_TRUE(is_path_graph(make_path({1, 2, 3})));
  EXPECT_FALSE(is_path_graph(make_graph(1, {})));
  EXPECT_TRUE(is_tree_graph(make_graph(1, {})));
  EXPECT_TRUE(is_complete_graph(make_path({4})));
  // Two disjoint triangles: every vertex has degree 2 but the graph is not one cycle.
  auto two = make_graph(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
  EXPECT_FALSE(is_cycle_graph(two));
  EXPECT_EQ(cycle_weights(make_graph(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 0, 4}})), (std::vector<Weight>{1, 2, 3, 4}));
  EXPECT_EQ(path_weights(make_graph(4, {{2, 0, 7}, {0, 3, 8}, {3, 1, 9}})), (std::vector<Weight>{9, 8, 7}));
}

TEST(FiveCyclePattern, Predicate) {
  EXPECT_TRUE(satisfies_five_cycle_pattern(std::vector<Weight>{1, 2, 1, 2, 1}));
  EXPECT_TRUE(satisfies_five_cycle_pattern(std::vector<Weight>{2, 5, 3, 4, 2}));
  EXPECT_FALSE(satisfies_five_cycle_pattern(std::vector<Weight>{1, 2, 1, 2, 2}));  // e != a
  EXPECT_EQ(dihedral_orbit(std::vector<Weight>{1, 2, 3, 4, 5}).size(), 10u);
  EXPECT_TRUE(five_cycle_arrangement(std::vector<Weight>{2, 1, 2, 1, 1}).has_value());
}

TEST(ClassifyCycle, Examples) {
  auto v = classify_cycle(5, std::vector<Weight>{1, 2, 1, 2, 1});
  EXPECT_TRUE(v.unmixed);
  EXPECT_EQ(v.cohen_macaulay, CohenMacaulay::yes);
  EXPECT_EQ(v.certificate.arrangement.size(), 5u);

  std::vector<Weight> w{2, 2, 1, 1, 1};
  EXPECT_FALSE(oracle::unmixed(make_cycle(w)));
  v = classify_cycle(5, w);
  EXPECT_FALSE(v.unmixed);
  EXPECT_EQ(v.cohen_macaulay, CohenMacaulay::no);

  v = classify_cycle(4, std::vector<Weight>{1, 1, 1, 2});
  EXPECT_FALSE(v.unmixed);
  EXPECT_EQ(v.cohen_macaulay, CohenMacaulay::no);

  v = classify_cycle(4, std::vector<Weight>{3, 3, 3, 3});
  EXPECT_TRUE(v.unmixed);
  EXPECT_EQ(v.cohen_macaulay, CohenMacaulay::no);

  v = classify_cycle(3, std::vector<Weight>{1, 5, 2});
  EXPECT_TRUE(v.unmixed);
  EXPECT_EQ(v.cohen_macaulay, CohenMacaulay::yes);

  v = classify_cycle(6, std::vector<Weight>{1, 1, 1, 1, 1, 1});
  EXPECT_FALSE(v.unmixed);

  EXPECT_THROW(classify_cycle(5, std::vector<Weight>{1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(classify_cycle(2, std::vector<Weight>{1, 2}), std::invalid_argument);
}

TEST(ClassifyCycle, AgreesWithEnumeration) {
  for (std::size_t n = 3; n <= 7; ++n)
    for (const auto& w : all_tuples(n, 2))
      EXPECT_EQ(classify_cycle(n, w).unmixed, is_unmixed(make_cycle(w)).unmixed) << "n=" << n;
  for (const auto& w : all_tuples(5, 3)) EXPECT_EQ(classify_cycle(5, w).unmixed, is_unmixed(make_cycle(w)).unmixed);
}

TEST(ClassifyCycle, DihedralInvariance) {
  for (const auto& w : all_tuples(5, 3)) {
    auto base = classify_cycle(5, w);
    for (const auto& image : dihedral_orbit(w)) {
      auto v = classify_cycle(5, image);
      EXPECT_EQ(v.unmixed, base.unmixed);
      EXPECT_EQ(v.cohen_macaulay, base.cohen_macaulay);
    }
  }
}

TEST(ClassifyComplete, Examples) {
  auto v = classify_complete(complete_graph({4, 1, 7}, 3));
  EXPECT_TRUE(v.unmixed);
  EXPECT_EQ(v.cohen_macaulay, CohenMacaulay::yes);

  auto k4 = complete_graph({1, 2, 3, 4, 5, 6}, 4);
  for (const auto& c : enumerate_minimal_covers(k4)) EXPECT_EQ(c.cardinality(), 3u);
  EXPECT_TRUE(classify_complete(k4).unmixed);

  EXPECT_EQ(classify_complete(make_path({3})).cohen_macaulay, CohenMacaulay::yes);
  EXPECT_THROW(classify_complete(make_path({1, 1})), UnsupportedFamily);
}

TEST(ClassifyComplete, RandomWeightsHaveCoversOfSizeNMinusOne) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Weight> wd(1, 4);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int k = 0; k < 20; ++k) {
      std::vector<Weight> ws(n * (n - 1) / 2);
      for (auto& x : ws) x = wd(rng);
      auto g = complete_graph(ws, n);
      for (const auto& c : enumerate_minimal_covers(g)) EXPECT_EQ(c.cardinality(), n - 1);
    }
}

TEST(RecognizeSuspensions, Examples) {
  auto p4 = make_path({1, 1, 1});
  auto ds = recognize_suspensions(p4);
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].base_vertices, (VertexSet{1, 2}));
  EXPECT_EQ(ds[0].whisker_of(1), VertexIndex{0});
  EXPECT_EQ(ds[0].whisker_of(2), VertexIndex{3});

  auto tri = make_graph(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {1, 4, 1}, {2, 5, 1}});
  EXPECT_EQ(oracle::suspensions(tri).size(), 1u);
  EXPECT_EQ(recognize_suspensions(tri), oracle::suspensions(tri));

  EXPECT_EQ(recognize_suspensions(make_path({2})).size(), 2u);
  EXPECT_TRUE(recognize_suspensions(make_path({1, 1})).empty());
  EXPECT_TRUE(recognize_suspensions(make_cycle({1, 1, 1, 1})).empty());
}

TEST(RecognizeSuspensions, MatchesSubsetScanOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& shape : oracle::all_shapes(n)) {
      std::vector<RawEdge> edges;
      for (auto [u, v] : shape) edges.push_back({std::int64_t(u), std::int64_t(v), 1});
      auto g = make_graph(n, edges);
      EXPECT_EQ(recognize_suspensions(g), oracle::suspensions(g));
    }
}

TEST(ClassifySuspension, EdgeSuspension) {
  // w1 - v1 - v2 - w2 with whisker weights a, c and base weight b.
  auto layout = SuspensionDecomposition{{1, 2}, {{1, 0}, {2, 3}}};
  auto ok = classify_suspension(make_path({3, 1, 2}), layout);
  EXPECT_TRUE(ok.unmixed);
  EXPECT_EQ(ok.cohen_macaulay, CohenMacaulay::yes);
  auto bad = classify_suspension(make_path({1, 2, 3}), layout);
  EXPECT_FALSE(bad.unmixed);
  EXPECT_EQ(bad.cohen_macaulay, CohenMacaulay::no);
}

TEST(ClassifySuspension, PureWhiskersAreVacuous) {
  auto g = make_graph(4, {{0, 1, 5}, {2, 3, 1}});
  auto v = classify_suspension(g, SuspensionDecomposition{{0, 2}, {{0, 1}, {2, 3}}});
  EXPECT_TRUE(v.unmixed);
  EXPECT_EQ(v.cohen_macaulay, CohenMacaulay::yes);
}

TEST(ClassifySuspension, RejectsInvalidLayout) {
  auto g = make_path({1, 1, 1});
  EXPECT_THROW(classify_suspension(g, SuspensionDecomposition{{0, 3}, {{0, 1}, {3, 2}}}), std::invalid_argument);
  EXPECT_THROW(classify_suspension(make_cycle({1, 1, 1, 1})), UnsupportedFamily);
}

TEST(ClassifySuspension, ConditionMatchesEnumerationOnRandomSuspensions) {
  std::mt19937_64 rng(2026);
  for (int k = 0; k < 150; ++k) {
    SuspensionDecomposition layout;
    auto g = oracle::random_suspension(rng, 4, 3, &layout);
    EXPECT_EQ(classify_suspension(g, layout).unmixed, is_unmixed(g).unmixed) << edges_text(g);
  }
}

TEST(ClassifyTree, Examples) {
  EXPECT_EQ(classify_tree(make_path({9})).cohen_macaulay, CohenMacaulay::yes);
  EXPECT_EQ(classify_tree(make_graph(1, {})).cohen_macaulay, CohenMacaulay::yes);
  auto p3 = classify_tree(make_path({2, 5}));
  EXPECT_FALSE(p3.unmixed);
  EXPECT_EQ(p3.certificate.description, "no valid suspension structure");
  auto p4 = classify_tree(make_path({3, 1, 2}));
  EXPECT_TRUE(p4.unmixed);
  EXPECT_EQ(p4.cohen_macaulay, CohenMacaulay::yes);
  ASSERT_TRUE(p4.certificate.suspension);
  EXPECT_THROW(classify_tree(make_cycle({1, 1, 1})), UnsupportedFamily);
}

TEST(ClassifyTree, AgreesWithEnumerationOnAllSmallTrees) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& shape : oracle::labeled_trees(n))
      for (const auto& g : oracle::all_weightings(n, shape, 2))
        EXPECT_EQ(classify_tree(g).unmixed, is_unmixed(g).unmixed);
}

TEST(ClassifyPath, Examples) {
  EXPECT_EQ(classify_path(make_path({3, 1, 2})).cohen_macaulay, CohenMacaulay::yes);
  EXPECT_FALSE(classify_path(make_path({1, 2, 1})).unmixed);
  auto p4 = classify_path(make_path({1, 1, 1, 1}));
  EXPECT_FALSE(p4.unmixed);
  EXPECT_EQ(p4.cohen_macaulay, CohenMacaulay::no);
  EXPECT_TRUE(classify_path(make_path({4})).unmixed);
  EXPECT_THROW(classify_path(make_cycle({1, 1, 1})), UnsupportedFamily);
}

TEST(ClassifyPath, AgreesWithEnumeration) {
  for (std::size_t len = 1; len <= 5; ++len)
    for (const auto& w : all_tuples(len, 3)) EXPECT_EQ(classify_path(make_path(w)).unmixed, is_unmixed(make_path(w)).unmixed);
}

TEST(ClassifyAuto, Dispatch) {
  auto k3 = make_cycle({1, 2, 3});
  auto v = classify_auto(k3);
  EXPECT_EQ(v.family, Family::complete);
  auto as_cycle = classify_cycle(k3);
  EXPECT_EQ(v.unmixed, as_cycle.unmixed);
  EXPECT_EQ(v.cohen_macaulay, as_cycle.cohen_macaulay);

  EXPECT_EQ(classify_auto(make_cycle({1, 2, 1, 2, 1})).family, Family::cycle);
  EXPECT_EQ(classify_auto(make_path({1, 2})).family, Family::path);
  // Star with three leaves is a tree but not a path.
  EXPECT_EQ(classify_auto(make_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}})).family, Family::tree);
  auto tri = make_graph(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {1, 4, 1}, {2, 5, 1}});
  EXPECT_EQ(classify_auto(tri).family, Family::suspension);

  // Triangle with a pendant: no family applies.
  auto paw = make_graph(4, {{0, 1, 1}, {1, 2, 2}, {0, 2, 1}, {2, 3, 1}});
  auto pv = classify_auto(paw);
  EXPECT_EQ(pv.family, Family::general);
  EXPECT_EQ(pv.cohen_macaulay, CohenMacaulay::unknown);
  EXPECT_EQ(pv.unmixed, is_unmixed(paw).unmixed);
}

TEST(ClassifyAuto, CohenMacaulayImpliesUnmixedEverywhere) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& shape : oracle::all_shapes(n)) {
      if (shape.size() > 6) continue;
      for (const auto& g : oracle::all_weightings(n, shape, 2)) {
        auto v = classify_auto(g);
        if (v.cohen_macaulay == CohenMacaulay::yes) {
          EXPECT_TRUE(v.unmixed);
        }
        EXPECT_EQ(v.unmixed, is_unmixed(g).unmixed) << to_string(v.family);
      }
    }
}
