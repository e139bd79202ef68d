#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sptab/crystal.hpp"
#include "sptab/crystal_graph.hpp"

using namespace sptab;

namespace {

std::vector<int> all_indices(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

CrystalGraph<SSOT> ssot_graph(const Partition& outside, int m, int g) {
  return crystal_graph(
      enumerate_ssot(Partition{}, outside, m, g), all_indices(m),
      [g](const SSOT& t, int i, Direction d) { return ssot_op(t, i, d, g); },
      [g, m](const SSOT& t) { return ssot_weights(t, g, m).cwt; });
}

std::string label(const SSOT& t) { return to_string(t); }

} // namespace

TEST(CrystalGraph, SingleStripIsAChain) {
  // SSOT_1 with one strip: (), (1 1b), each weight differs by 2e_1
  auto g = ssot_graph(Partition{}, 1, 1);
  ASSERT_EQ(g.size(), 2);
  EXPECT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(component_count(g), 1);
  auto hw = highest_weight_vertices(g);
  ASSERT_EQ(hw.size(), 1u);
  EXPECT_EQ(to_string(g.vertices[static_cast<std::size_t>(hw[0])]), "()");
  EXPECT_EQ(g.epsilon(hw[0], 0), 0);
  EXPECT_EQ(g.phi(hw[0], 0), 1);
}

TEST(CrystalGraph, VectorRepresentationOfRankTwo) {
  // mu = (1) in 2 x 1: SSOT_1((1), 2) is the 4-dimensional standard crystal
  Partition mu{1};
  auto g = ssot_graph(rect_complement(mu, 2, 1), 2, 1);
  EXPECT_EQ(g.size(), 4);
  EXPECT_EQ(component_count(g), 1);
  auto d = decompose(g);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(dominant_to_partition(d.begin()->first), mu);
}

TEST(CrystalGraph, ColumnOfHeightTwo) {
  Partition mu{1, 1};
  auto g = ssot_graph(rect_complement(mu, 2, 1), 2, 1);
  EXPECT_EQ(g.size(), 5);
  EXPECT_EQ(component_count(g), 1);
}

// Each SSOT_g(mu-hat, m) is connected with a unique highest weight element whose
// strips are k repeated mu-hat_k times, and the weights are those of K(mu, m).
TEST(CrystalGraph, HighestWeightElements) {
  for (int m = 1; m <= 3; ++m)
    for (int g = 1; g <= 3; ++g)
      for (const auto& mu : partitions_in_box(m, g)) {
        const Partition hat = rect_complement(mu, m, g);
        auto cg = ssot_graph(hat, m, g);
        ASSERT_EQ(cg.size(), oracle::sp_dimension(mu, m)) << to_string(mu);
        EXPECT_EQ(component_count(cg), 1) << to_string(mu);
        auto hw = highest_weight_vertices(cg);
        ASSERT_EQ(hw.size(), 1u) << to_string(mu);
        std::vector<SignedWord> want;
        for (int k = 1; k <= m; ++k) want.push_back(SignedWord(static_cast<std::size_t>(hat[k - 1]), k));
        EXPECT_EQ(cg.vertices[static_cast<std::size_t>(hw[0])].row_sequence(m), want) << to_string(mu);
        EXPECT_EQ(dominant_to_partition(cg.weights[static_cast<std::size_t>(hw[0])]), mu);

        std::vector<WeightVector> got = cg.weights, king;
        for (const auto& t : enumerate_king(mu, m)) king.push_back(king_weight(t));
        std::sort(got.begin(), got.end());
        std::sort(king.begin(), king.end());
        EXPECT_EQ(got, king) << to_string(mu);
      }
}

TEST(CrystalGraph, StembridgeOnFullSets) {
  for (int m = 2; m <= 3; ++m)
    for (int g = 1; g <= 2; ++g) {
      auto cg = ssot_graph(Partition{}, m, g);
      auto rep = stembridge_check(cg, label);
      // pairs of indices >= 1 exist only from rank 3 on
      if (m == 3) EXPECT_GT(rep.checks, 0);
      else EXPECT_EQ(rep.checks, 0);
      EXPECT_TRUE(rep.ok()) << (rep.violations.empty() ? "" : rep.violations.front());
    }
}

TEST(CrystalGraph, StembridgeOnSkewSets) {
  for (const auto& inside : partitions_in_box(2, 2)) {
    for (const auto& outside : partitions_in_box(2, 2)) {
      auto elems = enumerate_ssot(inside, outside, 3, 2);
      if (elems.empty()) continue;
      auto cg = crystal_graph(
          elems, {1, 2}, [](const SSOT& t, int i, Direction d) { return ssot_op(t, i, d, 2); },
          [](const SSOT& t) { return ssot_weights(t, 2, 3).cwt; });
      EXPECT_EQ(cg.size(), static_cast<int>(elems.size()));
      auto rep = stembridge_check(cg, label);
      EXPECT_TRUE(rep.ok()) << to_string(inside) << " " << to_string(outside) << ": " << rep.violations.front();
    }
  }
}

TEST(CrystalGraph, StembridgeDetectsBrokenOperators) {
  struct V {
    int id;
    auto operator<=>(const V&) const = default;
  };
  auto op = [](const V& v, int i, Direction d) -> std::optional<V> {
    // 0 -1-> 1 -2-> 2 and 0 -2-> 3: f_2 acts on 0 but no f_1 follows it
    if (d == Direction::lower) {
      if (v.id == 0 && i == 1) return V{1};
      if (v.id == 1 && i == 2) return V{2};
      if (v.id == 0 && i == 2) return V{3};
      return std::nullopt;
    }
    if (v.id == 1 && i == 1) return V{0};
    if (v.id == 2 && i == 2) return V{1};
    if (v.id == 3 && i == 2) return V{0};
    return std::nullopt;
  };
  auto wt = [](const V& v) {
    WeightVector w = WeightVector::zero(3);
    if (v.id == 1) w = w - simple_root(1, 3);
    if (v.id == 2) w = w - simple_root(1, 3) - simple_root(2, 3);
    if (v.id == 3) w = w - simple_root(2, 3);
    return w;
  };
  auto cg = crystal_graph(std::vector<V>{{0}}, {1, 2}, op, wt);
  auto rep = stembridge_check(cg, [](const V& v) { return std::to_string(v.id); });
  EXPECT_FALSE(rep.ok());
}

TEST(CrystalGraph, RejectsInconsistentOperators) {
  struct V {
    int id;
    auto operator<=>(const V&) const = default;
  };
  auto op = [](const V& v, int, Direction d) -> std::optional<V> {
    if (d == Direction::lower && v.id == 0) return V{1};
    return std::nullopt;  // raise never undoes the lowering
  };
  auto wt = [](const V& v) { return v.id == 0 ? WeightVector::zero(2) : WeightVector::zero(2) - simple_root(1, 2); };
  EXPECT_THROW(crystal_graph(std::vector<V>{{0}}, {1}, op, wt), precondition_error);
}

TEST(CrystalGraph, TextExports) {
  auto g = ssot_graph(Partition{}, 1, 1);
  EXPECT_EQ(to_adjacency(g, label), "() -0-> (1 1b)\n");
  std::string dot = to_dot(g, label);
  EXPECT_NE(dot.find("digraph crystal {"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n1 [label=\"0\"]"), std::string::npos);
  EXPECT_NE(dot.find("[label=\"(1 1b)\"]"), std::string::npos);
}
