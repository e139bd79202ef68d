#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "sptab/king.hpp"
#include "sptab/oscillating.hpp"

using namespace sptab;

namespace {

SSOT ssot_a() { return parse_ssot("(1 1b)(1 1 1b)(2 1 2b)(2 1)"); }

/// Every weakly decreasing signed word over rows 1..rows of length <= max_len
/// that replays from `inside` through partitions with at most g columns.
std::vector<SignedWord> brute_words(const Partition& inside, int g, int rows, int max_len) {
  std::vector<int> letters;
  for (int r = rows; r >= 1; --r) letters.push_back(r);
  for (int r = 1; r <= rows; ++r) letters.push_back(-r);
  std::vector<SignedWord> out;
  SignedWord cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    Partition p = inside;
    bool ok = p.columns() <= g;
    for (int r : cur) {
      if (!ok) break;
      try {
        p = r > 0 ? p.add_box(r - 1) : p.remove_box(-r - 1);
      } catch (const invalid_object&) {
        ok = false;
      }
      ok = ok && p.columns() <= g;
    }
    if (!ok) return;
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (std::size_t k = from; k < letters.size(); ++k) {
      cur.push_back(letters[k]);
      self(self, k);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Partition replay(const Partition& inside, const SignedWord& w) {
  Partition p = inside;
  for (int r : w) p = r > 0 ? p.add_box(r - 1) : p.remove_box(-r - 1);
  return p;
}

/// Number of SSOT from `inside` to `outside` with m strips, by brute-force words.
long long brute_ssot_count(const Partition& inside, const Partition& outside, int m, int g) {
  std::map<Partition, long long> layer{{inside, 1}};
  for (int k = 0; k < m; ++k) {
    std::map<Partition, long long> next;
    for (auto [p, c] : layer)
      for (const auto& w : brute_words(p, g, m + p.length(), 2 * g)) next[replay(p, w)] += c;
    layer = std::move(next);
  }
  return layer.count(outside) ? layer[outside] : 0;
}

}  // namespace

TEST(OscStrip, Construct) {
  OscStrip s(Partition{1}, {2, 1, -2});
  EXPECT_EQ(s.star(), (Partition{2, 1}));
  EXPECT_EQ(s.outside(), (Partition{2}));
  EXPECT_EQ(s.size(), 3);
  std::vector<Partition> chain{Partition{1}, Partition{1, 1}, Partition{2, 1}, Partition{2}};
  EXPECT_EQ(s.chain(), chain);

  OscStrip e(Partition{}, {});
  EXPECT_EQ(e.outside(), Partition{});
  EXPECT_EQ(e.size(), 0);

  EXPECT_THROW(OscStrip(Partition{}, {1, 2}), invalid_object);
  EXPECT_THROW(OscStrip(Partition{}, {-1}), invalid_object);
  EXPECT_THROW(OscStrip(Partition{}, {2}), invalid_object);
  EXPECT_THROW(OscStrip(Partition{1}, {0}), invalid_object);
}

TEST(OscStrip, FromShapesReplaysWord) {
  for (int g = 1; g <= 3; ++g)
    for (const auto& inside : partitions_in_box(3, g))
      for (const auto& s : strips_from(inside, g)) {
        EXPECT_TRUE(is_horizontal_strip(s.inside(), s.star()));
        EXPECT_TRUE(is_horizontal_strip(s.outside(), s.star()));
        EXPECT_EQ(OscStrip::from_shapes(s.inside(), s.star(), s.outside()), s);
      }
}

TEST(OscStrip, StripsFromMatchesBruteForce) {
  for (int g = 1; g <= 3; ++g)
    for (const auto& inside : partitions_in_box(3, g)) {
      std::set<SignedWord> fast, slow;
      for (const auto& s : strips_from(inside, g)) fast.insert(s.word());
      for (const auto& w : brute_words(inside, g, inside.length() + 1, 2 * g)) slow.insert(w);
      EXPECT_EQ(fast, slow) << to_string(inside) << " g=" << g;
    }
}

TEST(Ssot, RowSequenceAndWeights) {
  SSOT t = ssot_a();
  std::vector<SignedWord> rs{{1, -1}, {1, 1, -1}, {2, 1, -2}, {2, 1}};
  EXPECT_EQ(t.row_sequence(4), rs);
  auto w = ssot_weights(t, 3, 4);
  EXPECT_EQ(w.wt, (std::vector<int>{2, 3, 3, 2}));
  EXPECT_EQ(w.cwt, (WeightVector{1, 0, 0, 1}));
  EXPECT_EQ(t.strip(3).chain(), OscStrip(Partition{1}, {2, 1, -2}).chain());
  EXPECT_EQ(t.columns(), 3);
  EXPECT_THROW(ssot_weights(t, 2, 4), precondition_error);
}

TEST(Ssot, ClosedChainToEmpty) {
  SSOT t = parse_ssot("(1 1)(2 2b)(1b)(1b)");
  auto w = ssot_weights(t, 2, 4);
  EXPECT_EQ(w.wt, (std::vector<int>{2, 2, 1, 1}));
  EXPECT_EQ(w.cwt, (WeightVector{0, 0, 1, 1}));
  std::vector<Partition> chain{Partition{},     Partition{1},  Partition{2}, Partition{2, 1},
                               Partition{2},    Partition{1},  Partition{}};
  EXPECT_EQ(t.standardized_chain(), chain);
}

TEST(Ssot, EmptyAndPadding) {
  SSOT e;
  EXPECT_EQ(e.row_sequence(3), (std::vector<SignedWord>{{}, {}, {}}));
  auto w = ssot_weights(e, 2, 3);
  EXPECT_EQ(w.wt, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(w.cwt, (WeightVector{2, 2, 2}));
  EXPECT_EQ(parse_ssot("(1 1b)()()"), parse_ssot("(1 1b)"));
  EXPECT_EQ(to_string(parse_ssot("(1 1b)"), 3), "(1 1b)()()");
}

TEST(Ssot, TextForms) {
  EXPECT_EQ(to_string(ssot_a()), "(1 1b)(1 1 1b)(2 1 2b)(2 1)");
  SSOT skew = parse_ssot("[1](1 1b)");
  EXPECT_EQ(skew.inside(), (Partition{1}));
  EXPECT_EQ(skew.outside(), (Partition{1}));
  EXPECT_EQ(to_string(skew), "[1](1 1b)");
  EXPECT_THROW(parse_ssot("[1](2 1b)"), invalid_object);
  EXPECT_THROW(parse_ssot("(1 2)"), invalid_object);
  EXPECT_THROW(parse_ssot("(1 x)"), invalid_object);
  EXPECT_THROW(parse_ssot("(1"), invalid_object);
  EXPECT_THROW(parse_ssot("(0)"), invalid_object);
}

TEST(Ssot, ChainingIsChecked) {
  std::vector<OscStrip> bad{OscStrip(Partition{}, {1}), OscStrip(Partition{}, {1})};
  EXPECT_THROW(SSOT(Partition{}, bad), invalid_object);
}

TEST(Ssot, EnumerationSmall) {
  auto a = enumerate_ssot(Partition{}, Partition{}, 1, 1);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(to_string(a[0], 1), "()");
  EXPECT_EQ(to_string(a[1], 1), "(1 1b)");
  auto b = enumerate_ssot(Partition{}, Partition{1}, 1, 1);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(to_string(b[0], 1), "(1)");
  EXPECT_EQ(enumerate_ssot(Partition{}, Partition{}, 2, 1).size(), 5u);
}

TEST(Ssot, EnumerationWithWeight) {
  auto all = enumerate_ssot(Partition{}, Partition{}, 3, 2);
  std::map<std::vector<int>, std::size_t> by_weight;
  for (const auto& t : all) ++by_weight[t.weight(3)];
  for (auto [w, n] : by_weight) EXPECT_EQ(enumerate_ssot(Partition{}, Partition{}, 3, 2, w).size(), n);
  EXPECT_TRUE(enumerate_ssot(Partition{}, Partition{}, 2, 2, std::vector<int>{1, 0, 1}).empty());
}

TEST(Ssot, EnumerationMatchesBruteForceAndKing) {
  for (int m = 1; m <= 3; ++m)
    for (int g = 1; g <= 3; ++g)
      for (const auto& mu : partitions_in_box(m, g)) {
        Partition hat = rect_complement(mu, m, g);
        auto all = enumerate_ssot(Partition{}, hat, m, g);
        EXPECT_EQ(all.size(), enumerate_king(mu, m).size()) << "m=" << m << " g=" << g << " mu=" << to_string(mu);
        EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
        if (m * g <= 4)
          EXPECT_EQ(static_cast<long long>(all.size()), brute_ssot_count(Partition{}, hat, m, g));
        for (const auto& t : all) {
          EXPECT_LE(t.columns(), g);
          EXPECT_EQ(parse_ssot(to_string(t, m)), t);
        }
      }
}

TEST(Ssot, SkewEnumerationMatchesBruteForce) {
  for (const auto& in : partitions_in_box(2, 2))
    for (const auto& out : partitions_in_box(2, 2))
      EXPECT_EQ(static_cast<long long>(enumerate_ssot(in, out, 2, 2).size()), brute_ssot_count(in, out, 2, 2))
          << to_string(in) << " -> " << to_string(out);
}
