#include <gtest/gtest.h>

#include <set>

#include "sptab/bijections.hpp"

using namespace sptab;

namespace {

KingTableau king_b() { return parse_king("2 2b\n3 3\n3b 4\n4 4b\n", 4); }
SSOT ssot_b() { return parse_ssot("(1 1)(2 2b)(1b)(1b)"); }
IntMatrix matrix_b() { return IntMatrix{{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}; }

WeightVector matrix_cwt(const IntMatrix& m, int g) {
  WeightVector w = WeightVector::zero(m.rows());
  for (int i = 0; i < m.rows(); ++i) w[i] = g - m.row_sum(i);
  return w;
}

}  // namespace

TEST(Psi, KnownTableau) {
  EXPECT_EQ(psi(king_b(), 2), ssot_b());
  EXPECT_EQ(psi_inverse(ssot_b(), 4, 2), king_b());
  EXPECT_EQ(ssot_weights(ssot_b(), 2, 4).cwt, king_weight(king_b()));
}

TEST(Psi, SmallCases) {
  for (int m = 1; m <= 3; ++m)
    for (int g = 1; g <= 3; ++g) {
      SSOT hw = psi(KingTableau({}, m), g);
      for (int i = 1; i <= m; ++i) EXPECT_EQ(hw.strip(i).word(), SignedWord(static_cast<std::size_t>(g), i));
      EXPECT_EQ(psi_inverse(hw, m, g), KingTableau({}, m));
    }
  EXPECT_EQ(psi(parse_king("1b", 1), 1), parse_ssot("(1 1b)"));
  EXPECT_EQ(psi_inverse(parse_ssot("(1 1b)"), 1, 1), parse_king("1b", 1));
  EXPECT_THROW(psi(parse_king("1 1", 1), 1), precondition_error);
  EXPECT_THROW(psi_inverse(parse_ssot("(1 1)"), 1, 1), invalid_object);
}

TEST(Psi, ExhaustiveRoundTrip) {
  for (int m = 1; m <= 3; ++m)
    for (int g = 1; g <= 3; ++g)
      for (const auto& mu : partitions_in_box(m, g)) {
        Partition hat = rect_complement(mu, m, g);
        auto ssots = enumerate_ssot(Partition{}, hat, m, g);
        std::set<SSOT> image;
        for (const auto& t : enumerate_king(mu, m)) {
          SSOT s = psi(t, g);
          EXPECT_EQ(s.outside(), hat);
          EXPECT_LE(s.columns(), g);
          EXPECT_EQ(ssot_weights(s, g, m).cwt, king_weight(t));
          EXPECT_EQ(psi_inverse(s, m, g), t);
          image.insert(s);
        }
        EXPECT_EQ(image, std::set<SSOT>(ssots.begin(), ssots.end()));
        for (const auto& s : ssots) EXPECT_EQ(psi(psi_inverse(s, m, g), g), s);
      }
}

TEST(Phi, KnownMatrix) {
  Involution w = phi_involution(ssot_b());
  EXPECT_EQ(to_string(w), "645231");
  EXPECT_EQ(phi(ssot_b(), 4), matrix_b());
  EXPECT_EQ(phi_inverse(matrix_b()), ssot_b());
  EXPECT_EQ(standardize(matrix_b()), w);
  EXPECT_EQ(rsk_column(matrix_b()).p, (SSYT{{1, 1, 2, 4}, {2, 3}}));
  EXPECT_EQ(matrix_cwt(matrix_b(), 2), (WeightVector{0, 0, 1, 1}));
}

TEST(Phi, SmallCases) {
  EXPECT_EQ(phi(SSOT{}, 3), IntMatrix(3, 3));
  EXPECT_EQ(phi_inverse(IntMatrix(3, 3)), SSOT{});
  EXPECT_EQ(phi(parse_ssot("(1 1b)"), 1), (IntMatrix{{2}}));
  EXPECT_EQ(phi_inverse(IntMatrix{{2}}), parse_ssot("(1 1b)"));
  EXPECT_THROW(phi(parse_ssot("(1)")), precondition_error);
  EXPECT_THROW(phi_inverse(IntMatrix{{1}}), invalid_object);
}

TEST(Phi, ExhaustiveRoundTrip) {
  for (int m = 1; m <= 3; ++m)
    for (int g = 1; g <= 2; ++g) {
      auto ssots = enumerate_ssot(Partition{}, Partition{}, m, g);
      std::set<IntMatrix> image;
      for (const auto& t : ssots) {
        IntMatrix mx = phi(t, m);
        ASSERT_TRUE(sym_even_check(mx));
        EXPECT_TRUE(phi_involution(t).valid());
        EXPECT_LE(c_index(mx), 2 * g);
        auto wt = t.weight(m);
        for (int i = 0; i < m; ++i) EXPECT_EQ(mx.row_sum(i), wt[static_cast<std::size_t>(i)]);
        EXPECT_EQ(matrix_cwt(mx, g), ssot_weights(t, g, m).cwt);
        EXPECT_EQ(phi_inverse(mx), t);
        image.insert(mx);
      }
      // the matrices with c <= 2g, which have row sums <= 2g
      std::size_t expected = 0;
      for (const auto& mx : sym_even_matrices(m, 2 * g)) {
        if (c_index(mx) > 2 * g) continue;
        ++expected;
        EXPECT_TRUE(image.count(mx)) << to_string(mx);
        EXPECT_EQ(phi(phi_inverse(mx), m), mx);
      }
      EXPECT_EQ(image.size(), expected);
      EXPECT_EQ(ssots.size(), expected);
    }
}

TEST(Phi, ColumnCorrespondence) {
  // c(T) <= g exactly when c(Phi(T)) <= 2g, over SSOT with a looser column bound
  for (int m = 1; m <= 3; ++m)
    for (int g = 1; g <= 2; ++g)
      for (const auto& t : enumerate_ssot(Partition{}, Partition{}, m, g + 1))
        EXPECT_EQ(t.columns() <= g, c_index(phi(t, m)) <= 2 * g) << to_string(t, m);
}

TEST(PvTrace, KnownTable) {
  PVTrace tr = pv_trace(matrix_b());
  EXPECT_EQ(tr.inverse_column_word, (std::vector<int>{1, 2, 1, 3, 2, 4}));
  std::vector<SSYT> p{SSYT{{1, 1, 2, 4}, {2, 3}}, SSYT{{1, 1, 2}, {2, 3}}, SSYT{{1, 1, 3}, {2}}, SSYT{{1, 1}, {2}},
                      SSYT{{1, 2}}, SSYT{{1}}, SSYT{}};
  std::vector<SSYT> v{SSYT{}, SSYT{{1}}, SSYT{{1, 1}}, SSYT{{1, 1}, {2}}, SSYT{{1, 2}}, SSYT{{1}}, SSYT{}};
  EXPECT_EQ(tr.p, p);
  EXPECT_EQ(tr.v, v);
}

TEST(PvTrace, DeletionCountOnTable) {
  PVTrace tr = pv_trace(matrix_b());
  const std::vector<int> deleted{6, 4, 2, 0, 0, 0, 0};
  for (std::size_t q = 0; q < deleted.size(); ++q) {
    SSYT cut = tr.p[q];
    for (int k = 0; k < deleted[q]; ++k) cut = delete_largest(cut);
    EXPECT_EQ(cut, tr.v[q]) << q;
  }
}

TEST(PvTrace, SmallCases) {
  PVTrace z = pv_trace(IntMatrix(2, 2));
  ASSERT_EQ(z.v.size(), 1u);
  EXPECT_TRUE(z.v[0].empty());
  PVTrace d = pv_trace(IntMatrix{{2}});
  std::vector<Partition> shapes;
  for (const auto& v : d.v) shapes.push_back(v.shape());
  EXPECT_EQ(shapes, (std::vector<Partition>{Partition{}, Partition{1}, Partition{}}));
}

TEST(PvTrace, ShapeChainsAndDeletionsOnCorpus) {
  for (int m = 1; m <= 3; ++m)
    for (int g = 1; g <= 2; ++g)
      for (const auto& t : enumerate_ssot(Partition{}, Partition{}, m, g)) {
        IntMatrix mx = phi(t, m);
        PVTrace tr = pv_trace(mx);
        auto chain = t.standardized_chain();
        const int n = static_cast<int>(chain.size()) - 1;
        ASSERT_EQ(static_cast<int>(tr.v.size()), n + 1);
        EXPECT_EQ(tr.p[0], rsk_column(mx).p);
        for (int q = 0; q <= n; ++q) {
          EXPECT_EQ(tr.v[static_cast<std::size_t>(q)].shape(), chain[static_cast<std::size_t>(q)]);
          // the table forces (n - q) - |lambda_q| deletions; n - q alone fails already at q = 1
          SSYT cut = tr.p[static_cast<std::size_t>(q)];
          for (int k = 0; k < n - q - chain[static_cast<std::size_t>(q)].size(); ++k) cut = delete_largest(cut);
          EXPECT_EQ(tr.v[static_cast<std::size_t>(q)], cut) << to_string(t, m) << " q=" << q;
        }
      }
}
