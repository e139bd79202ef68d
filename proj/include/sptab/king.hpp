#pragma once

#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sptab/errors.hpp"
#include "sptab/partition.hpp"

namespace sptab {

/// Letter of the alphabet 1 < 1b < 2 < 2b < ...; +i encodes i and -i encodes ibar.
struct BarredLetter {
  int value = 1;

  constexpr BarredLetter() = default;
  constexpr explicit BarredLetter(int v) : value(v) {}

  constexpr int index() const { return value > 0 ? value : -value; }
  constexpr bool barred() const { return value < 0; }
  /// Position in the total order: rank(i) = 2i-1, rank(ibar) = 2i.
  constexpr int rank() const { return value > 0 ? 2 * value - 1 : -2 * value; }

  static constexpr BarredLetter from_rank(int r) {
    return BarredLetter(r % 2 == 1 ? (r + 1) / 2 : -(r / 2));
  }

  friend constexpr bool operator==(BarredLetter, BarredLetter) = default;
  friend constexpr auto operator<=>(BarredLetter a, BarredLetter b) { return a.rank() <=> b.rank(); }
};

inline std::string to_string(BarredLetter x) {
  return std::to_string(x.index()) + (x.barred() ? "b" : "");
}

inline BarredLetter parse_letter(std::string_view tok) {
  bool barred = !tok.empty() && tok.back() == 'b';
  if (barred) tok.remove_suffix(1);
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
    throw invalid_object("king letter: expected `i` or `ib`");
  int v = std::stoi(std::string(tok));
  if (v == 0) throw invalid_object("king letter: index must be positive");
  return BarredLetter(barred ? -v : v);
}

/// A filling over the barred alphabet with weakly increasing rows, strictly
/// increasing columns, and entries of row i at least i (symplectic condition).
class KingTableau {
public:
  using Row = std::vector<BarredLetter>;

  KingTableau() = default;

  KingTableau(std::vector<Row> rows, int m) : rows_(std::move(rows)), m_(m) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    validate();
  }

  const std::vector<Row>& rows() const { return rows_; }
  int rank() const { return m_; }

  Partition shape() const {
    std::vector<int> p;
    for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
    return Partition(std::move(p));
  }

  BarredLetter at(int row, int col) const {
    return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }

  /// Shape of the subtableau of entries whose rank is at most `max_rank`.
  Partition sub_shape(int max_rank) const {
    std::vector<int> p;
    for (const auto& r : rows_) {
      int n = 0;
      for (auto x : r)
        if (x.rank() <= max_rank) ++n;
      p.push_back(n);
    }
    return Partition(std::move(p));
  }

  friend bool operator==(const KingTableau&, const KingTableau&) = default;
  friend auto operator<=>(const KingTableau& a, const KingTableau& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    return a.reading_ranks() <=> b.reading_ranks();
  }

  /// Row-major reading of the letter ranks; used for canonical ordering.
  std::vector<int> reading_ranks() const {
    std::vector<int> w;
    for (const auto& r : rows_) {
      for (auto x : r) w.push_back(x.rank());
      w.push_back(0);
    }
    return w;
  }

private:
  void validate() const {
    if (m_ < 0) throw invalid_object("king tableau: negative rank");
    if (static_cast<int>(rows_.size()) > m_) throw invalid_object("king tableau: more than m rows");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r > 0 && rows_[r].size() > rows_[r - 1].size())
        throw invalid_object("king tableau: shape is not a partition");
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        BarredLetter x = rows_[r][c];
        if (x.value == 0 || x.index() > m_) throw invalid_object("king tableau: letter outside the alphabet");
        if (x.index() < static_cast<int>(r) + 1) throw invalid_object("king tableau: symplectic condition");
        if (c > 0 && rows_[r][c - 1] > x) throw invalid_object("king tableau: row not weakly increasing");
        if (r > 0 && !(rows_[r - 1][c] < x)) throw invalid_object("king tableau: column not strictly increasing");
      }
    }
  }

  std::vector<Row> rows_;
  int m_ = 0;
};

/// Crystal weight: coords[i-1] = #(i) - #(ibar).
inline WeightVector king_weight(const KingTableau& t) {
  WeightVector w = WeightVector::zero(t.rank());
  for (const auto& row : t.rows())
    for (auto x : row) w[x.index() - 1] += x.barred() ? -1 : 1;
  return w;
}

/// All King tableaux of shape `mu` for rank `m`, lexicographic in the row-major reading.
inline std::vector<KingTableau> enumerate_king(const Partition& mu, int m) {
  if (mu.length() > m) throw precondition_error("enumerate_king: shape has more than m rows");
  std::vector<KingTableau> out;
  std::vector<std::vector<int>> ranks(static_cast<std::size_t>(mu.length()));
  for (int r = 0; r < mu.length(); ++r) ranks[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(mu[r]), 0);

  auto emit = [&] {
    std::vector<KingTableau::Row> rows;
    for (const auto& rr : ranks) {
      KingTableau::Row row;
      for (int k : rr) row.push_back(BarredLetter::from_rank(k));
      rows.push_back(std::move(row));
    }
    out.emplace_back(std::move(rows), m);
  };

  auto fill = [&](auto&& self, int r, int c) -> void {
    if (r == mu.length()) {
      emit();
      return;
    }
    if (c == mu[r]) {
      self(self, r + 1, 0);
      return;
    }
    int lo = 2 * (r + 1) - 1;
    if (c > 0) lo = std::max(lo, ranks[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, ranks[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= 2 * m; ++v) {
      ranks[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      self(self, r, c + 1);
    }
  };
  fill(fill, 0, 0);
  return out;
}

/// One row per line, letters separated by spaces (`2 2b`). The empty tableau prints as `-`.
inline std::string to_string(const KingTableau& t) {
  if (t.rows().empty()) return "-\n";
  std::string s;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) s += ' ';
      s += to_string(row[c]);
    }
    s += '\n';
  }
  return s;
}

inline KingTableau parse_king(std::string_view text, int m) {
  std::vector<KingTableau::Row> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    KingTableau::Row row;
    while (ls >> tok) {
      if (tok == "-") continue;
      row.push_back(parse_letter(tok));
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return KingTableau(std::move(rows), m);
}

} // namespace sptab
