#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sptab/errors.hpp"
#include "sptab/partition.hpp"

namespace sptab {

/// Cell position, 1-based as (row, column).
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

enum class Direction { raise, lower };

/// Semistandard Young tableau with positive integer entries.
class SSYT {
public:
  using Row = std::vector<int>;

  SSYT() = default;
  explicit SSYT(std::vector<Row> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    validate();
  }
  SSYT(std::initializer_list<Row> rows) : SSYT(std::vector<Row>(rows)) {}

  const std::vector<Row>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }

  Partition shape() const {
    std::vector<int> p;
    for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
    return Partition(std::move(p));
  }

  int size() const { return shape().size(); }

  int at(Cell c) const {
    return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
  }

  int max_entry() const {
    int best = 0;
    for (const auto& r : rows_)
      if (!r.empty()) best = std::max(best, r.back());
    return best;
  }

  /// Multiset of entries: content[v] = number of v's (index 0 unused).
  std::vector<int> content(int max_value) const {
    std::vector<int> c(static_cast<std::size_t>(max_value + 1), 0);
    for (const auto& r : rows_)
      for (int v : r) ++c[static_cast<std::size_t>(v)];
    return c;
  }

  friend bool operator==(const SSYT&, const SSYT&) = default;
  friend auto operator<=>(const SSYT& a, const SSYT& b) { return a.rows_ <=> b.rows_; }

  // Unchecked access for the insertion algorithms below.
  std::vector<Row>& raw_rows() { return rows_; }

private:
  void validate() const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r > 0 && rows_[r].size() > rows_[r - 1].size())
        throw invalid_object("ssyt: shape is not a partition");
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        if (rows_[r][c] < 1) throw invalid_object("ssyt: entries must be positive");
        if (c > 0 && rows_[r][c - 1] > rows_[r][c]) throw invalid_object("ssyt: row not weakly increasing");
        if (r > 0 && rows_[r - 1][c] >= rows_[r][c]) throw invalid_object("ssyt: column not strictly increasing");
      }
    }
  }

  std::vector<Row> rows_;
};

/// Schensted row insertion; returns the new tableau and the cell that was added.
inline std::pair<SSYT, Cell> row_insert(SSYT t, int x) {
  auto& rows = t.raw_rows();
  std::size_t r = 0;
  while (true) {
    if (r == rows.size()) {
      rows.push_back({x});
      return {std::move(t), Cell{static_cast<int>(r) + 1, 1}};
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {std::move(t), Cell{static_cast<int>(r) + 1, static_cast<int>(row.size())}};
    }
    std::swap(*it, x);
    ++r;
  }
}

/// Inverse of row_insert: removes the entry at the removable corner and
/// bumps it back up, returning the tableau and the ejected first-row value.
inline std::pair<SSYT, int> reverse_row_insert(SSYT t, Cell corner) {
  auto& rows = t.raw_rows();
  const int nrows = static_cast<int>(rows.size());
  if (corner.row < 1 || corner.row > nrows) throw precondition_error("reverse_row_insert: not a corner");
  auto& crow = rows[static_cast<std::size_t>(corner.row - 1)];
  if (corner.col != static_cast<int>(crow.size()) ||
      (corner.row < nrows && rows[static_cast<std::size_t>(corner.row)].size() >= crow.size()))
    throw precondition_error("reverse_row_insert: not a corner");
  int y = crow.back();
  crow.pop_back();
  if (crow.empty()) rows.pop_back();
  for (int r = corner.row - 2; r >= 0; --r) {
    auto& row = rows[static_cast<std::size_t>(r)];
    // rightmost entry strictly smaller than y
    auto it = std::lower_bound(row.begin(), row.end(), y);
    if (it == row.begin()) throw precondition_error("reverse_row_insert: tableau is not semistandard");
    --it;
    std::swap(*it, y);
  }
  return {std::move(t), y};
}

/// Column insertion: x displaces the smallest entry >= x in the current column,
/// and the displaced entry moves on to the next column. Returns the added cell.
inline std::pair<SSYT, Cell> column_insert(SSYT t, int x) {
  auto& rows = t.raw_rows();
  std::size_t c = 0;
  while (true) {
    std::size_t r = 0;
    while (r < rows.size() && rows[r].size() > c && rows[r][c] < x) ++r;
    if (r == rows.size() || rows[r].size() <= c) {
      if (r == rows.size()) rows.emplace_back();
      rows[r].push_back(x);
      return {std::move(t), Cell{static_cast<int>(r) + 1, static_cast<int>(c) + 1}};
    }
    std::swap(rows[r][c], x);
    ++c;
  }
}

/// Inverse of column_insert at the given corner; returns the ejected value.
inline std::pair<SSYT, int> reverse_column_insert(SSYT t, Cell corner) {
  auto& rows = t.raw_rows();
  const int nrows = static_cast<int>(rows.size());
  if (corner.row < 1 || corner.row > nrows) throw precondition_error("reverse_column_insert: not a corner");
  auto& crow = rows[static_cast<std::size_t>(corner.row - 1)];
  if (corner.col != static_cast<int>(crow.size()) ||
      (corner.row < nrows && rows[static_cast<std::size_t>(corner.row)].size() >= crow.size()))
    throw precondition_error("reverse_column_insert: not a corner");
  int y = crow.back();
  crow.pop_back();
  if (crow.empty()) rows.pop_back();
  for (int c = corner.col - 2; c >= 0; --c) {
    // largest entry <= y in column c
    std::size_t r = 0;
    while (r + 1 < rows.size() && rows[r + 1].size() > static_cast<std::size_t>(c) &&
           rows[r + 1][static_cast<std::size_t>(c)] <= y)
      ++r;
    std::swap(rows[r][static_cast<std::size_t>(c)], y);
  }
  return {std::move(t), y};
}

/// Removes the rightmost occurrence of the largest entry.
inline SSYT delete_largest(SSYT t) {
  int v = t.max_entry();
  if (v == 0) throw precondition_error("delete_largest: empty tableau");
  auto& rows = t.raw_rows();
  // v occupies a horizontal strip; its rightmost copy is in the topmost row that holds v.
  for (auto& row : rows) {
    if (!row.empty() && row.back() == v) {
      row.pop_back();
      break;
    }
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return SSYT(std::move(rows));
}

/// Row reading word: rows top to bottom, each read right to left. Entries carry their cell.
inline std::vector<std::pair<int, Cell>> reading_word(const SSYT& t) {
  std::vector<std::pair<int, Cell>> w;
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = rows[r].size(); c-- > 0;)
      w.push_back({rows[r][c], Cell{static_cast<int>(r) + 1, static_cast<int>(c) + 1}});
  return w;
}

struct Signature {
  std::vector<Cell> unpaired_upper;  // unpaired i+1 in reading order
  std::vector<Cell> unpaired_lower;  // unpaired i in reading order
};

/// Cancels adjacent (i, i+1) pairs in the reading word; the residue reads (i+1)...(i+1) i...i.
inline Signature signature(const SSYT& t, int i) {
  Signature s;
  std::vector<Cell> open;
  for (const auto& [v, cell] : reading_word(t)) {
    if (v == i) {
      open.push_back(cell);
    } else if (v == i + 1) {
      if (!open.empty())
        open.pop_back();
      else
        s.unpaired_upper.push_back(cell);
    }
  }
  s.unpaired_lower = std::move(open);
  return s;
}

/// Type A Kashiwara operator e_i (raise) or f_i (lower); nullopt when it vanishes.
inline std::optional<SSYT> ssyt_op(const SSYT& t, int i, Direction dir) {
  if (i < 1) throw precondition_error("ssyt_op: index must be positive");
  Signature s = signature(t, i);
  std::vector<SSYT::Row> rows = t.rows();
  if (dir == Direction::raise) {
    if (s.unpaired_upper.empty()) return std::nullopt;
    Cell c = s.unpaired_upper.back();
    rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = i;
  } else {
    if (s.unpaired_lower.empty()) return std::nullopt;
    Cell c = s.unpaired_lower.front();
    rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = i + 1;
  }
  return SSYT(std::move(rows));
}

inline int ssyt_epsilon(const SSYT& t, int i) { return static_cast<int>(signature(t, i).unpaired_upper.size()); }
inline int ssyt_phi(const SSYT& t, int i) { return static_cast<int>(signature(t, i).unpaired_lower.size()); }

/// One row per line, entries separated by spaces; the empty tableau prints as `-`.
inline std::string to_string(const SSYT& t) {
  if (t.empty()) return "-\n";
  std::string s;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) s += ' ';
      s += std::to_string(row[c]);
    }
    s += '\n';
  }
  return s;
}

} // namespace sptab
