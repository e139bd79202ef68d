#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sptab/errors.hpp"
#include "sptab/ssyt.hpp"

namespace sptab {

/// Dense matrix of nonnegative integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), 0) {
    if (rows < 0 || cols < 0) throw invalid_object("matrix: negative dimension");
  }
  IntMatrix(std::initializer_list<std::initializer_list<int>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    for (const auto& row : init) {
      if (static_cast<int>(row.size()) != cols_) throw invalid_object("matrix: ragged rows");
      for (int v : row) {
        if (v < 0) throw invalid_object("matrix: negative entry");
        a_.push_back(v);
      }
    }
  }

  static IntMatrix square(int n) { return IntMatrix(n, n); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int operator()(int i, int j) const { return a_[index(i, j)]; }
  int& operator()(int i, int j) { return a_[index(i, j)]; }

  /// 1-based accessors matching the usual m_{ij} notation.
  int at1(int i, int j) const { return (*this)(i - 1, j - 1); }

  int row_sum(int i) const {
    int s = 0;
    for (int j = 0; j < cols_; ++j) s += (*this)(i, j);
    return s;
  }
  int col_sum(int j) const {
    int s = 0;
    for (int i = 0; i < rows_; ++i) s += (*this)(i, j);
    return s;
  }
  int total() const {
    int s = 0;
    for (int v : a_) s += v;
    return s;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.a_ <=> b.a_;
  }

private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> a_;
};

/// Biword (i_r, j_r) with top entries weakly increasing and, within equal tops,
/// bottoms weakly decreasing.
struct TwoLineArray {
  std::vector<std::pair<int, int>> columns;

  std::vector<int> top() const {
    std::vector<int> t;
    for (auto [i, j] : columns) t.push_back(i);
    return t;
  }
  std::vector<int> bottom() const {
    std::vector<int> b;
    for (auto [i, j] : columns) b.push_back(j);
    return b;
  }
  bool is_canonical() const {
    for (std::size_t r = 1; r < columns.size(); ++r) {
      auto [i0, j0] = columns[r - 1];
      auto [i1, j1] = columns[r];
      if (i0 > i1 || (i0 == i1 && j0 < j1)) return false;
    }
    return true;
  }
  friend bool operator==(const TwoLineArray&, const TwoLineArray&) = default;
};

inline TwoLineArray two_line_array(const IntMatrix& m) {
  TwoLineArray w;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = m.cols() - 1; j >= 0; --j)
      for (int k = 0; k < m(i, j); ++k) w.columns.push_back({i + 1, j + 1});
  return w;
}

inline IntMatrix matrix_from_array(const TwoLineArray& w, int rows, int cols) {
  IntMatrix m(rows, cols);
  for (auto [i, j] : w.columns) {
    if (i < 1 || i > rows || j < 1 || j > cols) throw invalid_object("two-line array: entry outside the matrix");
    ++m(i - 1, j - 1);
  }
  return m;
}

struct RskPair {
  SSYT p;
  SSYT q;
  friend bool operator==(const RskPair&, const RskPair&) = default;
};

/// Column RSK: P = (j_l -> ... (j_2 -> j_1)) by column insertion, Q records i_r.
inline RskPair rsk_column(const IntMatrix& m) {
  SSYT p, q;
  for (auto [i, j] : two_line_array(m).columns) {
    auto [np, cell] = column_insert(std::move(p), j);
    p = std::move(np);
    auto rows = q.rows();
    if (static_cast<int>(rows.size()) < cell.row) rows.emplace_back();
    rows[static_cast<std::size_t>(cell.row - 1)].push_back(i);
    q = SSYT(std::move(rows));
  }
  return {std::move(p), std::move(q)};
}

/// Inverse of rsk_column. The largest recording letter occupies a horizontal
/// strip; its cells are un-inserted right to left, which yields the bottoms of
/// that block in weakly decreasing order read left to right.
inline IntMatrix rsk_column_inverse(const SSYT& p, const SSYT& q, int rows, int cols) {
  if (p.shape() != q.shape()) throw precondition_error("rsk_column_inverse: shape mismatch");
  SSYT cur = p;
  std::vector<std::vector<int>> qrows = q.rows();
  std::vector<std::pair<int, int>> rev;
  while (!qrows.empty()) {
    int v = 0;
    for (const auto& r : qrows)
      if (!r.empty()) v = std::max(v, r.back());
    // rightmost cell holding v: the longest row ending in v
    std::size_t best = qrows.size();
    for (std::size_t r = 0; r < qrows.size(); ++r)
      if (!qrows[r].empty() && qrows[r].back() == v && (best == qrows.size() || qrows[r].size() > qrows[best].size()))
        best = r;
    Cell corner{static_cast<int>(best) + 1, static_cast<int>(qrows[best].size())};
    auto [np, ejected] = reverse_column_insert(std::move(cur), corner);
    cur = std::move(np);
    rev.push_back({v, ejected});
    qrows[best].pop_back();
    while (!qrows.empty() && qrows.back().empty()) qrows.pop_back();
  }
  TwoLineArray w;
  w.columns.assign(rev.rbegin(), rev.rend());
  if (!w.is_canonical()) throw precondition_error("rsk_column_inverse: pair is not in the image of column RSK");
  return matrix_from_array(w, rows, cols);
}

inline IntMatrix rsk_column_inverse(const SSYT& p, const SSYT& q) {
  return rsk_column_inverse(p, q, q.max_entry(), p.max_entry());
}

/// Number of columns of P(M).
inline int c_index(const IntMatrix& m) {
  SSYT p = rsk_column(m).p;
  return p.empty() ? 0 : static_cast<int>(p.rows().front().size());
}

/// Membership in the symmetric, even-diagonal class.
inline bool sym_even_check(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw precondition_error("sym_even_check: matrix is not square");
  for (int i = 0; i < m.rows(); ++i) {
    if (m(i, i) % 2 != 0) return false;
    for (int j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) return false;
  }
  return true;
}

inline IntMatrix rotate180(const IntMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(m.rows() - 1 - i, m.cols() - 1 - j) = m(i, j);
  return r;
}

/// Inverse column word j_l ... j_1 of the two-line array.
inline std::vector<int> inverse_column_word(const IntMatrix& m) {
  auto b = two_line_array(m).bottom();
  return {b.rbegin(), b.rend()};
}

/// Recording tableau of row-inserting the inverse column word, where a letter
/// coming from row r of the matrix is recorded as rows+1-r.
inline SSYT inverse_word_recording(const IntMatrix& m) {
  auto w = two_line_array(m).columns;
  SSYT p, q;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto [np, cell] = row_insert(std::move(p), it->second);
    p = std::move(np);
    auto rows = q.rows();
    if (static_cast<int>(rows.size()) < cell.row) rows.emplace_back();
    rows[static_cast<std::size_t>(cell.row - 1)].push_back(m.rows() + 1 - it->first);
    q = SSYT(std::move(rows));
  }
  return q;
}

/// All rows x cols matrices with entry sum at most `max_total`.
inline std::vector<IntMatrix> matrices_up_to(int rows, int cols, int max_total) {
  std::vector<IntMatrix> out;
  IntMatrix cur(rows, cols);
  const int cells = rows * cols;
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == cells) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur(k / cols, k % cols) = v;
      self(self, k + 1, left - v);
    }
    cur(k / cols, k % cols) = 0;
  };
  rec(rec, 0, max_total);
  return out;
}

/// Symmetric n x n matrices with even diagonal and every row sum at most `max_row_sum`.
inline std::vector<IntMatrix> sym_even_matrices(int n, int max_row_sum) {
  std::vector<IntMatrix> out;
  IntMatrix cur(n, n);
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) slots.push_back({i, j});
  std::vector<int> sums(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == slots.size()) {
      out.push_back(cur);
      return;
    }
    auto [i, j] = slots[k];
    int step = i == j ? 2 : 1;
    for (int v = 0;; v += step) {
      int add_i = v, add_j = i == j ? 0 : v;
      if (sums[static_cast<std::size_t>(i)] + add_i > max_row_sum || sums[static_cast<std::size_t>(j)] + add_j > max_row_sum)
        break;
      cur(i, j) = v;
      cur(j, i) = v;
      sums[static_cast<std::size_t>(i)] += add_i;
      sums[static_cast<std::size_t>(j)] += add_j;
      self(self, k + 1);
      sums[static_cast<std::size_t>(i)] -= add_i;
      sums[static_cast<std::size_t>(j)] -= add_j;
    }
    cur(i, j) = 0;
    cur(j, i) = 0;
  };
  rec(rec, 0);
  return out;
}

/// Rows as comma-separated integers, one per line.
inline std::string to_string(const IntMatrix& m) {
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ',';
      s += std::to_string(m(i, j));
    }
    s += '\n';
  }
  return s;
}

inline IntMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string clean;
    for (char ch : line)
      if (ch != ' ' && ch != '\t' && ch != '\r') clean += ch;
    if (clean.empty()) continue;
    std::vector<int> row;
    std::stringstream ss(clean);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw invalid_object("matrix text: entries must be nonnegative integers");
      row.push_back(std::stoi(item));
    }
    rows.push_back(std::move(row));
  }
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows.front().size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw invalid_object("matrix text: ragged rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

/// Two whitespace-aligned lines.
inline std::string to_string(const TwoLineArray& w) {
  std::string top, bot;
  for (auto [i, j] : w.columns) {
    std::string a = std::to_string(i), b = std::to_string(j);
    std::size_t width = std::max(a.size(), b.size());
    if (!top.empty()) {
      top += ' ';
      bot += ' ';
    }
    top += std::string(width - a.size(), ' ') + a;
    bot += std::string(width - b.size(), ' ') + b;
  }
  return top + "\n" + bot + "\n";
}

} // namespace sptab
