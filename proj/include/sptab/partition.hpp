#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sptab/errors.hpp"

namespace sptab {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// trimmed on construction so that equal shapes compare equal.
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] < 0) throw invalid_object("partition: negative part");
      if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
        throw invalid_object("partition: parts not weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }

  /// Part in row `row` (0-based); zero past the end.
  int operator[](int row) const {
    return row >= 0 && row < length() ? parts_[static_cast<std::size_t>(row)] : 0;
  }

  /// Length of column `col` (0-based).
  int column_length(int col) const {
    int n = 0;
    while (n < length() && parts_[static_cast<std::size_t>(n)] > col) ++n;
    return n;
  }

  int columns() const { return empty() ? 0 : parts_.front(); }

  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int r = 0; r < inner.length(); ++r)
      if (inner[r] > (*this)[r]) return false;
    return true;
  }

  /// Shape with one box added in row `row` (0-based); throws if the result is not a partition.
  Partition add_box(int row) const {
    std::vector<int> p = parts_;
    if (row < 0 || row > length()) throw invalid_object("partition: box added below the last row + 1");
    if (row == length()) p.push_back(0);
    ++p[static_cast<std::size_t>(row)];
    if (row > 0 && p[static_cast<std::size_t>(row)] > p[static_cast<std::size_t>(row - 1)])
      throw invalid_object("partition: adding a box breaks weak decrease");
    return Partition(std::move(p));
  }

  Partition remove_box(int row) const {
    std::vector<int> p = parts_;
    if (row < 0 || row >= length()) throw invalid_object("partition: box removed from an empty row");
    --p[static_cast<std::size_t>(row)];
    if (row + 1 < length() && p[static_cast<std::size_t>(row)] < p[static_cast<std::size_t>(row + 1)])
      throw invalid_object("partition: removing a box breaks weak decrease");
    return Partition(std::move(p));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
  std::vector<int> parts_;
};

inline Partition conjugate(const Partition& p) {
  std::vector<int> cols;
  for (int c = 0; c < p.columns(); ++c) cols.push_back(p.column_length(c));
  return Partition(std::move(cols));
}

inline bool fits_in_rectangle(const Partition& p, int rows, int cols) {
  return p.length() <= rows && p.columns() <= cols;
}

/// Complement of `p` inside the rectangle with `rows` rows and `cols` columns,
/// rotated to a partition: result[i] = cols - p[rows-1-i].
inline Partition rect_complement(const Partition& p, int rows, int cols) {
  if (rows < 0 || cols < 0 || !fits_in_rectangle(p, rows, cols))
    throw precondition_error("rect_complement: shape does not fit in the rectangle");
  std::vector<int> out(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) out[static_cast<std::size_t>(i)] = cols - p[rows - 1 - i];
  return Partition(std::move(out));
}

/// True iff inner is contained in outer and outer/inner has at most one box per column.
inline bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
  if (!outer.contains(inner)) return false;
  for (int r = 0; r + 1 < outer.length(); ++r)
    if (outer[r + 1] > inner[r]) return false;
  return true;
}

inline bool is_vertical_strip(const Partition& inner, const Partition& outer) {
  return is_horizontal_strip(conjugate(inner), conjugate(outer));
}

/// All partitions of n, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n, int max_part = -1, int max_length = -1) {
  std::vector<Partition> out;
  if (max_part < 0) max_part = n;
  if (max_length < 0) max_length = n;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, max_part);
  return out;
}

/// All partitions fitting in a rows x cols rectangle, ordered by size then reverse lex.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int n = 0; n <= rows * cols; ++n)
    for (auto& p : partitions_of(n, cols, rows)) out.push_back(std::move(p));
  return out;
}

inline std::string to_string(const Partition& p) {
  std::string s = "[";
  for (int k = 0; k < p.length(); ++k) {
    if (k) s += ',';
    s += std::to_string(p[k]);
  }
  return s + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

/// Parses `[3,1]`, `[]`, and tolerates whitespace.
inline Partition parse_partition(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') s += ch;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw invalid_object("partition text: expected [a,b,...]");
  s = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (!s.empty()) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw invalid_object("partition text: part is not a nonnegative integer");
      parts.push_back(std::stoi(item));
    }
  }
  return Partition(std::move(parts));
}

/// Coordinates of a weight in the epsilon basis; coords[k] is the coefficient
/// of the (k+1)-th barred basis vector.
struct WeightVector {
  std::vector<int> coords;

  WeightVector() = default;
  explicit WeightVector(std::vector<int> c) : coords(std::move(c)) {}
  WeightVector(std::initializer_list<int> c) : coords(c) {}

  static WeightVector zero(int m) { return WeightVector(std::vector<int>(static_cast<std::size_t>(m), 0)); }

  int rank() const { return static_cast<int>(coords.size()); }
  int operator[](int k) const { return coords[static_cast<std::size_t>(k)]; }
  int& operator[](int k) { return coords[static_cast<std::size_t>(k)]; }

  WeightVector& operator+=(const WeightVector& o) {
    if (o.rank() != rank()) throw precondition_error("weight: rank mismatch");
    for (int k = 0; k < rank(); ++k) (*this)[k] += o[k];
    return *this;
  }
  WeightVector& operator-=(const WeightVector& o) {
    if (o.rank() != rank()) throw precondition_error("weight: rank mismatch");
    for (int k = 0; k < rank(); ++k) (*this)[k] -= o[k];
    return *this;
  }
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector& a, const WeightVector& b) { return a.coords <=> b.coords; }
};

/// Simple root alpha_i of sp(2m): alpha_0 = 2e_1, alpha_i = e_{i+1} - e_i.
inline WeightVector simple_root(int i, int m) {
  WeightVector w = WeightVector::zero(m);
  if (i == 0) {
    w[0] = 2;
  } else {
    w[i - 1] = -1;
    w[i] = 1;
  }
  return w;
}

/// <w, alpha_i^vee> with alpha_0^vee = e_1 and alpha_i^vee = e_{i+1} - e_i.
inline int coroot_pairing(const WeightVector& w, int i) {
  return i == 0 ? w[0] : w[i] - w[i - 1];
}

/// Dominant weights are weakly increasing and nonnegative; they correspond to
/// the partition (coords[m-1], ..., coords[0]).
inline bool is_dominant(const WeightVector& w) {
  for (int k = 0; k < w.rank(); ++k) {
    if (w[k] < 0) return false;
    if (k + 1 < w.rank() && w[k] > w[k + 1]) return false;
  }
  return true;
}

inline Partition dominant_to_partition(const WeightVector& w) {
  if (!is_dominant(w)) throw precondition_error("weight is not dominant");
  return Partition(std::vector<int>(w.coords.rbegin(), w.coords.rend()));
}

inline WeightVector partition_to_dominant(const Partition& p, int m) {
  if (p.length() > m) throw precondition_error("partition longer than the rank");
  WeightVector w = WeightVector::zero(m);
  for (int k = 0; k < m; ++k) w[k] = p[m - 1 - k];
  return w;
}

inline std::string to_string(const WeightVector& w) {
  std::string s = "[";
  for (int k = 0; k < w.rank(); ++k) {
    if (k) s += ',';
    s += std::to_string(w[k]);
  }
  return s + "]";
}

inline std::ostream& operator<<(std::ostream& os, const WeightVector& w) { return os << to_string(w); }

/// Parses `[1,-2,0]` into a weight vector.
inline WeightVector parse_weight(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw invalid_object("weight text: expected [a,b,...]");
  s = s.substr(1, s.size() - 2);
  std::vector<int> c;
  std::stringstream ss(s);
  std::string item;
  while (!s.empty() && std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stoi(item, &used));
      if (used != item.size()) throw invalid_object("weight text: bad integer");
    } catch (const std::logic_error&) {
      throw invalid_object("weight text: bad integer");
    }
  }
  return WeightVector(std::move(c));
}

} // namespace sptab
