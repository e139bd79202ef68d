#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sptab/errors.hpp"

namespace sptab {

/// Finitely supported multiset of integers.
class MultisetZ {
public:
  MultisetZ() = default;
  MultisetZ(std::initializer_list<int> xs) {
    for (int x : xs) insert(x);
  }
  template <class Range>
  static MultisetZ from(const Range& xs) {
    MultisetZ m;
    for (int x : xs) m.insert(x);
    return m;
  }

  void insert(int x, int times = 1) {
    if (times < 0) throw precondition_error("multiset: negative multiplicity");
    if (times > 0) counts_[x] += times;
  }
  void erase_one(int x) {
    auto it = counts_.find(x);
    if (it == counts_.end()) throw precondition_error("multiset: element not present");
    if (--it->second == 0) counts_.erase(it);
  }

  int count(int x) const {
    auto it = counts_.find(x);
    return it == counts_.end() ? 0 : it->second;
  }
  int size() const {
    int n = 0;
    for (auto [x, c] : counts_) n += c;
    return n;
  }
  bool empty() const { return counts_.empty(); }
  const std::map<int, int>& counts() const { return counts_; }

  /// Elements in ascending order, with repetition.
  std::vector<int> ascending() const {
    std::vector<int> v;
    for (auto [x, c] : counts_) v.insert(v.end(), static_cast<std::size_t>(c), x);
    return v;
  }
  std::vector<int> descending() const {
    auto v = ascending();
    std::reverse(v.begin(), v.end());
    return v;
  }

  MultisetZ negated() const {
    MultisetZ r;
    for (auto [x, c] : counts_) r.insert(-x, c);
    return r;
  }
  MultisetZ shifted(int n) const {
    MultisetZ r;
    for (auto [x, c] : counts_) r.insert(x + n, c);
    return r;
  }

  friend MultisetZ intersect(const MultisetZ& a, const MultisetZ& b) {
    MultisetZ r;
    for (auto [x, c] : a.counts_) r.insert(x, std::min(c, b.count(x)));
    return r;
  }
  friend MultisetZ disjoint_union(const MultisetZ& a, const MultisetZ& b) {
    MultisetZ r = a;
    for (auto [x, c] : b.counts_) r.insert(x, c);
    return r;
  }
  friend MultisetZ difference(const MultisetZ& a, const MultisetZ& b) {
    MultisetZ r;
    for (auto [x, c] : a.counts_) r.insert(x, std::max(0, c - b.count(x)));
    return r;
  }

  /// Positive elements only.
  MultisetZ positive_part() const {
    MultisetZ r;
    for (auto [x, c] : counts_)
      if (x > 0) r.insert(x, c);
    return r;
  }
  MultisetZ negative_part() const {
    MultisetZ r;
    for (auto [x, c] : counts_)
      if (x < 0) r.insert(x, c);
    return r;
  }

  friend bool operator==(const MultisetZ&, const MultisetZ&) = default;

private:
  std::map<int, int> counts_;
};

/// A up B = (A \ B) + ((A cap B) + 1).
inline MultisetZ shift_up(const MultisetZ& a, const MultisetZ& b) {
  return disjoint_union(difference(a, b), intersect(a, b).shifted(1));
}

/// A down B = (A \ B) + ((A cap B) - 1).
inline MultisetZ shift_down(const MultisetZ& a, const MultisetZ& b) {
  return disjoint_union(difference(a, b), intersect(a, b).shifted(-1));
}

inline std::string to_string(const MultisetZ& m) {
  std::string s = "{";
  bool first = true;
  for (int x : m.descending()) {
    if (!first) s += ',';
    first = false;
    s += x < 0 ? std::to_string(-x) + "b" : std::to_string(x);
  }
  return s + "}";
}

} // namespace sptab
