#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "sptab/errors.hpp"
#include "sptab/king.hpp"
#include "sptab/oscillating.hpp"
#include "sptab/partition.hpp"
#include "sptab/rsk.hpp"
#include "sptab/ssyt.hpp"

namespace sptab {

namespace detail {

/// Partition whose column j (0-based) has length lens[j].
inline Partition from_column_lengths(const std::vector<int>& lens) {
  return conjugate(Partition(lens));
}

/// Column lengths of p read right to left across g columns: entry j is the
/// length of column g-1-j.
inline std::vector<int> reversed_columns(const Partition& p, int g) {
  std::vector<int> out(static_cast<std::size_t>(g));
  for (int j = 0; j < g; ++j) out[static_cast<std::size_t>(j)] = p.column_length(g - 1 - j);
  return out;
}

/// Shape whose column lengths are `rows` minus the reversed column lengths of p.
inline Partition column_complement(const Partition& p, int rows, int g) {
  auto lens = reversed_columns(p, g);
  for (int& l : lens) {
    if (l > rows) throw invalid_object("column complement: column longer than the row bound");
    l = rows - l;
  }
  return from_column_lengths(lens);
}

inline SignedWord word_between(const Partition& a, const Partition& b) {
  int n = std::max(a.length(), b.length());
  for (int r = 0; r < n; ++r) {
    if (b[r] == a[r] + 1) return {r + 1};
    if (b[r] == a[r] - 1) return {-(r + 1)};
  }
  throw invalid_object("partition chain: consecutive shapes do not differ by one box");
}

/// Removes the cell holding `value` in row `row` (0-based); it must be a corner.
inline SSYT remove_corner_value(const SSYT& t, std::size_t row, int value) {
  auto rows = t.rows();
  auto& r = rows[row];
  if (r.empty() || r.back() != value || (row + 1 < rows.size() && rows[row + 1].size() >= r.size()))
    throw precondition_error("tableau deletion: entry is not at a corner");
  r.pop_back();
  return SSYT(std::move(rows));
}

/// Deletes the entry `value`, assumed unique and at a corner.
inline SSYT delete_entry(const SSYT& t, int value) {
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    if (std::find(t.rows()[r].begin(), t.rows()[r].end(), value) != t.rows()[r].end())
      return remove_corner_value(t, r, value);
  throw precondition_error("tableau deletion: entry not present");
}

/// Deletes the rightmost copy of `value`: its copies form a horizontal strip,
/// so the rightmost one sits in the topmost row containing it.
inline SSYT delete_rightmost(const SSYT& t, int value) {
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    if (std::find(t.rows()[r].begin(), t.rows()[r].end(), value) != t.rows()[r].end())
      return remove_corner_value(t, r, value);
  throw precondition_error("tableau deletion: entry not present");
}

inline std::vector<int> block_ends(const std::vector<int>& weight) {
  std::vector<int> beta{0};
  for (int a : weight) beta.push_back(beta.back() + a);
  return beta;
}

} // namespace detail

/// Psi: King tableau to SSOT. Strip i has S_* with column j of length
/// i - (column g+1-j of the entries <= i) and outside given the same way
/// by the entries <= ibar.
inline SSOT psi(const KingTableau& t, int g) {
  const int m = t.rank();
  if (!fits_in_rectangle(t.shape(), m, g)) throw precondition_error("psi: shape does not fit in the m x g rectangle");
  std::vector<OscStrip> strips;
  Partition prev;
  for (int i = 1; i <= m; ++i) {
    Partition star = detail::column_complement(t.sub_shape(2 * i - 1), i, g);
    Partition out = detail::column_complement(t.sub_shape(2 * i), i, g);
    strips.push_back(OscStrip::from_shapes(prev, star, out));
    prev = std::move(out);
  }
  return SSOT(std::move(strips));
}

inline KingTableau psi_inverse(const SSOT& s, int m, int g) {
  if (s.skew()) throw precondition_error("psi_inverse: SSOT must start at the empty shape");
  if (s.length() > m) throw invalid_object("psi_inverse: more than m nonempty strips");
  if (s.columns() > g) throw invalid_object("psi_inverse: c(T) exceeds g");
  std::vector<std::vector<int>> ranks(static_cast<std::size_t>(m));
  Partition prev;
  auto fill = [&](const Partition& from, const Partition& to, int rank) {
    if (!to.contains(from)) throw invalid_object("psi_inverse: strip data do not nest");
    for (int r = 0; r < to.length(); ++r) {
      auto& row = ranks[static_cast<std::size_t>(r)];
      if (static_cast<int>(row.size()) != from[r]) throw invalid_object("psi_inverse: strip data do not nest");
      row.insert(row.end(), static_cast<std::size_t>(to[r] - from[r]), rank);
    }
  };
  for (int i = 1; i <= m; ++i) {
    OscStrip st = s.strip(i);
    Partition a = detail::column_complement(st.star(), i, g);
    Partition b = detail::column_complement(st.outside(), i, g);
    if (a.length() > m || b.length() > m) throw invalid_object("psi_inverse: tableau taller than m");
    fill(prev, a, 2 * i - 1);
    fill(a, b, 2 * i);
    prev = std::move(b);
  }
  std::vector<KingTableau::Row> rows;
  for (const auto& rr : ranks) {
    KingTableau::Row row;
    for (int k : rr) row.push_back(BarredLetter::from_rank(k));
    rows.push_back(std::move(row));
  }
  KingTableau t(std::move(rows), m);
  if (!(psi(t, g) == s)) throw invalid_object("psi_inverse: strip data are not in the image of psi");
  return t;
}

/// Fixed-point-free involution of [n], stored 1-based: perm[k-1] = w(k).
struct Involution {
  std::vector<int> perm;

  int size() const { return static_cast<int>(perm.size()); }
  int operator()(int k) const { return perm[static_cast<std::size_t>(k - 1)]; }

  bool valid() const {
    for (int k = 1; k <= size(); ++k) {
      int v = (*this)(k);
      if (v < 1 || v > size() || v == k || (*this)(v) != k) return false;
    }
    return true;
  }
  friend bool operator==(const Involution&, const Involution&) = default;
};

inline std::string to_string(const Involution& w) {
  std::string s;
  for (int v : w.perm) {
    if (!s.empty() && w.size() >= 10) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

/// Involution attached to the standardization of an SSOT from and to the empty shape.
inline Involution phi_involution(const SSOT& t) {
  if (t.skew() || !t.outside().empty()) throw precondition_error("phi: SSOT must start and end at the empty shape");
  auto chain = t.standardized_chain();
  const int n = static_cast<int>(chain.size()) - 1;
  Involution w{std::vector<int>(static_cast<std::size_t>(n), 0)};
  SSYT v;
  for (int i = 1; i <= n; ++i) {
    int r = detail::word_between(chain[static_cast<std::size_t>(i - 1)], chain[static_cast<std::size_t>(i)]).front();
    if (r > 0) {
      auto rows = v.rows();
      if (static_cast<int>(rows.size()) < r) rows.emplace_back();
      rows[static_cast<std::size_t>(r - 1)].push_back(i);
      v = SSYT(std::move(rows));
    } else {
      int row = -r;
      Cell corner{row, static_cast<int>(v.rows()[static_cast<std::size_t>(row - 1)].size())};
      auto [nv, j] = reverse_row_insert(v, corner);
      v = std::move(nv);
      w.perm[static_cast<std::size_t>(j - 1)] = i;
      w.perm[static_cast<std::size_t>(i - 1)] = j;
    }
  }
  return w;
}

/// Phi: SSOT from and to the empty shape to a symmetric matrix with even diagonal.
/// The matrix has max(m, number of strips) rows.
inline IntMatrix phi(const SSOT& t, int m = 0) {
  Involution w = phi_involution(t);
  const int n = std::max(m, t.length());
  auto beta = detail::block_ends(t.weight(n));
  std::vector<int> block(static_cast<std::size_t>(w.size() + 1));
  for (int k = 1; k <= n; ++k)
    for (int p = beta[static_cast<std::size_t>(k - 1)] + 1; p <= beta[static_cast<std::size_t>(k)]; ++p)
      block[static_cast<std::size_t>(p)] = k;
  IntMatrix out(n, n);
  for (int p = 1; p <= w.size(); ++p)
    ++out(block[static_cast<std::size_t>(p)] - 1, block[static_cast<std::size_t>(w(p))] - 1);
  return out;
}

/// Standardization of the two-line array of M: tops become 1..n in order and the
/// copies of each bottom value b become the labels of block b, decreasing left to right.
inline Involution standardize(const IntMatrix& mtx) {
  if (!sym_even_check(mtx)) throw invalid_object("phi_inverse: matrix is not symmetric with even diagonal");
  std::vector<int> rs;
  for (int i = 0; i < mtx.rows(); ++i) rs.push_back(mtx.row_sum(i));
  auto beta = detail::block_ends(rs);
  auto cols = two_line_array(mtx).columns;
  std::vector<int> next(beta.begin() + 1, beta.end());
  Involution w{std::vector<int>(cols.size())};
  for (std::size_t k = 0; k < cols.size(); ++k) w.perm[k] = next[static_cast<std::size_t>(cols[k].second - 1)]--;
  if (!w.valid()) throw invalid_object("phi_inverse: standardization is not a fixed-point-free involution");
  return w;
}

inline SSOT phi_inverse(const IntMatrix& mtx) {
  Involution w = standardize(mtx);
  const int n = w.size();
  std::vector<Partition> chain(static_cast<std::size_t>(n + 1));
  SSYT v;
  for (int i = n; i >= 1; --i) {
    chain[static_cast<std::size_t>(i)] = v.shape();
    if (i > w(i))
      v = row_insert(std::move(v), w(i)).first;
    else
      v = detail::delete_entry(v, i);
  }
  chain[0] = v.shape();
  if (!chain[0].empty()) throw invalid_object("phi_inverse: chain does not return to the empty shape");
  std::vector<int> rs;
  for (int i = 0; i < mtx.rows(); ++i) rs.push_back(mtx.row_sum(i));
  auto beta = detail::block_ends(rs);
  std::vector<SignedWord> words;
  for (std::size_t k = 1; k < beta.size(); ++k) {
    SignedWord word;
    for (int p = beta[k - 1]; p < beta[k]; ++p)
      word.push_back(detail::word_between(chain[static_cast<std::size_t>(p)], chain[static_cast<std::size_t>(p + 1)]).front());
    words.push_back(std::move(word));
  }
  return SSOT::from_words(Partition{}, words);
}

/// Table of (P_q, V_q) for q = 0..n, indexed by q.
struct PVTrace {
  std::vector<int> inverse_column_word;
  std::vector<SSYT> p;
  std::vector<SSYT> v;
};

inline PVTrace pv_trace(const IntMatrix& mtx) {
  if (!sym_even_check(mtx)) throw invalid_object("pv_trace: matrix is not symmetric with even diagonal");
  auto cols = two_line_array(mtx).columns;
  const int n = static_cast<int>(cols.size());
  PVTrace tr;
  tr.inverse_column_word = inverse_column_word(mtx);
  tr.p.resize(static_cast<std::size_t>(n + 1));
  tr.v.resize(static_cast<std::size_t>(n + 1));
  auto col = [&](int k) { return cols[static_cast<std::size_t>(k - 1)]; };
  for (int q = n - 1; q >= 0; --q) {
    auto [i, j] = col(q + 1);
    tr.p[static_cast<std::size_t>(q)] = row_insert(tr.p[static_cast<std::size_t>(q + 1)], j).first;
    const SSYT& prev = tr.v[static_cast<std::size_t>(q + 1)];
    bool insert = i > j;
    if (i == j) {
      // run of (r,r) columns around q+1: the right half inserts, the left half deletes
      int lo = q + 1, hi = q + 1;
      while (lo > 1 && col(lo - 1) == col(q + 1)) --lo;
      while (hi < n && col(hi + 1) == col(q + 1)) ++hi;
      int half = (hi - lo + 1) / 2;
      insert = hi - (q + 1) < half;
    }
    tr.v[static_cast<std::size_t>(q)] = insert ? row_insert(prev, j).first : detail::delete_rightmost(prev, i);
  }
  return tr;
}

} // namespace sptab
