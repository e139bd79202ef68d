#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sptab/bijections.hpp"
#include "sptab/errors.hpp"
#include "sptab/king.hpp"
#include "sptab/multiset.hpp"
#include "sptab/oscillating.hpp"
#include "sptab/rsk.hpp"
#include "sptab/ssyt.hpp"

namespace sptab {

/// Unpaired residue of the (C, D) bracket: p in C pairs with q in D when p < q.
/// Both lists ascending; every leftover of C is >= every leftover of D.
struct Pairing {
  std::vector<int> unpaired_c;
  std::vector<int> unpaired_d;
};

/// Takes D from the smallest element up and matches each q with the largest
/// remaining p < q in C, as in bracket matching.
inline Pairing pair_multisets(const MultisetZ& c, const MultisetZ& d) {
  auto cs = c.ascending();
  std::multiset<int> open(cs.begin(), cs.end());
  Pairing out;
  for (int q : d.ascending()) {
    auto it = open.lower_bound(q);
    if (it == open.begin()) {
      out.unpaired_d.push_back(q);
      continue;
    }
    open.erase(std::prev(it));
  }
  out.unpaired_c.assign(open.begin(), open.end());
  return out;
}

// ---------------------------------------------------------------------------
// Matrices

/// Crystal weight g - (row sum) per coordinate.
inline WeightVector matrix_cwt(const IntMatrix& m, int g) {
  WeightVector w = WeightVector::zero(m.rows());
  for (int i = 0; i < m.rows(); ++i) w[i] = g - m.row_sum(i);
  return w;
}

/// Kashiwara operator on symmetric even-diagonal matrices with c(M) <= 2g.
/// Index 0 changes m_11 by -2 (raise) or +2 (lower); index i >= 1 acts by e_i / f_i
/// on both tableaux of the column-RSK pair.
inline std::optional<IntMatrix> matrix_op(const IntMatrix& m, int i, Direction dir, int g) {
  if (i < 0 || i >= m.rows()) throw precondition_error("matrix_op: index out of range");
  if (c_index(m) > 2 * g) throw precondition_error("matrix_op: c(M) exceeds 2g");
  if (i == 0) {
    IntMatrix n = m;
    if (dir == Direction::raise) {
      if (n(0, 0) < 2) return std::nullopt;
      n(0, 0) -= 2;
      return n;
    }
    n(0, 0) += 2;
    if (c_index(n) > 2 * g) return std::nullopt;
    return n;
  }
  auto [p, q] = rsk_column(m);
  auto np = ssyt_op(p, i, dir);
  auto nq = ssyt_op(q, i, dir);
  if (!np || !nq) return std::nullopt;
  return rsk_column_inverse(*np, *nq, m.rows(), m.cols());
}

/// Recording-side operator on the two-line array: rows i and i+1 (1-based) of m
/// are paired by bottom entries; raise moves the largest unpaired bottom of row
/// i+1 up to row i, lower moves the smallest unpaired bottom of row i down.
inline std::optional<IntMatrix> matrix_op_q(const IntMatrix& m, int i, Direction dir) {
  if (i < 1 || i >= m.rows()) throw precondition_error("matrix_op_q: index out of range");
  MultisetZ c, d;
  for (int j = 0; j < m.cols(); ++j) {
    c.insert(j + 1, m(i - 1, j));
    d.insert(j + 1, m(i, j));
  }
  Pairing pr = pair_multisets(c, d);
  IntMatrix n = m;
  if (dir == Direction::raise) {
    if (pr.unpaired_d.empty()) return std::nullopt;
    int b = pr.unpaired_d.back();
    --n(i, b - 1);
    ++n(i - 1, b - 1);
  } else {
    if (pr.unpaired_c.empty()) return std::nullopt;
    int a = pr.unpaired_c.front();
    --n(i - 1, a - 1);
    ++n(i, a - 1);
  }
  return n;
}

/// Same operator through two-line-array surgery: apply the recording-side move
/// and then its transpose.
inline std::optional<IntMatrix> matrix_op_surgery(const IntMatrix& m, int i, Direction dir) {
  auto q = matrix_op_q(m, i, dir);
  if (!q) return std::nullopt;
  auto p = matrix_op_q(q->transpose(), i, dir);
  if (!p) return std::nullopt;
  return p->transpose();
}

// ---------------------------------------------------------------------------
// SSOT

/// The multisets C_i and D_i built from strips i and i+1.
struct LocalMultisets {
  MultisetZ c;
  MultisetZ d;
};

inline LocalMultisets local_multisets(const SSOT& t, int i) {
  if (i < 1) throw precondition_error("local_multisets: index must be positive");
  OscStrip si = t.strip(i), sj = t.strip(i + 1);
  MultisetZ rm_i = si.removals(), add_j = sj.additions();
  MultisetZ bar_rm = shift_up(rm_i, add_j);
  MultisetZ bar_add = shift_up(add_j, rm_i);
  return {disjoint_union(si.additions(), bar_rm.negated()), disjoint_union(bar_add, sj.removals().negated())};
}

namespace detail {

inline void check_ssot_input(const SSOT& t, int i, int g) {
  if (i < 0) throw precondition_error("ssot_op: negative index");
  if (i == 0 && t.skew()) throw precondition_error("ssot_op: index 0 needs an empty inside shape");
  if (t.columns() > g) throw precondition_error("ssot_op: c(T) exceeds g");
}

/// Rebuilds strips i and i+1 from new (C, D).
inline SSOT rebuild_local(const SSOT& t, int i, const MultisetZ& c, const MultisetZ& d) {
  MultisetZ add_i = c.positive_part();
  MultisetZ bar_rm = c.negative_part().negated();
  MultisetZ bar_add = d.positive_part();
  MultisetZ rm_j = d.negative_part().negated();
  MultisetZ rm_i = shift_down(bar_rm, bar_add);
  MultisetZ add_j = shift_down(bar_add, bar_rm);
  OscStrip si = strip_from_rows(t.strip(i).inside(), add_i, rm_i);
  OscStrip sj = strip_from_rows(si.outside(), add_j, rm_j);
  if (sj.outside() != t.strip(i + 1).outside())
    throw precondition_error("ssot_op: local move changed the outside of strip i+1");
  return t.with_strips(i, {si, sj});
}

} // namespace detail

/// Kashiwara operator on (skew) SSOT with c(T) <= g; acts on strips i and i+1,
/// or on strip 1 for i = 0.
inline std::optional<SSOT> ssot_op(const SSOT& t, int i, Direction dir, int g) {
  detail::check_ssot_input(t, i, g);
  if (i == 0) {
    OscStrip s = t.strip(1);
    MultisetZ adds = s.additions(), rms = s.removals();
    if (dir == Direction::lower) {
      if (adds.size() >= g) return std::nullopt;
      adds.insert(1);
      rms.insert(1);
    } else {
      if (rms.empty()) return std::nullopt;
      adds.erase_one(1);
      rms.erase_one(1);
    }
    return t.with_strips(1, {strip_from_rows(s.inside(), adds, rms)});
  }
  auto [c, d] = local_multisets(t, i);
  Pairing pr = pair_multisets(c, d);
  if (dir == Direction::raise) {
    if (pr.unpaired_d.empty()) return std::nullopt;
    int x = pr.unpaired_d.back();
    d.erase_one(x);
    c.insert(x);
  } else {
    if (pr.unpaired_c.empty()) return std::nullopt;
    int x = pr.unpaired_c.front();
    c.erase_one(x);
    d.insert(x);
  }
  return detail::rebuild_local(t, i, c, d);
}

struct CrystalStats {
  int epsilon = 0;
  int phi = 0;
  friend bool operator==(const CrystalStats&, const CrystalStats&) = default;
};

/// Closed-form string lengths from the pairing (i >= 1) or from strip 1 (i = 0).
inline CrystalStats ssot_stats(const SSOT& t, int i, int g) {
  detail::check_ssot_input(t, i, g);
  if (i == 0) {
    OscStrip s = t.strip(1);
    return {s.removals().size(), g - s.additions().size()};
  }
  auto [c, d] = local_multisets(t, i);
  Pairing pr = pair_multisets(c, d);
  return {static_cast<int>(pr.unpaired_d.size()), static_cast<int>(pr.unpaired_c.size())};
}

// ---------------------------------------------------------------------------
// King tableaux, by transport through Psi

inline std::optional<KingTableau> king_op(const KingTableau& t, int i, Direction dir, int g) {
  if (i >= t.rank()) throw precondition_error("king_op: index out of range");
  auto s = ssot_op(psi(t, g), i, dir, g);
  if (!s) return std::nullopt;
  return psi_inverse(*s, t.rank(), g);
}

} // namespace sptab
