#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sptab/crystal.hpp"
#include "sptab/errors.hpp"
#include "sptab/king.hpp"
#include "sptab/oscillating.hpp"
#include "sptab/partition.hpp"

namespace sptab {

/// Integer Laurent polynomial in x_1, ..., x_m, stored as weight -> coefficient
/// with no zero coefficients.
class LaurentCharacter {
public:
  LaurentCharacter() = default;
  explicit LaurentCharacter(int m) : m_(m) {}

  static LaurentCharacter one(int m) {
    LaurentCharacter c(m);
    c.add(WeightVector::zero(m), 1);
    return c;
  }

  int rank() const { return m_; }
  const std::map<WeightVector, long long>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }

  long long coeff(const WeightVector& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const WeightVector& w, long long c) {
    if (w.rank() != m_) throw precondition_error("character: rank mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh && (it->second += c) == 0) terms_.erase(it);
  }

  LaurentCharacter& operator+=(const LaurentCharacter& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  LaurentCharacter& operator-=(const LaurentCharacter& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend LaurentCharacter operator+(LaurentCharacter a, const LaurentCharacter& b) { return a += b; }
  friend LaurentCharacter operator-(LaurentCharacter a, const LaurentCharacter& b) { return a -= b; }

  friend LaurentCharacter operator*(const LaurentCharacter& a, const LaurentCharacter& b) {
    a.check(b);
    LaurentCharacter out(a.m_);
    for (const auto& [u, c] : a.terms_)
      for (const auto& [v, d] : b.terms_) out.add(u + v, c * d);
    return out;
  }
  friend LaurentCharacter operator*(long long k, const LaurentCharacter& a) {
    LaurentCharacter out(a.m_);
    for (const auto& [w, c] : a.terms_) out.add(w, k * c);
    return out;
  }

  /// Value at x = 1, i.e. the dimension for a genuine character.
  long long degree() const {
    long long s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
  }

  friend bool operator==(const LaurentCharacter&, const LaurentCharacter&) = default;

private:
  void check(const LaurentCharacter& o) const {
    if (o.m_ != m_) throw precondition_error("character: rank mismatch");
  }

  int m_ = 0;
  std::map<WeightVector, long long> terms_;
};

inline LaurentCharacter monomial(const WeightVector& w, long long c = 1) {
  LaurentCharacter out(w.rank());
  out.add(w, c);
  return out;
}

/// Sum of x^{wt} over King tableaux of shape lambda.
inline LaurentCharacter king_character(const Partition& lambda, int m) {
  if (lambda.length() > m) throw precondition_error("king_character: partition longer than m");
  LaurentCharacter out(m);
  for (const auto& t : enumerate_king(lambda, m)) out.add(king_weight(t), 1);
  return out;
}

namespace detail {

/// det(x_j^{l_i} - x_j^{-l_i}) expanded over permutations and sign choices.
inline LaurentCharacter antisymmetrizer(const std::vector<int>& l) {
  const int m = static_cast<int>(l.size());
  LaurentCharacter out(m);
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    for (int mask = 0; mask < (1 << m); ++mask) {
      WeightVector w = WeightVector::zero(m);
      long long sign = inversions % 2 ? -1 : 1;
      for (int j = 0; j < m; ++j) {
        int e = l[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
        if (mask >> j & 1) {
          e = -e;
          sign = -sign;
        }
        w[j] = e;
      }
      out.add(w, sign);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Exact quotient f / d by long division on the lexicographically largest term.
inline LaurentCharacter divide_exact(LaurentCharacter f, const LaurentCharacter& d) {
  if (d.zero()) throw precondition_error("character division by zero");
  const auto& [dw, dc] = *d.terms().rbegin();
  LaurentCharacter q(f.rank());
  for (std::size_t steps = 0; !f.zero(); ++steps) {
    const auto& [fw, fc] = *f.terms().rbegin();
    if (fc % dc != 0 || steps > 1000000) throw precondition_error("character division is not exact");
    LaurentCharacter t = monomial(fw - dw, fc / dc);
    q += t;
    f -= t * d;
  }
  return q;
}

} // namespace detail

/// Weyl character formula for Sp(2m), evaluated exactly.
inline LaurentCharacter weyl_character(const Partition& lambda, int m) {
  if (lambda.length() > m) throw precondition_error("weyl_character: partition longer than m");
  thread_local std::map<std::pair<Partition, int>, LaurentCharacter> memo;
  if (auto it = memo.find({lambda, m}); it != memo.end()) return it->second;
  std::vector<int> top, rho;
  for (int i = 1; i <= m; ++i) {
    top.push_back(lambda[i - 1] + m - i + 1);
    rho.push_back(m - i + 1);
  }
  LaurentCharacter out =
      m == 0 ? LaurentCharacter::one(0) : detail::divide_exact(detail::antisymmetrizer(top), detail::antisymmetrizer(rho));
  memo.emplace(std::make_pair(lambda, m), out);
  return out;
}

/// Schur polynomial in x_1^{+-1}, ..., x_m^{+-1}: SSYT of shape mu in 1..2m,
/// letter k <= m gives x_k and letter m + k gives x_k^{-1}.
inline LaurentCharacter schur_eval(const Partition& mu, int m) {
  if (mu.length() > 2 * m) return LaurentCharacter(m);
  LaurentCharacter out(m);
  std::vector<std::vector<int>> t;
  for (int r = 0; r < mu.length(); ++r) t.emplace_back(static_cast<std::size_t>(mu[r]), 0);
  WeightVector w = WeightVector::zero(m);
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == mu.length()) {
      out.add(w, 1);
      return;
    }
    if (c == mu[r]) {
      self(self, r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    // leave room for the rows below in this column
    const int hi = 2 * m - (mu.column_length(c) - 1 - r);
    for (int v = lo; v <= hi; ++v) {
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      const int k = v <= m ? v - 1 : v - m - 1;
      const int s = v <= m ? 1 : -1;
      w[k] += s;
      self(self, r, c + 1);
      w[k] -= s;
    }
  };
  rec(rec, 0, 0);
  return out;
}

using Decomposition = std::map<Partition, long long>;

namespace detail {

// Irreducible character used for peeling; King tableaux are far cheaper than
// the Weyl quotient at rank 4. The two agree (checked in the tests).
inline const LaurentCharacter& irreducible(const Partition& lambda, int m) {
  thread_local std::map<std::pair<Partition, int>, LaurentCharacter> memo;
  auto it = memo.find({lambda, m});
  if (it == memo.end()) it = memo.emplace(std::make_pair(lambda, m), king_character(lambda, m)).first;
  return it->second;
}

} // namespace detail

/// Expands a Weyl-symmetric f in irreducible characters: repeatedly removes
/// the lexicographically largest dominant term (which is dominance-maximal).
inline Decomposition decompose_sp(LaurentCharacter f, int m) {
  if (f.rank() != m) throw precondition_error("decompose_sp: rank mismatch");
  Decomposition out;
  while (!f.zero()) {
    std::optional<Partition> top;
    long long c = 0;
    for (const auto& [w, k] : f.terms()) {
      if (!is_dominant(w)) continue;
      Partition p = dominant_to_partition(w);
      if (!top || p > *top) {
        top = p;
        c = k;
      }
    }
    if (!top) throw precondition_error("decompose_sp: input is not Weyl-symmetric");
    // every weight of chi_top is dominated by top, so the dominant support shrinks
    f -= c * detail::irreducible(*top, m);
    if ((out[*top] += c) == 0) out.erase(*top);
  }
  return out;
}

inline LaurentCharacter recompose(const Decomposition& d, int m) {
  LaurentCharacter out(m);
  for (const auto& [p, c] : d) out += c * detail::irreducible(p, m);
  return out;
}

/// Number of oscillating horizontal strips of size ell from lambda' to nu'
/// with at most g columns.
inline int dual_pieri_count(const Partition& lambda, int ell, const Partition& nu, int g) {
  if (lambda.length() > g || nu.length() > g) throw precondition_error("dual_pieri_count: partition longer than g");
  const Partition to = conjugate(nu);
  int n = 0;
  for (const auto& s : strips_from(conjugate(lambda), g))
    if (s.size() == ell && s.outside() == to) ++n;
  return n;
}

/// Number of gamma inside lambda and nu with lambda/gamma and nu/gamma horizontal
/// strips of total size k. This is the vertical-strip count on the conjugates.
inline int sundaram_count(const Partition& lambda, int k, const Partition& nu, int m) {
  if (lambda.length() > m || nu.length() > m) throw precondition_error("sundaram_count: partition longer than m");
  int n = 0;
  const int gsize2 = lambda.size() + nu.size() - k;
  if (gsize2 < 0 || gsize2 % 2) return 0;
  for (const auto& gamma : partitions_of(gsize2 / 2))
    if (lambda.contains(gamma) && nu.contains(gamma) && is_horizontal_strip(gamma, lambda) && is_horizontal_strip(gamma, nu))
      ++n;
  return n;
}

/// Skew SSOT with inside lambda', outside nu', weight mu', c <= m, and
/// eps_i = 0 for 1 <= i <= max_index (every i >= 1 when max_index < 0).
inline int conjecture_lhs(const Partition& lambda, const Partition& mu, const Partition& nu, int m, int max_index = -1) {
  if (lambda.length() > m || mu.length() > m || nu.length() > m)
    throw precondition_error("conjecture_lhs: partition longer than m");
  const Partition mu_c = conjugate(mu);
  const int strips = mu_c.length();
  const int top = max_index < 0 ? strips - 1 : max_index;
  int n = 0;
  for (const auto& t : enumerate_ssot(conjugate(lambda), conjugate(nu), strips, m, mu_c.parts())) {
    bool lowest = true;
    for (int i = 1; i <= top && lowest; ++i) lowest = ssot_stats(t, i, m).epsilon == 0;
    if (lowest) ++n;
  }
  return n;
}

/// Both SSOT counts for every nu at once, keyed by nu: eps_i = 0 for every
/// i >= 1, and eps_i = 0 only for 1 <= i <= m - 1.
inline std::map<Partition, std::pair<int, int>> conjecture_counts(const Partition& lambda, const Partition& mu, int m) {
  if (lambda.length() > m || mu.length() > m) throw precondition_error("conjecture_counts: partition longer than m");
  const Partition mu_c = conjugate(mu);
  const int strips = mu_c.length();
  const int top = std::max(strips - 1, m - 1);
  std::map<Partition, std::pair<int, int>> out;
  for (const auto& t : enumerate_ssot_from(conjugate(lambda), strips, m, mu_c.parts())) {
    int first = top + 1;  // smallest i >= 1 with eps_i != 0
    for (int i = 1; i <= top && first > top; ++i)
      if (ssot_stats(t, i, m).epsilon != 0) first = i;
    const bool all = first >= strips, restricted = first >= m;
    if (!all && !restricted) continue;
    auto& c = out[conjugate(t.outside())];
    c.first += all;
    c.second += restricted;
  }
  return out;
}

struct ConjectureRow {
  Partition nu;
  int lhs = 0;
  int lhs_restricted = 0;  // eps_i = 0 only for i <= m - 1
  long long rhs = 0;
  bool equal() const { return lhs == rhs; }
};

struct ConjectureReport {
  Partition lambda;
  Partition mu;
  int m = 0;
  bool assert_mode = false;
  std::vector<ConjectureRow> rows;
  bool all_equal() const {
    return std::all_of(rows.begin(), rows.end(), [](const ConjectureRow& r) { return r.equal(); });
  }
  bool ok() const { return !assert_mode || all_equal(); }
};

/// The proven cases: mu_1 <= 3, or mu a single row.
inline bool conjecture_assert_mode(const Partition& mu) { return mu.columns() <= 3 || mu.length() <= 1; }

/// Compares the multiplicity of chi_nu in chi_lambda * s_mu with the SSOT count
/// for every nu where either side is nonzero.
inline ConjectureReport conjecture_verify(const Partition& lambda, const Partition& mu, int m) {
  if (lambda.length() > m || mu.length() > m) throw precondition_error("conjecture_verify: partition longer than m");
  ConjectureReport rep{lambda, mu, m, conjecture_assert_mode(mu), {}};
  const Decomposition rhs = decompose_sp(king_character(lambda, m) * schur_eval(mu, m), m);
  const auto counts = conjecture_counts(lambda, mu, m);
  std::set<Partition> candidates;
  for (const auto& [nu, c] : counts) candidates.insert(nu);
  for (const auto& [nu, c] : rhs) candidates.insert(nu);
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    ConjectureRow row{*it, 0, 0, 0};
    if (auto c = counts.find(*it); c != counts.end()) std::tie(row.lhs, row.lhs_restricted) = c->second;
    if (auto r = rhs.find(*it); r != rhs.end()) row.rhs = r->second;
    if (row.lhs != 0 || row.rhs != 0 || row.lhs_restricted != 0) rep.rows.push_back(row);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Text forms

/// One `coeff : [w1,...,wm]` line per term in increasing weight order.
inline std::string to_string(const LaurentCharacter& f) {
  std::string s;
  for (const auto& [w, c] : f.terms()) s += std::to_string(c) + " : " + to_string(w) + "\n";
  return s;
}

inline LaurentCharacter parse_character(std::string_view text, int m) {
  LaurentCharacter out(m);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw invalid_object("character text: expected `coeff : [weight]`");
    long long c = 0;
    try {
      std::size_t used = 0;
      std::string head = line.substr(0, colon);
      c = std::stoll(head, &used);
      if (head.find_first_not_of(" \t", used) != std::string::npos) throw invalid_object("character text: bad coefficient");
    } catch (const std::logic_error&) {
      throw invalid_object("character text: bad coefficient");
    }
    WeightVector w = parse_weight(line.substr(colon + 1));
    if (w.rank() != m) throw invalid_object("character text: weight has the wrong rank");
    out.add(w, c);
  }
  return out;
}

inline std::string to_string(const Decomposition& d) {
  std::string s;
  for (auto it = d.rbegin(); it != d.rend(); ++it) s += std::to_string(it->second) + " : " + to_string(it->first) + "\n";
  return s;
}

/// TSV table `nu lhs_count rhs_coeff status`, preceded by a comment line.
inline std::string to_tsv(const ConjectureReport& r) {
  std::string s = "# lambda=" + to_string(r.lambda) + " mu=" + to_string(r.mu) + " m=" + std::to_string(r.m) +
                  " mode=" + (r.assert_mode ? "ASSERT" : "REPORT") + "\n";
  s += "nu\tlhs_count\trhs_coeff\tstatus\n";
  for (const auto& row : r.rows) {
    s += to_string(row.nu) + "\t" + std::to_string(row.lhs) + "\t" + std::to_string(row.rhs) + "\t" +
         (row.equal() ? "equal" : "differs") + "\n";
    if (row.lhs_restricted != row.lhs)
      s += "# nu=" + to_string(row.nu) + ": count with eps_i = 0 only for i < m is " + std::to_string(row.lhs_restricted) + "\n";
  }
  return s;
}

} // namespace sptab
