#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sptab/errors.hpp"
#include "sptab/multiset.hpp"
#include "sptab/partition.hpp"

namespace sptab {

/// Signed row word of an oscillating horizontal strip: +r adds a box in row r,
/// -r removes one from row r.
using SignedWord = std::vector<int>;

/// Oscillating horizontal strip stored as its inside shape and its weakly
/// decreasing signed row word; the partition chain is replayed on construction.
class OscStrip {
public:
  OscStrip() = default;

  OscStrip(Partition inside, SignedWord word) : inside_(std::move(inside)), word_(std::move(word)) {
    for (std::size_t k = 0; k < word_.size(); ++k) {
      if (word_[k] == 0) throw invalid_object("oscillating strip: row number 0");
      if (k > 0 && word_[k - 1] < word_[k]) throw invalid_object("oscillating strip: row word not weakly decreasing");
    }
    Partition cur = inside_;
    star_ = inside_;
    for (int r : word_) {
      cur = r > 0 ? cur.add_box(r - 1) : cur.remove_box(-r - 1);
      if (r > 0) star_ = cur;
    }
    outside_ = std::move(cur);
    if (!is_horizontal_strip(inside_, star_) || !is_horizontal_strip(outside_, star_))
      throw invalid_object("oscillating strip: S*/inside or S*/outside is not a horizontal strip");
  }

  /// The unique strip with the given inside, maximum, and outside shapes.
  static OscStrip from_shapes(const Partition& inside, const Partition& star, const Partition& outside) {
    if (!is_horizontal_strip(inside, star) || !is_horizontal_strip(outside, star))
      throw invalid_object("oscillating strip: shapes do not bound horizontal strips");
    SignedWord w;
    for (int r = star.length() - 1; r >= 0; --r)
      for (int k = inside[r]; k < star[r]; ++k) w.push_back(r + 1);
    for (int r = 0; r < star.length(); ++r)
      for (int k = outside[r]; k < star[r]; ++k) w.push_back(-(r + 1));
    return OscStrip(inside, std::move(w));
  }

  const Partition& inside() const { return inside_; }
  const Partition& star() const { return star_; }
  const Partition& outside() const { return outside_; }
  const SignedWord& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  int columns() const { return star_.columns(); }

  std::vector<Partition> chain() const {
    std::vector<Partition> c{inside_};
    for (int r : word_) c.push_back(r > 0 ? c.back().add_box(r - 1) : c.back().remove_box(-r - 1));
    return c;
  }

  /// Rows receiving a box (the positive letters).
  MultisetZ additions() const {
    MultisetZ m;
    for (int r : word_)
      if (r > 0) m.insert(r);
    return m;
  }
  /// Rows losing a box (absolute values of the negative letters).
  MultisetZ removals() const {
    MultisetZ m;
    for (int r : word_)
      if (r < 0) m.insert(-r);
    return m;
  }

  friend bool operator==(const OscStrip& a, const OscStrip& b) {
    return a.inside_ == b.inside_ && a.word_ == b.word_;
  }

private:
  Partition inside_;
  SignedWord word_;
  Partition star_;
  Partition outside_;
};

/// Strip from `inside` with the given added and removed row multisets.
inline OscStrip strip_from_rows(const Partition& inside, const MultisetZ& adds, const MultisetZ& removes) {
  SignedWord w = adds.descending();
  for (int r : removes.ascending()) w.push_back(-r);
  return OscStrip(inside, std::move(w));
}

/// Skew semistandard oscillating tableau: chained strips. Trailing empty strips
/// are trimmed so that equal tableaux compare equal.
class SSOT {
public:
  SSOT() = default;
  explicit SSOT(std::vector<OscStrip> strips) : SSOT(Partition{}, std::move(strips)) {}

  SSOT(Partition inside, std::vector<OscStrip> strips) : inside_(std::move(inside)), strips_(std::move(strips)) {
    Partition cur = inside_;
    for (const auto& s : strips_) {
      if (s.inside() != cur) throw invalid_object("ssot: strip inside does not match previous outside");
      cur = s.outside();
    }
    while (!strips_.empty() && strips_.back().size() == 0) strips_.pop_back();
  }

  /// Builds from signed words, replaying from `inside`.
  static SSOT from_words(const Partition& inside, const std::vector<SignedWord>& words) {
    std::vector<OscStrip> strips;
    Partition cur = inside;
    for (const auto& w : words) {
      strips.emplace_back(cur, w);
      cur = strips.back().outside();
    }
    return SSOT(inside, std::move(strips));
  }

  const Partition& inside() const { return inside_; }
  Partition outside() const { return strips_.empty() ? inside_ : strips_.back().outside(); }
  bool skew() const { return !inside_.empty(); }

  /// Number of stored strips (trailing empty ones excluded).
  int length() const { return static_cast<int>(strips_.size()); }
  const std::vector<OscStrip>& stored_strips() const { return strips_; }

  /// Strip k (1-based); an empty strip at the outside for k past the end.
  OscStrip strip(int k) const {
    if (k < 1) throw precondition_error("ssot: strip index starts at 1");
    if (k <= length()) return strips_[static_cast<std::size_t>(k - 1)];
    return OscStrip(outside(), {});
  }

  /// Maximum number of columns of any partition in the tableau.
  int columns() const {
    int c = inside_.columns();
    for (const auto& s : strips_) c = std::max(c, s.columns());
    return c;
  }

  /// Strip sizes, padded to `m` entries.
  std::vector<int> weight(int m) const {
    if (m < length()) throw precondition_error("ssot: more nonempty strips than the requested length");
    std::vector<int> w(static_cast<std::size_t>(m), 0);
    for (int k = 0; k < length(); ++k) w[static_cast<std::size_t>(k)] = strips_[static_cast<std::size_t>(k)].size();
    return w;
  }

  /// Signed words per strip, padded to `m` strips.
  std::vector<SignedWord> row_sequence(int m) const {
    std::vector<SignedWord> r;
    for (int k = 1; k <= std::max(m, length()); ++k) r.push_back(strip(k).word());
    return r;
  }

  /// Partition chain of the standardization (all strips concatenated).
  std::vector<Partition> standardized_chain() const {
    std::vector<Partition> c{inside_};
    for (const auto& s : strips_) {
      auto sc = s.chain();
      c.insert(c.end(), sc.begin() + 1, sc.end());
    }
    return c;
  }

  /// Copy with strips k and k+1 (1-based) replaced.
  SSOT with_strips(int k, const std::vector<OscStrip>& replacement) const {
    std::vector<OscStrip> s;
    int total = std::max(length(), k - 1 + static_cast<int>(replacement.size()));
    for (int j = 1; j <= total; ++j) {
      if (j >= k && j < k + static_cast<int>(replacement.size()))
        s.push_back(replacement[static_cast<std::size_t>(j - k)]);
      else
        s.push_back(strip(j));
    }
    return SSOT(inside_, std::move(s));
  }

  friend bool operator==(const SSOT&, const SSOT&) = default;
  friend bool operator<(const SSOT& a, const SSOT& b) {
    if (a.inside_ != b.inside_) return a.inside_ < b.inside_;
    return std::lexicographical_compare(a.strips_.begin(), a.strips_.end(), b.strips_.begin(), b.strips_.end(),
                                        [](const OscStrip& x, const OscStrip& y) { return x.word() < y.word(); });
  }

  std::vector<SignedWord> words() const {
    std::vector<SignedWord> w;
    for (const auto& s : strips_) w.push_back(s.word());
    return w;
  }

private:
  Partition inside_;
  std::vector<OscStrip> strips_;
};

struct SsotWeights {
  std::vector<int> wt;
  WeightVector cwt;
};

/// Weight (strip sizes) and crystal weight g - wt, both with `m` entries.
inline SsotWeights ssot_weights(const SSOT& t, int g, int m) {
  if (t.columns() > g) throw precondition_error("ssot_weights: c(T) exceeds g");
  SsotWeights out{t.weight(m), WeightVector::zero(m)};
  for (int k = 0; k < m; ++k) out.cwt[k] = g - out.wt[static_cast<std::size_t>(k)];
  return out;
}

/// All strips starting at `inside` whose partitions have at most `g` columns,
/// ordered by signed word.
inline std::vector<OscStrip> strips_from(const Partition& inside, int g) {
  std::vector<OscStrip> out;
  if (inside.columns() > g) return out;
  // additions: row r gains up to (previous row of inside) - inside[r] boxes
  std::vector<int> star(static_cast<std::size_t>(inside.length() + 1));
  auto removals = [&](const Partition& s) {
    std::vector<int> outp(s.parts());
    auto rec = [&](auto&& self, int r) -> void {
      if (r == s.length()) {
        out.push_back(OscStrip::from_shapes(inside, s, Partition(outp)));
        return;
      }
      int maxrm = s[r] - s[r + 1];
      for (int k = 0; k <= maxrm; ++k) {
        outp[static_cast<std::size_t>(r)] = s[r] - k;
        self(self, r + 1);
      }
      outp[static_cast<std::size_t>(r)] = s[r];
    };
    rec(rec, 0);
  };
  auto adds = [&](auto&& self, int r) -> void {
    if (r == inside.length() + 1) {
      removals(Partition(star));
      return;
    }
    int cap = r == 0 ? g : inside[r - 1];
    for (int v = inside[r]; v <= cap; ++v) {
      star[static_cast<std::size_t>(r)] = v;
      self(self, r + 1);
    }
  };
  adds(adds, 0);
  std::sort(out.begin(), out.end(), [](const OscStrip& a, const OscStrip& b) { return a.word() < b.word(); });
  return out;
}

namespace detail {

// Shared enumerator; any outside shape is accepted when `outside` is empty.
inline std::vector<SSOT> enumerate_ssot_impl(const Partition& inside, const std::optional<Partition>& outside, int m,
                                             int g, const std::optional<std::vector<int>>& weight) {
  std::vector<SSOT> out;
  if (weight && static_cast<int>(weight->size()) > m) {
    for (std::size_t k = static_cast<std::size_t>(m); k < weight->size(); ++k)
      if ((*weight)[k] != 0) return out;
  }
  std::map<Partition, std::vector<OscStrip>> cache;
  auto from = [&](const Partition& p) -> const std::vector<OscStrip>& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, strips_from(p, g)).first;
    return it->second;
  };
  // each strip changes the size by at most 2g and every part by at most 2
  auto reachable = [&](const Partition& p, int steps) {
    if (!outside) return true;
    if (std::abs(p.size() - outside->size()) > 2 * g * steps) return false;
    if (std::abs(p.length() - outside->length()) > steps) return false;
    return true;
  };
  std::vector<OscStrip> cur;
  auto rec = [&](auto&& self, const Partition& at, int k) -> void {
    if (k == m) {
      if (!outside || at == *outside) out.emplace_back(inside, cur);
      return;
    }
    if (!reachable(at, m - k)) return;
    for (const auto& s : from(at)) {
      if (weight && s.size() != (k < static_cast<int>(weight->size()) ? (*weight)[static_cast<std::size_t>(k)] : 0))
        continue;
      cur.push_back(s);
      self(self, s.outside(), k + 1);
      cur.pop_back();
    }
  };
  if (inside.columns() <= g) rec(rec, inside, 0);
  return out;
}

} // namespace detail

/// All (skew) SSOT from `inside` to `outside` with at most `m` strips, c <= g,
/// and, when given, exact weight.
inline std::vector<SSOT> enumerate_ssot(const Partition& inside, const Partition& outside, int m, int g,
                                        const std::optional<std::vector<int>>& weight = std::nullopt) {
  return detail::enumerate_ssot_impl(inside, outside, m, g, weight);
}

/// Same, with the outside shape left free.
inline std::vector<SSOT> enumerate_ssot_from(const Partition& inside, int m, int g,
                                             const std::optional<std::vector<int>>& weight = std::nullopt) {
  return detail::enumerate_ssot_impl(inside, std::nullopt, m, g, weight);
}

/// Strip words as parenthesized groups, barred letters with a trailing `b`;
/// a nonempty inside shape is printed as a leading partition, e.g. `[1](2 1b)`.
inline std::string to_string(const SSOT& t, int m = 0) {
  std::string s = t.skew() ? to_string(t.inside()) : "";
  auto rs = t.row_sequence(m);
  if (rs.empty()) return s + "()";
  for (const auto& w : rs) {
    s += '(';
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) s += ' ';
      s += w[k] < 0 ? std::to_string(-w[k]) + "b" : std::to_string(w[k]);
    }
    s += ')';
  }
  return s;
}

inline std::string to_string(const SignedWord& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += w[k] < 0 ? std::to_string(-w[k]) + "b" : std::to_string(w[k]);
  }
  return s + ")";
}

inline SSOT parse_ssot(std::string_view text) {
  std::string s(text);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\n' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
  };
  skip();
  Partition inside;
  if (pos < s.size() && s[pos] == '[') {
    std::size_t close = s.find(']', pos);
    if (close == std::string::npos) throw invalid_object("ssot text: unterminated inside shape");
    inside = parse_partition(s.substr(pos, close - pos + 1));
    pos = close + 1;
  }
  std::vector<SignedWord> words;
  skip();
  while (pos < s.size()) {
    if (s[pos] != '(') throw invalid_object("ssot text: expected `(`");
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw invalid_object("ssot text: unterminated strip");
    std::istringstream in(s.substr(pos + 1, close - pos - 1));
    std::string tok;
    SignedWord w;
    while (in >> tok) {
      bool barred = tok.back() == 'b';
      if (barred) tok.pop_back();
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw invalid_object("ssot text: letters are `r` or `rb`");
      int r = std::stoi(tok);
      if (r == 0) throw invalid_object("ssot text: row numbers start at 1");
      w.push_back(barred ? -r : r);
    }
    words.push_back(std::move(w));
    pos = close + 1;
    skip();
  }
  return SSOT::from_words(inside, words);
}

} // namespace sptab
