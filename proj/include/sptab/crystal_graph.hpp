#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sptab/errors.hpp"
#include "sptab/partition.hpp"
#include "sptab/ssyt.hpp"

namespace sptab {

/// Finite crystal graph: vertices in sorted order, an f-edge x -i-> y for every
/// f_i(x) = y, and the raise/lower tables per index (-1 where the operator vanishes).
template <class X>
struct CrystalGraph {
  struct Edge {
    int from;
    int to;
    int index;
  };

  std::vector<X> vertices;
  std::vector<WeightVector> weights;
  std::vector<int> indices;
  std::vector<Edge> edges;
  std::map<int, std::vector<int>> raise;
  std::map<int, std::vector<int>> lower;

  int size() const { return static_cast<int>(vertices.size()); }

  int find(const X& x) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
    return it != vertices.end() && *it == x ? static_cast<int>(it - vertices.begin()) : -1;
  }

  int op(int v, int i, Direction dir) const {
    const auto& table = dir == Direction::raise ? raise : lower;
    return table.at(i)[static_cast<std::size_t>(v)];
  }

  /// String length by walking the graph.
  int string_length(int v, int i, Direction dir) const {
    int n = 0;
    for (int w = op(v, i, dir); w >= 0; w = op(w, i, dir)) ++n;
    return n;
  }
  int epsilon(int v, int i) const { return string_length(v, i, Direction::raise); }
  int phi(int v, int i) const { return string_length(v, i, Direction::lower); }
};

/// Closure of `seeds` under raise and lower for every listed index. `op(x, i, dir)`
/// returns std::optional<X>; `weight(x)` returns the crystal weight. Throws if the
/// operators are not mutually inverse or do not shift the weight by the simple root.
template <class X, class Op, class Wt>
CrystalGraph<X> crystal_graph(const std::vector<X>& seeds, const std::vector<int>& indices, Op op, Wt weight) {
  // discovery order, and per vertex the discovery index of op(x, i, d) or -1
  std::map<X, int> seen;
  std::vector<X> order;
  std::vector<std::vector<int>> found;
  const std::size_t slots = 2 * indices.size();
  auto visit = [&](const X& x) {
    auto [it, fresh] = seen.emplace(x, static_cast<int>(order.size()));
    if (fresh) order.push_back(x);
    return it->second;
  };
  for (const auto& s : seeds) visit(s);
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::vector<int> row(slots, -1);
    const X x = order[k];  // copy: visit() may grow `order`
    for (std::size_t a = 0; a < indices.size(); ++a)
      for (int b = 0; b < 2; ++b) {
        const Direction d = b == 0 ? Direction::raise : Direction::lower;
        if (auto y = op(x, indices[a], d)) row[2 * a + static_cast<std::size_t>(b)] = visit(*y);
      }
    found.push_back(std::move(row));
  }

  CrystalGraph<X> g;
  g.indices = indices;
  std::vector<int> perm(order.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return order[static_cast<std::size_t>(a)] < order[static_cast<std::size_t>(b)]; });
  std::vector<int> rank(order.size());
  for (std::size_t k = 0; k < perm.size(); ++k) rank[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);
  for (int k : perm) g.vertices.push_back(order[static_cast<std::size_t>(k)]);
  for (const auto& x : g.vertices) g.weights.push_back(weight(x));
  for (std::size_t a = 0; a < indices.size(); ++a) {
    auto& up = g.raise[indices[a]];
    auto& down = g.lower[indices[a]];
    up.assign(g.vertices.size(), -1);
    down.assign(g.vertices.size(), -1);
    for (int v = 0; v < g.size(); ++v) {
      const auto& row = found[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
      if (int y = row[2 * a]; y >= 0) up[static_cast<std::size_t>(v)] = rank[static_cast<std::size_t>(y)];
      if (int y = row[2 * a + 1]; y >= 0) {
        down[static_cast<std::size_t>(v)] = rank[static_cast<std::size_t>(y)];
        g.edges.push_back({v, rank[static_cast<std::size_t>(y)], indices[a]});
      }
    }
  }
  std::stable_sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) { return a.from < b.from; });
  for (int i : indices)
    for (int v = 0; v < g.size(); ++v) {
      int w = g.lower[i][static_cast<std::size_t>(v)];
      if (w < 0) continue;
      if (g.raise[i][static_cast<std::size_t>(w)] != v)
        throw precondition_error("crystal_graph: raise and lower are not mutually inverse at index " + std::to_string(i));
      const int m = g.weights[static_cast<std::size_t>(v)].rank();
      if (g.weights[static_cast<std::size_t>(w)] + simple_root(i, m) != g.weights[static_cast<std::size_t>(v)])
        throw precondition_error("crystal_graph: lowering does not subtract the simple root at index " + std::to_string(i));
    }
  for (int i : indices)
    for (int v = 0; v < g.size(); ++v) {
      int w = g.raise[i][static_cast<std::size_t>(v)];
      if (w >= 0 && g.lower[i][static_cast<std::size_t>(w)] != v)
        throw precondition_error("crystal_graph: raise and lower are not mutually inverse at index " + std::to_string(i));
    }
  return g;
}

/// Connected component id of every vertex (undirected), ids in order of first vertex.
template <class X>
std::vector<int> components(const CrystalGraph<X>& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.size()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  for (const auto& e : g.edges) parent[static_cast<std::size_t>(root(e.from))] = root(e.to);
  std::map<int, int> ids;
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v) out.push_back(ids.emplace(root(v), static_cast<int>(ids.size())).first->second);
  return out;
}

template <class X>
int component_count(const CrystalGraph<X>& g) {
  auto c = components(g);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

/// Vertices killed by every raise operator.
template <class X>
std::vector<int> highest_weight_vertices(const CrystalGraph<X>& g) {
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v) {
    bool top = true;
    for (int i : g.indices) top = top && g.op(v, i, Direction::raise) < 0;
    if (top) out.push_back(v);
  }
  return out;
}

/// Highest weights with multiplicity.
template <class X>
std::map<WeightVector, int> decompose(const CrystalGraph<X>& g) {
  std::map<WeightVector, int> out;
  for (int v : highest_weight_vertices(g)) ++out[g.weights[static_cast<std::size_t>(v)]];
  return out;
}

struct StembridgeReport {
  long long checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Local Stembridge conditions for every pair of distinct indices >= 1, in the
/// raising form and in the dual lowering form. For adjacent i, j:
///  - if e_i x exists, either (eps_j, phi_j) goes to (eps_j, phi_j - 1) or to (eps_j + 1, phi_j);
///  - if e_i x, e_j x exist and eps_j(e_i x) = eps_j(x), then e_i e_j x = e_j e_i x,
///    phi_i(e_j x) = phi_i(x) and eps_i(e_j x) = eps_i(x) + 1;
///  - if e_j x exists and eps_i(e_j x) = eps_i(x) + 1, then eps_j(e_i e_j x) = eps_j(x) - 1;
///  - if eps_j(e_i x) = eps_j(x) + 1 and eps_i(e_j x) = eps_i(x) + 1, then
///    e_i e_j e_j e_i x = e_j e_i e_i e_j x.
/// For non-adjacent i, j: e_i and e_j commute and leave each other's eps, phi alone.
template <class X, class Label>
StembridgeReport stembridge_check(const CrystalGraph<X>& g, Label label) {
  StembridgeReport rep;
  std::vector<int> idx;
  for (int i : g.indices)
    if (i >= 1) idx.push_back(i);
  auto fail = [&](const std::string& what, int v) { rep.violations.push_back(what + " at " + label(g.vertices[static_cast<std::size_t>(v)])); };
  // string lengths per (index, direction), filled by walking each string once from its end
  std::map<std::pair<int, Direction>, std::vector<int>> lengths;
  for (int i : idx)
    for (Direction d : {Direction::raise, Direction::lower}) {
      const Direction back = d == Direction::raise ? Direction::lower : Direction::raise;
      auto& len = lengths[{i, d}];
      len.assign(static_cast<std::size_t>(g.size()), 0);
      for (int v = 0; v < g.size(); ++v) {
        if (g.op(v, i, d) >= 0) continue;
        int n = 0;
        for (int w = g.op(v, i, back); w >= 0; w = g.op(w, i, back)) len[static_cast<std::size_t>(w)] = ++n;
      }
    }

  for (Direction up : {Direction::raise, Direction::lower}) {
    const Direction down = up == Direction::raise ? Direction::lower : Direction::raise;
    const std::string tag = up == Direction::raise ? "" : " (dual)";
    auto e = [&](int v, int i) { return v < 0 ? -1 : g.op(v, i, up); };
    auto eps = [&](int v, int i) { return lengths.at({i, up})[static_cast<std::size_t>(v)]; };
    auto ph = [&](int v, int i) { return lengths.at({i, down})[static_cast<std::size_t>(v)]; };
    for (int v = 0; v < g.size(); ++v)
      for (int i : idx)
        for (int j : idx) {
          if (i == j) continue;
          const bool adjacent = std::abs(i - j) == 1;
          const int ei = e(v, i), ej = e(v, j);
          ++rep.checks;
          if (!adjacent) {
            if (e(ei, j) != e(ej, i)) fail("commutation e" + std::to_string(i) + "e" + std::to_string(j) + tag, v);
            if (ei >= 0 && (eps(ei, j) != eps(v, j) || ph(ei, j) != ph(v, j)))
              fail("non-adjacent string change " + std::to_string(i) + "," + std::to_string(j) + tag, v);
            continue;
          }
          if (ei >= 0) {
            bool a = eps(ei, j) == eps(v, j) && ph(ei, j) == ph(v, j) - 1;
            bool b = eps(ei, j) == eps(v, j) + 1 && ph(ei, j) == ph(v, j);
            if (a == b) fail("dichotomy i=" + std::to_string(i) + " j=" + std::to_string(j) + tag, v);
          }
          if (ei >= 0 && ej >= 0 && eps(ei, j) == eps(v, j)) {
            if (e(ei, j) != e(ej, i)) fail("commutation i=" + std::to_string(i) + " j=" + std::to_string(j) + tag, v);
            if (ph(ej, i) != ph(v, i)) fail("phi preserved i=" + std::to_string(i) + " j=" + std::to_string(j) + tag, v);
            if (eps(ej, i) != eps(v, i) + 1) fail("eps increment i=" + std::to_string(i) + " j=" + std::to_string(j) + tag, v);
          }
          if (ej >= 0 && eps(ej, i) == eps(v, i) + 1) {
            int eij = e(ej, i);
            if (eij < 0 || eps(eij, j) != eps(v, j) - 1)
              fail("eps drop i=" + std::to_string(i) + " j=" + std::to_string(j) + tag, v);
          }
          if (ei >= 0 && ej >= 0 && eps(ei, j) == eps(v, j) + 1 && eps(ej, i) == eps(v, i) + 1) {
            int lhs = e(e(e(ei, j), j), i);
            int rhs = e(e(e(ej, i), i), j);
            if (lhs < 0 || lhs != rhs) fail("octagon i=" + std::to_string(i) + " j=" + std::to_string(j) + tag, v);
          }
        }
  }
  return rep;
}

/// DOT export: one node per vertex labelled by its text form, f-edges labelled by index.
template <class X, class Label>
std::string to_dot(const CrystalGraph<X>& g, Label label) {
  auto esc = [](std::string s) {
    std::string out;
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      if (ch == '\n') {
        out += "\\n";
        continue;
      }
      out += ch;
    }
    return out;
  };
  std::string s = "digraph crystal {\n";
  for (int v = 0; v < g.size(); ++v)
    s += "  n" + std::to_string(v) + " [label=\"" + esc(label(g.vertices[static_cast<std::size_t>(v)])) + "\"];\n";
  for (const auto& e : g.edges)
    s += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" + std::to_string(e.index) + "\"];\n";
  return s + "}\n";
}

/// Adjacency text: one `<src> -i-> <dst>` line per f-edge, grouped by source vertex.
template <class X, class Label>
std::string to_adjacency(const CrystalGraph<X>& g, Label label) {
  std::string s;
  for (const auto& e : g.edges)
    s += label(g.vertices[static_cast<std::size_t>(e.from)]) + " -" + std::to_string(e.index) + "-> " +
         label(g.vertices[static_cast<std::size_t>(e.to)]) + "\n";
  return s;
}

} // namespace sptab
