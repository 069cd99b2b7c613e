#pragma once

// Covering-graph construction. A colored graph is a quotient; the lift
// rebuilds the cover: the full finite cover for cyclic/reflection colorings
// (k·n vertices, deck action free), and a windowed truncation for Z^2
// colorings (the infinite periodic cover cut to a box, boundary-crossing
// edges excluded — no wraparound). Lift vertices are ordered
// lexicographically by (base vertex, group element) for deterministic output.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "colored_graph.hpp"
#include "pebble.hpp"
#include "sparsity.hpp"

namespace rigi {

struct LiftVertexLabel {
  int base = 0;
  GroupElement deck;  // the group element indexing this fiber point
};

struct LiftGraph {
  int n = 0;
  std::vector<PlainEdge> edges;
  std::vector<LiftVertexLabel> labels;                // size n, lex by (base, element)
  std::optional<std::array<int64_t, 4>> window;       // {x0, x1, y0, y1}, inclusive
};

// Full cover of a cyclic or reflection colored graph: vertex (b, r) has id
// b*k + r; each edge (u, v, c) lifts to k edges (u, r) -> (v, r + c mod k).
inline LiftGraph lift_finite(const ColoredGraph& g) {
  if (g.tag.kind != GroupKind::Cyclic && g.tag.kind != GroupKind::Reflection)
    throw std::invalid_argument("lift_finite requires a cyclic or reflection coloring");
  g.validate();
  const int k = g.tag.rotation_order();
  LiftGraph out;
  out.n = k * g.n;
  out.labels.reserve(out.n);
  for (int b = 0; b < g.n; ++b)
    for (int r = 0; r < k; ++r) out.labels.push_back({b, {g.tag, {0, 0}, r}});
  out.edges.reserve(k * g.edges.size());
  for (const auto& e : g.edges)
    for (int r = 0; r < k; ++r)
      out.edges.push_back({e.u * k + r, e.v * k + (r + e.color.r) % k});
  return out;
}

// Windowed cover of a Z^2 colored graph: vertex (b, t) for every lattice
// point t in the box; an edge is kept only when both endpoints fall inside.
inline LiftGraph lift_window(const ColoredGraph& g, int64_t x0, int64_t x1,
                             int64_t y0, int64_t y1) {
  if (g.tag.kind != GroupKind::Z2)
    throw std::invalid_argument("lift_window requires a Z2-colored graph");
  if (x1 < x0 || y1 < y0) throw std::invalid_argument("lift_window: empty box");
  g.validate();
  const int64_t w = x1 - x0 + 1, h = y1 - y0 + 1;
  if (w * h * g.n > 2'000'000)
    throw std::invalid_argument("lift_window: box too large");
  LiftGraph out;
  out.window = {{x0, x1, y0, y1}};
  out.n = (int)(w * h * g.n);
  out.labels.reserve(out.n);
  for (int b = 0; b < g.n; ++b)
    for (int64_t x = x0; x <= x1; ++x)
      for (int64_t y = y0; y <= y1; ++y)
        out.labels.push_back({b, {g.tag, {x, y}, 0}});
  auto id = [&](int b, int64_t x, int64_t y) {
    return (int)(((int64_t)b * w + (x - x0)) * h + (y - y0));
  };
  for (const auto& e : g.edges)
    for (int64_t x = x0; x <= x1; ++x)
      for (int64_t y = y0; y <= y1; ++y) {
        int64_t xx = x + e.color.t[0], yy = y + e.color.t[1];
        if (xx < x0 || xx > x1 || yy < y0 || yy > y1) continue;
        out.edges.push_back({id(e.u, x, y), id(e.v, xx, yy)});
      }
  return out;
}

inline int lift_component_count(const LiftGraph& lg) {
  std::vector<int> parent(lg.n);
  for (int i = 0; i < lg.n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = lg.n;
  for (const auto& e : lg.edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) { parent[a] = b; --comps; }
  }
  return comps;
}

// Components meeting the margin-shrunk window (boundary artifacts excluded).
inline int lift_interior_component_count(const LiftGraph& lg, int64_t margin) {
  if (!lg.window) throw std::invalid_argument("interior count needs a windowed lift");
  auto [x0, x1, y0, y1] = *lg.window;
  std::vector<int> parent(lg.n);
  for (int i = 0; i < lg.n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : lg.edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[a] = b;
  }
  std::vector<char> counted(lg.n, 0);
  int comps = 0;
  for (int i = 0; i < lg.n; ++i) {
    const auto& t = lg.labels[i].deck.t;
    if (t[0] < x0 + margin || t[0] > x1 - margin || t[1] < y0 + margin ||
        t[1] > y1 - margin)
      continue;
    int r = find(i);
    if (!counted[r]) { counted[r] = 1; ++comps; }
  }
  return comps;
}

// Reduce a Z-colored graph to a Z/k-colored one (colors taken mod k); a
// cyclic-colored graph with the same k passes through unchanged.
inline ColoredGraph reduce_to_cyclic(const ColoredGraph& g, int k) {
  if (k < 2) throw std::invalid_argument("reduce_to_cyclic: k must be >= 2");
  if (g.tag.kind == GroupKind::Cyclic && g.tag.k == k) return g;
  if (g.tag.kind != GroupKind::Z)
    throw std::invalid_argument("reduce_to_cyclic requires a Z-colored graph");
  ColoredGraph out;
  out.tag = {GroupKind::Cyclic, k};
  out.n = g.n;
  for (const auto& e : g.edges) {
    int r = (int)(((e.color.t[0] % k) + k) % k);
    out.edges.push_back({e.u, e.v, {out.tag, {0, 0}, r}});
  }
  return out;
}

inline bool is_prime(int k) {
  if (k < 2) return false;
  for (int d = 2; (int64_t)d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

struct ConeLiftCheck {
  bool cone_tight = false;  // quotient side: cone-Laman-tight
  bool lift_ok = false;     // cover side: (2,3)-sparse with 2*k*n - k edges
  int lift_n = 0, lift_m = 0;
  bool agree() const { return cone_tight == lift_ok; }
};

// Both sides of the quotient/cover equivalence, no primality guard — used to
// exhibit small-k failures as well as to verify the guarded cases.
inline ConeLiftCheck cone_lift_detail(const ColoredGraph& g) {
  if (g.tag.kind != GroupKind::Cyclic)
    throw std::invalid_argument("cone_lift_detail requires a cyclic coloring");
  ConeLiftCheck out;
  out.cone_tight = family_tight(g, {Family::ConeLaman});
  LiftGraph lg = lift_finite(g);
  out.lift_n = lg.n;
  out.lift_m = (int)lg.edges.size();
  out.lift_ok = out.lift_m == 2 * lg.n - g.tag.k &&
                pebble_sparse(lg.n, lg.edges, 2, 3);
  return out;
}

// Decides cone-Laman-tightness through the cover (k >= 3 prime only; the
// equivalence genuinely fails at k = 2) and cross-asserts the quotient side.
inline bool cone_lift_check(const ColoredGraph& g) {
  if (g.tag.kind != GroupKind::Cyclic)
    throw std::invalid_argument("cone_lift_check requires a cyclic coloring");
  if (g.tag.k < 3 || !is_prime(g.tag.k))
    throw std::invalid_argument("cone_lift_check supports only prime k >= 3");
  ConeLiftCheck d = cone_lift_detail(g);
  if (!d.agree())
    throw std::logic_error("cone/cover equivalence violated on this input");
  return d.cone_tight;
}

}  // namespace rigi
