#pragma once

// Colored (gain) graphs: finite directed multigraphs, loops allowed, each
// edge carrying a group element. Reversing an edge inverts its color. The
// central invariant is the rho image of a connected component: the subgroup
// generated by the colors of fundamental cycles relative to a spanning tree
// (equivalently, the image of pi_1 under the coloring homomorphism, up to
// conjugacy — which is all the counts below depend on).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fp61.hpp"
#include "group.hpp"
#include "subgroup.hpp"

namespace rigi {

struct Edge {
  int u = 0, v = 0;     // directed u -> v
  GroupElement color;   // traversing v -> u contributes the inverse
};

struct ColoredGraph {
  GroupTag tag;
  int n = 0;
  std::vector<Edge> edges;

  void validate() const {
    validate_tag(tag);
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (const auto& e : edges) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (!(e.color.tag == tag))
        throw std::invalid_argument("edge color tag differs from graph tag");
      validate_element(e.color);
    }
  }
  int m() const { return (int)edges.size(); }
};

// Connected components (edge direction ignored). Returns component id per
// vertex, ids dense from 0, ordered by smallest contained vertex.
inline std::vector<int> components(const ColoredGraph& g) {
  std::vector<int> parent(g.n);
  for (int i = 0; i < g.n; ++i) parent[i] = i;
  std::vector<int> comp(g.n, -1);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  int next = 0;
  for (int v = 0; v < g.n; ++v) {
    int root = find(v);
    if (comp[root] < 0) comp[root] = next++;
    comp[v] = comp[root];
  }
  return comp;
}

struct ComponentRho {
  std::vector<int> vertices;            // ascending
  int base = 0;                         // spanning-tree root
  std::vector<GroupElement> generators; // one per non-tree edge, in edge order
};

/*
 * rho image of every component. For each component a spanning tree is grown
 * by depth-first search from the smallest-index vertex (or, when `rng` is
 * given, from a random vertex with shuffled neighbour order — the resulting
 * subgroup must be the same up to conjugacy, which the invariants can't see;
 * tests exercise exactly that). Each vertex w gets the color g_w of the tree
 * path base -> w; a non-tree edge (u, v, c) then contributes the fundamental
 * cycle color  g_u * c * g_v^(-1).
 *
 * For abelian tags this reduces to the signed color sum around the cycle.
 */
inline std::vector<ComponentRho> rho_image(const ColoredGraph& g, SplitMix64* rng = nullptr) {
  g.validate();
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (edge id, sign)
  for (int i = 0; i < g.m(); ++i) {
    adj[g.edges[i].u].push_back({i, +1});
    if (g.edges[i].v != g.edges[i].u) adj[g.edges[i].v].push_back({i, -1});
  }
  if (rng)
    for (auto& lst : adj)
      for (size_t i = lst.size(); i > 1; --i)
        std::swap(lst[i - 1], lst[rng->below(i)]);

  std::vector<int> comp = components(g);
  int nc = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<ComponentRho> out(nc);
  for (int v = 0; v < g.n; ++v) out[comp[v]].vertices.push_back(v);

  std::vector<char> visited(g.n, 0);
  std::vector<char> tree_edge(g.m(), 0);
  std::vector<GroupElement> potential(g.n, identity(g.tag));

  for (int c = 0; c < nc; ++c) {
    auto& cr = out[c];
    int base = rng ? cr.vertices[rng->below(cr.vertices.size())] : cr.vertices.front();
    cr.base = base;
    // iterative DFS
    std::vector<int> stack{base};
    visited[base] = 1;
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (auto [ei, sign] : adj[w]) {
        const Edge& e = g.edges[ei];
        int other = sign > 0 ? e.v : e.u;
        if (visited[other] || tree_edge[ei]) continue;
        if (other == w) continue;  // loop, never a tree edge
        tree_edge[ei] = 1;
        visited[other] = 1;
        GroupElement step = sign > 0 ? e.color : invert(e.color);
        potential[other] = compose(potential[w], step);
        stack.push_back(other);
      }
    }
  }
  for (int i = 0; i < g.m(); ++i) {
    if (tree_edge[i]) continue;
    const Edge& e = g.edges[i];
    GroupElement gen =
        compose(compose(potential[e.u], e.color), invert(potential[e.v]));
    out[comp[e.u]].generators.push_back(gen);
  }
  return out;
}

// Lambda(G) = subgroup generated by the translation subgroups of every
// component's rho image.
inline SubgroupDescription graph_translation_subgroup(const ColoredGraph& g) {
  SubgroupDescription acc{g.tag, {}};
  for (const auto& cr : rho_image(g)) {
    SubgroupDescription lam = translation_subgroup({g.tag, cr.generators});
    for (const auto& e : lam.generators)
      if (!e.is_identity()) acc.generators.push_back(e);
  }
  return acc;
}

// Scale all colors by an integer q (abelian translation tags only).
inline ColoredGraph multiply_colors(const ColoredGraph& g, int64_t q) {
  if (g.tag.kind != GroupKind::Z2 && g.tag.kind != GroupKind::Z)
    throw std::invalid_argument("multiply_colors: tag must be Z2 or Z");
  ColoredGraph out = g;
  for (auto& e : out.edges) {
    e.color.t[0] *= q;
    e.color.t[1] *= q;
  }
  return out;
}

// Append loops with the given colors at one vertex; edge ids of the original
// graph are preserved, new loops get the next ids in order.
inline ColoredGraph add_loops(const ColoredGraph& g, int vertex,
                              const std::vector<GroupElement>& colors) {
  if (vertex < 0 || vertex >= g.n) throw std::invalid_argument("add_loops: no such vertex");
  ColoredGraph out = g;
  for (const auto& c : colors) {
    if (!(c.tag == g.tag)) throw std::invalid_argument("add_loops: color tag mismatch");
    out.edges.push_back({vertex, vertex, c});
  }
  return out;
}

}  // namespace rigi
