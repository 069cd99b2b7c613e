#pragma once

// Corpus generation: exhaustive enumeration of small colored multigraphs up
// to isomorphism, and seed-deterministic random sampling. Isomorphism here
// means relabeling vertices plus reorienting edges (reversing a non-loop
// inverts its color; a loop's color is only defined up to inversion).
//
// Canonical form: minimum over all vertex permutations (n <= 8) of the
// sorted, per-edge-normalized edge list, packed into a byte string. Edge
// normalization: u <= v (reversal inverts the color); loop colors take the
// lexicographically smaller of {c, c^{-1}}. Exhaustive streams are deduped by
// sorting the packed keys; output order is (n, key) ascending, so a fixed
// spec always yields the identical stream.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "colored_graph.hpp"
#include "fp61.hpp"
#include "group.hpp"

namespace rigi {

struct CorpusSpec {
  GroupTag tag;
  int max_n = 3;
  int max_m = 6;
  int color_bound = 1;      // translation coordinates range over [-bound, bound]
  bool exhaustive = true;
  int count = 0;            // random mode: number of graphs
  uint64_t seed = 0x5eed2026u;
};

// Every color with translation part in the box (and every rotation part).
inline std::vector<GroupElement> color_box(const GroupTag& tag, int bound) {
  std::vector<GroupElement> out;
  const int64_t b = bound;
  switch (tag.kind) {
    case GroupKind::Z2:
      for (int64_t x = -b; x <= b; ++x)
        for (int64_t y = -b; y <= b; ++y) out.push_back({tag, {x, y}, 0});
      break;
    case GroupKind::Z:
      for (int64_t x = -b; x <= b; ++x) out.push_back({tag, {x, 0}, 0});
      break;
    case GroupKind::Cyclic:
    case GroupKind::Reflection:
      for (int r = 0; r < tag.rotation_order(); ++r) out.push_back({tag, {0, 0}, r});
      break;
    case GroupKind::Gamma:
      for (int64_t x = -b; x <= b; ++x)
        for (int64_t y = -b; y <= b; ++y)
          for (int r = 0; r < tag.k; ++r) out.push_back({tag, {x, y}, r});
      break;
  }
  return out;
}

inline GroupElement normalize_loop_color(const GroupElement& c) {
  GroupElement inv = invert(c);
  return element_less(inv, c) ? inv : c;
}

inline Edge normalized_edge(int u, int v, const GroupElement& c) {
  if (u == v) return {u, u, normalize_loop_color(c)};
  if (u > v) return {v, u, invert(c)};
  return {u, v, c};
}

// Distinct normalized edge candidates on n labeled vertices.
inline std::vector<Edge> edge_candidates(const GroupTag& tag, int n, int bound) {
  std::vector<GroupElement> colors = color_box(tag, bound);
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u) {
    for (const auto& c : colors)
      if (!element_less(invert(c), c)) out.push_back({u, u, c});  // canonical loop reps
    for (int v = u + 1; v < n; ++v)
      for (const auto& c : colors) out.push_back({u, v, c});
  }
  return out;
}

namespace detail {

inline char pack_small(int64_t v) {
  if (v < -120 || v > 120)
    throw std::invalid_argument("canonical form: coordinate out of packing range");
  return (char)v;
}

inline bool edge_before(const Edge& a, const Edge& b) {
  if (a.u != b.u) return a.u < b.u;
  if (a.v != b.v) return a.v < b.v;
  return element_less(a.color, b.color);
}

}  // namespace detail

// Packed byte key: n, m, then (u, v, t0, t1, r) per edge in sorted order.
inline std::string edge_list_key(const ColoredGraph& g, std::vector<Edge>& scratch) {
  scratch.assign(g.edges.begin(), g.edges.end());
  for (auto& e : scratch) e = normalized_edge(e.u, e.v, e.color);
  std::sort(scratch.begin(), scratch.end(), detail::edge_before);
  std::string key;
  key.reserve(2 + scratch.size() * 5);
  key.push_back(detail::pack_small(g.n));
  key.push_back(detail::pack_small((int64_t)scratch.size()));
  for (const auto& e : scratch) {
    key.push_back(detail::pack_small(e.u));
    key.push_back(detail::pack_small(e.v));
    key.push_back(detail::pack_small(e.color.t[0]));
    key.push_back(detail::pack_small(e.color.t[1]));
    key.push_back(detail::pack_small(e.color.r));
  }
  return key;
}

inline std::string canonical_key(const ColoredGraph& g) {
  if (g.n > 8) throw std::invalid_argument("canonical_key supports n <= 8");
  std::vector<int> perm(g.n);
  for (int i = 0; i < g.n; ++i) perm[i] = i;
  std::string best;
  std::vector<Edge> scratch;
  ColoredGraph relabeled = g;
  do {
    for (size_t i = 0; i < g.edges.size(); ++i) {
      relabeled.edges[i].u = perm[g.edges[i].u];
      relabeled.edges[i].v = perm[g.edges[i].v];
      relabeled.edges[i].color = g.edges[i].color;
    }
    std::string key = edge_list_key(relabeled, scratch);
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best.empty()) best = edge_list_key(relabeled, scratch);  // n == 0
  return best;
}

inline ColoredGraph graph_from_key(const GroupTag& tag, const std::string& key) {
  ColoredGraph g;
  g.tag = tag;
  g.n = key.at(0);
  int m = key.at(1);
  for (int i = 0; i < m; ++i) {
    const char* p = key.data() + 2 + 5 * i;
    Edge e{p[0], p[1], {tag, {p[2], p[3]}, p[4]}};
    g.edges.push_back(e);
  }
  g.validate();
  return g;
}

inline ColoredGraph canonical_form(const ColoredGraph& g) {
  return graph_from_key(g.tag, canonical_key(g));
}

// Visit every non-decreasing index tuple of length m over [0, slots).
template <class F>
void for_each_multiset(int slots, int m, F&& fn) {
  if (m == 0) {
    std::vector<int> empty;
    fn(empty);
    return;
  }
  if (slots == 0) return;
  std::vector<int> idx(m, 0);
  for (;;) {
    fn(idx);
    int i = m - 1;
    while (i >= 0 && idx[i] == slots - 1) --i;
    if (i < 0) return;
    int v = idx[i] + 1;
    for (int j = i; j < m; ++j) idx[j] = v;
  }
}

inline int64_t multiset_count(int slots, int m) {
  // C(slots + m - 1, m), saturating at a large cap
  __int128 r = 1;
  for (int i = 1; i <= m; ++i) {
    r = r * (slots + m - i) / i;
    if (r > (__int128)1 << 40) return int64_t(1) << 40;
  }
  return (int64_t)r;
}

/*
 * Exhaustive isomorphism-representative stream for one vertex count:
 * enumerate all edge multisets of size <= max_m over the candidate list,
 * dedup by canonical key, emit in key order.
 */
inline std::vector<std::string> exhaustive_keys(const GroupTag& tag, int n, int max_m,
                                                int bound) {
  std::vector<Edge> cands = edge_candidates(tag, n, bound);
  int64_t total = 0;
  for (int m = 0; m <= max_m; ++m) total += multiset_count((int)cands.size(), m);
  if (total > 60'000'000)
    throw std::invalid_argument("corpus bounds too large for exhaustive enumeration");
  std::vector<std::string> keys;
  ColoredGraph g;
  g.tag = tag;
  g.n = n;
  for (int m = 0; m <= max_m; ++m) {
    g.edges.resize(m);
    for_each_multiset((int)cands.size(), m, [&](const std::vector<int>& idx) {
      for (int i = 0; i < m; ++i) g.edges[i] = cands[idx[i]];
      keys.push_back(canonical_key(g));
    });
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

inline ColoredGraph random_graph(const GroupTag& tag, int n, int m, int bound,
                                 SplitMix64& rng) {
  std::vector<GroupElement> colors = color_box(tag, bound);
  ColoredGraph g;
  g.tag = tag;
  g.n = n;
  for (int i = 0; i < m; ++i) {
    int u = (int)rng.below((uint64_t)n);
    int v = (int)rng.below((uint64_t)n);
    const GroupElement& c = colors[rng.below(colors.size())];
    g.edges.push_back(normalized_edge(u, v, c));
  }
  return g;
}

// Stream the corpus in deterministic order; exhaustive mode covers every
// n in [1, max_n] deduped up to isomorphism, random mode draws `count` graphs
// on max_n vertices with m uniform in [0, max_m].
inline void for_each_corpus_graph(const CorpusSpec& spec,
                                  const std::function<void(const ColoredGraph&)>& fn) {
  validate_tag(spec.tag);
  if (spec.max_n < 1 || spec.max_m < 0 || spec.color_bound < 0)
    throw std::invalid_argument("corpus bounds must be positive");
  if (spec.exhaustive) {
    for (int n = 1; n <= spec.max_n; ++n)
      for (const auto& key : exhaustive_keys(spec.tag, n, spec.max_m, spec.color_bound))
        fn(graph_from_key(spec.tag, key));
  } else {
    SplitMix64 rng(spec.seed);
    for (int i = 0; i < spec.count; ++i) {
      int m = (int)rng.below((uint64_t)spec.max_m + 1);
      fn(random_graph(spec.tag, spec.max_n, m, spec.color_bound, rng));
    }
  }
}

inline std::vector<ColoredGraph> corpus(const CorpusSpec& spec) {
  std::vector<ColoredGraph> out;
  for_each_corpus_graph(spec, [&](const ColoredGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace rigi
