#pragma once

// (k, l)-sparsity of plain multigraphs via the pebble game, 0 <= l < 2k.
// A graph is (k, l)-sparse when every nonempty subgraph on n' vertices with
// m' edges has m' <= k n' - l, and (k, l)-tight when additionally m = kn - l.
//
// Pebble game: every vertex starts with k pebbles; inserting an edge (u, v)
// requires l + 1 pebbles present on {u, v} (gathered by reversing directed
// paths to free pebbles elsewhere), then consumes one, orienting the edge
// away from the vertex that paid. An edge set is independent in the
// (k, l)-count matroid iff every edge can be inserted. Loops need l + 1
// pebbles at a single vertex, so they are insertable only when l < k.

#include <cstdint>
#include <vector>

namespace rigi {

struct PlainEdge {
  int u = 0, v = 0;
};

struct PebbleGame {
  int k, l, n;
  std::vector<int> pebbles;
  std::vector<std::vector<int>> out;  // directed adjacency: out[v] = targets

  PebbleGame(int k_, int l_, int n_) : k(k_), l(l_), n(n_), pebbles(n_, k_), out(n_) {}

  // Try to bring one more pebble to `a` (or `b`) by reversing a path to some
  // vertex with a spare pebble; `a`, `b` themselves are excluded as sources.
  bool gather_one(int a, int b) {
    std::vector<int> prev(n, -2);
    std::vector<int> stack;
    prev[a] = -1;
    stack.push_back(a);
    if (b >= 0 && b != a) { prev[b] = -1; stack.push_back(b); }
    while (!stack.empty()) {
      int w = stack.back();
      stack.pop_back();
      for (int x : out[w]) {
        if (prev[x] != -2) continue;
        prev[x] = w;
        if (pebbles[x] > 0) {
          // reverse the path x <- ... <- (a or b)
          --pebbles[x];
          int cur = x;
          while (prev[cur] >= 0) {
            int p = prev[cur];
            // remove edge p -> cur, add cur -> p
            auto& po = out[p];
            for (size_t i = 0; i < po.size(); ++i)
              if (po[i] == cur) { po[i] = po.back(); po.pop_back(); break; }
            out[cur].push_back(p);
            cur = p;
          }
          ++pebbles[cur];
          return true;
        }
        stack.push_back(x);
      }
    }
    return false;
  }

  bool insert(int u, int v) {
    if (u == v) {
      if (l >= k) return false;
      while (pebbles[u] < l + 1)
        if (!gather_one(u, -1)) return false;
      --pebbles[u];
      out[u].push_back(u);
      return true;
    }
    while (pebbles[u] + pebbles[v] < l + 1)
      if (!gather_one(u, v)) return false;
    if (pebbles[u] == 0) std::swap(u, v);
    --pebbles[u];
    out[u].push_back(v);
    return true;
  }
};

struct PebbleResult {
  bool sparse = false;          // all edges independent
  int rank = 0;                 // size of a maximal independent subset
  std::vector<char> in_basis;   // per input edge
};

inline PebbleResult pebble_run(int n, const std::vector<PlainEdge>& edges, int k, int l) {
  PebbleGame game(k, l, n);
  PebbleResult res;
  res.in_basis.assign(edges.size(), 0);
  res.sparse = true;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (game.insert(edges[i].u, edges[i].v)) {
      res.in_basis[i] = 1;
      ++res.rank;
    } else {
      res.sparse = false;
    }
  }
  return res;
}

inline bool pebble_sparse(int n, const std::vector<PlainEdge>& edges, int k, int l) {
  return pebble_run(n, edges, k, l).sparse;
}

inline bool pebble_tight(int n, const std::vector<PlainEdge>& edges, int k, int l) {
  return (int64_t)edges.size() == (int64_t)k * n - l && pebble_sparse(n, edges, k, l);
}

}  // namespace rigi
