#include "girthlab/reference.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace girthlab {
namespace {

// Shortest u-v distance with one edge {u,v} suppressed.
uint32_t dist_without_edge(const Graph& G, uint32_t u, uint32_t v) {
  std::vector<uint32_t> dist(G.num_vertices(), UINT32_MAX);
  std::vector<uint32_t> queue;
  dist[u] = 0;
  queue.push_back(u);
  for (size_t h = 0; h < queue.size(); ++h) {
    uint32_t x = queue[h];
    for (uint32_t w : G.neighbors(x)) {
      if ((x == u && w == v) || (x == v && w == u)) continue;
      if (dist[w] != UINT32_MAX) continue;
      dist[w] = dist[x] + 1;
      queue.push_back(w);
    }
  }
  return dist[v];
}

uint64_t count_paths(const Graph& G, uint32_t at, uint32_t target,
                     uint32_t edges_left, std::vector<uint8_t>& used) {
  if (edges_left == 1) return G.has_edge(at, target) ? 1 : 0;
  uint64_t total = 0;
  for (uint32_t w : G.neighbors(at)) {
    if (used[w]) continue;
    used[w] = 1;
    total += count_paths(G, w, target, edges_left - 1, used);
    used[w] = 0;
  }
  return total;
}

} // namespace

uint32_t ref_girth(const Graph& G) {
  // every shortest cycle survives as a shortest path once one of its
  // edges is suppressed
  uint32_t best = UINT32_MAX;
  for (uint32_t u = 0; u < G.num_vertices(); ++u)
    for (uint32_t v : G.neighbors(u)) {
      if (v < u) continue;
      uint32_t d = dist_without_edge(G, u, v);
      if (d != UINT32_MAX && d + 1 < best) best = d + 1;
    }
  return best;
}

uint32_t ref_diameter(const Graph& G) {
  const uint32_t n = G.num_vertices();
  if (n == 0) throw std::invalid_argument("ref_diameter: empty graph");
  const uint32_t INF = UINT32_MAX / 4;
  std::vector<std::vector<uint32_t>> d(n, std::vector<uint32_t>(n, INF));
  for (uint32_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (uint32_t v : G.neighbors(u)) d[u][v] = 1;
  }
  for (uint32_t m = 0; m < n; ++m)
    for (uint32_t u = 0; u < n; ++u)
      for (uint32_t v = 0; v < n; ++v)
        d[u][v] = std::min(d[u][v], d[u][m] + d[m][v]);
  uint32_t diam = 0;
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = 0; v < n; ++v) {
      if (d[u][v] >= INF)
        throw std::invalid_argument("ref_diameter: graph is disconnected");
      diam = std::max(diam, d[u][v]);
    }
  return diam;
}

uint64_t ref_cycles_through_edge(const Graph& G, uint32_t u, uint32_t v,
                                 uint32_t L) {
  if (!G.has_edge(u, v))
    throw std::invalid_argument("ref_cycles_through_edge: not an edge");
  if (L < 3) return 0;
  std::vector<uint8_t> used(G.num_vertices(), 0);
  used[u] = used[v] = 1;
  return count_paths(G, u, v, L - 1, used);
}

bool ref_has_cycle_of_length(const Graph& G, uint32_t L) {
  if (L < 3) return false;
  for (uint32_t u = 0; u < G.num_vertices(); ++u)
    for (uint32_t v : G.neighbors(u)) {
      if (v < u) continue;
      if (ref_cycles_through_edge(G, u, v, L)) return true;
    }
  return false;
}

bool ref_suspension_free(const TripleSystem& H, int k) {
  if (k < 2) throw std::invalid_argument("ref_suspension_free: k must be >= 2");
  if (H.implicit)
    throw std::invalid_argument("ref_suspension_free: explicit systems only");
  std::set<std::array<uint32_t, 3>> edges(H.triples.begin(), H.triples.end());
  auto is_edge = [&](uint32_t a, uint32_t b, uint32_t c) {
    std::array<uint32_t, 3> t = {a, b, c};
    std::sort(t.begin(), t.end());
    return edges.count(t) != 0;
  };

  const uint32_t n = H.num_vertices();
  const int m = 2 * k + 1;
  if (n < uint32_t(m)) return true;
  std::vector<uint32_t> sub(m);
  for (int i = 0; i < m; ++i) sub[i] = i;
  for (;;) {
    // every apex choice, every arrangement of the remaining 2k vertices
    for (int ai = 0; ai < m; ++ai) {
      std::vector<uint32_t> rest;
      for (int i = 0; i < m; ++i)
        if (i != ai) rest.push_back(sub[i]);
      std::sort(rest.begin(), rest.end());
      do {
        bool cyc = true;
        for (size_t i = 0; i < rest.size() && cyc; ++i)
          cyc = is_edge(sub[ai], rest[i], rest[(i + 1) % rest.size()]);
        if (cyc) return false;
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    int i = m - 1;
    while (i >= 0 && sub[i] == n - m + i) --i;
    if (i < 0) break;
    ++sub[i];
    for (int j = i + 1; j < m; ++j) sub[j] = sub[j - 1] + 1;
  }
  return true;
}

} // namespace girthlab
