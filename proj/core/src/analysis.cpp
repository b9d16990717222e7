#include "girthlab/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace girthlab {

namespace {

int g_threads = 0;

int env_threads() {
  if (const char* e = std::getenv("GIRTHLAB_THREADS")) {
    int v = std::atoi(e);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}

} // namespace

int current_threads() {
  if (g_threads <= 0) g_threads = env_threads();
  return g_threads;
}

void set_threads(int t) { g_threads = t; }

namespace {

// Static chunking: deterministic results require only that the per-chunk
// reductions commute (min/max/sum), which they do everywhere below.
template <class Body>
void parallel_chunks(uint64_t n, Body&& body) {
  int T = current_threads();
  if (n == 0) return;
  if (T <= 1 || n == 1) {
    body(uint64_t(0), n);
    return;
  }
  uint64_t chunk = (n + T - 1) / T;
  std::vector<std::thread> workers;
  for (int t = 0; t < T; ++t) {
    uint64_t b = uint64_t(t) * chunk, e = std::min(n, b + chunk);
    if (b >= e) break;
    workers.emplace_back([&body, b, e] { body(b, e); });
  }
  for (auto& w : workers) w.join();
}

void atomic_min(std::atomic<uint32_t>& a, uint32_t v) {
  uint32_t cur = a.load(std::memory_order_relaxed);
  while (v < cur && !a.compare_exchange_weak(cur, v)) {
  }
}

void atomic_max(std::atomic<uint32_t>& a, uint32_t v) {
  uint32_t cur = a.load(std::memory_order_relaxed);
  while (v > cur && !a.compare_exchange_weak(cur, v)) {
  }
}

// BFS scratch reusable across sources without O(n) clears.
struct BfsScratch {
  std::vector<uint32_t> dist, parent, queue, stamp;
  uint32_t epoch = 0;

  void init(uint32_t n) {
    dist.assign(n, 0);
    parent.assign(n, 0);
    stamp.assign(n, 0);
    queue.assign(n, 0);
    epoch = 0;
  }
  bool seen(uint32_t v) const { return stamp[v] == epoch; }
  void next_epoch() { ++epoch; }
};

// Depth needed so that truncated BFS (expanding nodes at depth < D only)
// detects every cycle of length <= X through the source.
uint32_t depth_for_cycles(uint32_t X) {
  if (X < 3) return 0;
  return X % 2 == 0 ? X / 2 : (X + 1) / 2;
}

} // namespace

GirthResult girth(const Graph& G, uint32_t cap) {
  const uint32_t nv = G.num_vertices();
  if (nv == 0) return {true, UINT32_MAX};
  const bool bip = G.num_parts == 2;
  // every cycle in a bipartite graph meets part A
  const uint64_t src_count = bip ? G.part_sizes[0] : nv;
  const uint32_t floor_len = bip ? 4 : 3;

  std::atomic<uint32_t> best{UINT32_MAX};

  parallel_chunks(src_count, [&](uint64_t lo, uint64_t hi) {
    BfsScratch S;
    S.init(nv);
    for (uint64_t s64 = lo; s64 < hi; ++s64) {
      uint32_t s = uint32_t(s64);
      uint32_t b = best.load(std::memory_order_relaxed);
      if (b <= floor_len) return;
      // look for cycles shorter than the current best, within the cap
      auto target = [&](uint32_t bst, uint32_t found) {
        uint64_t X = UINT64_MAX;
        if (bst != UINT32_MAX) X = bst - (bip ? 2 : 1);
        if (found != UINT32_MAX) X = std::min<uint64_t>(X, found - (bip ? 2 : 1));
        if (cap) X = std::min<uint64_t>(X, cap);
        return X;
      };
      uint64_t X0 = target(b, UINT32_MAX);
      if (X0 < 3) continue;

      S.next_epoch();
      S.dist[s] = 0;
      S.parent[s] = s;
      S.stamp[s] = S.epoch;
      uint32_t head = 0, tail = 0;
      S.queue[tail++] = s;
      uint32_t found = UINT32_MAX;
      while (head < tail) {
        uint32_t u = S.queue[head++];
        uint32_t du = S.dist[u];
        uint64_t X = target(best.load(std::memory_order_relaxed), found);
        if (X < 3) break;
        uint32_t D = X >= UINT32_MAX ? UINT32_MAX : depth_for_cycles(uint32_t(X));
        if (du >= D) break;
        for (uint32_t w : G.neighbors(u)) {
          if (w == S.parent[u]) continue;
          if (!S.seen(w)) {
            S.stamp[w] = S.epoch;
            S.dist[w] = du + 1;
            S.parent[w] = u;
            S.queue[tail++] = w;
          } else {
            uint32_t closure = du + S.dist[w] + 1;
            if (closure < found) found = closure;
          }
        }
      }
      if (found != UINT32_MAX) atomic_min(best, found);
    }
  });

  uint32_t b = best.load();
  if (cap && b > cap) return {false, cap + 1};
  return {true, b};
}

namespace {

// Full BFS; returns eccentricity, fills dist (UINT32_MAX = unreachable).
uint32_t bfs_ecc(const Graph& G, uint32_t s, std::vector<uint32_t>& dist,
                 std::vector<uint32_t>* parent = nullptr) {
  const uint32_t nv = G.num_vertices();
  dist.assign(nv, UINT32_MAX);
  if (parent) parent->assign(nv, UINT32_MAX);
  std::vector<uint32_t> queue(nv);
  uint32_t head = 0, tail = 0, ecc = 0;
  dist[s] = 0;
  queue[tail++] = s;
  while (head < tail) {
    uint32_t u = queue[head++];
    for (uint32_t w : G.neighbors(u)) {
      if (dist[w] != UINT32_MAX) continue;
      dist[w] = dist[u] + 1;
      if (parent) (*parent)[w] = u;
      ecc = std::max(ecc, dist[w]);
      queue[tail++] = w;
    }
  }
  return ecc;
}

uint32_t argmax_dist(const std::vector<uint32_t>& dist) {
  uint32_t bestv = 0, bestd = 0;
  for (uint32_t v = 0; v < dist.size(); ++v)
    if (dist[v] != UINT32_MAX && dist[v] > bestd) { bestd = dist[v]; bestv = v; }
  return bestv;
}

} // namespace

uint32_t diameter(const Graph& G) {
  const uint32_t nv = G.num_vertices();
  if (nv == 0) throw std::invalid_argument("diameter: empty graph");
  std::vector<uint32_t> dist, parent;
  bfs_ecc(G, 0, dist);
  for (uint32_t v = 0; v < nv; ++v)
    if (dist[v] == UINT32_MAX)
      throw std::invalid_argument("diameter: graph is disconnected");

  // double sweep
  uint32_t a = argmax_dist(dist);
  uint32_t lb0 = bfs_ecc(G, a, dist, &parent);
  uint32_t b = argmax_dist(dist);
  // midpoint of a shortest a-b path
  uint32_t r = b;
  for (uint32_t step = 0; step < lb0 / 2; ++step) r = parent[r];

  std::vector<uint32_t> rdist;
  uint32_t maxi = bfs_ecc(G, r, rdist);
  std::atomic<uint32_t> lb{std::max(lb0, maxi)};

  std::vector<std::vector<uint32_t>> levels(maxi + 1);
  for (uint32_t v = 0; v < nv; ++v) levels[rdist[v]].push_back(v);

  for (uint32_t i = maxi; i >= 1; --i) {
    if (2 * uint64_t(i) <= lb.load()) break; // pairs within levels <= i can't beat lb
    auto& level = levels[i];
    parallel_chunks(level.size(), [&](uint64_t lo, uint64_t hi) {
      std::vector<uint32_t> d;
      for (uint64_t j = lo; j < hi; ++j)
        atomic_max(lb, bfs_ecc(G, level[j], d));
    });
  }
  return lb.load();
}

uint64_t cycles_through_edge(const Graph& G, uint32_t u, uint32_t v, uint32_t L) {
  if (!G.has_edge(u, v))
    throw std::invalid_argument("cycles_through_edge: {u,v} is not an edge");
  if (L < 3) return 0;
  const uint32_t nv = G.num_vertices();
  const bool bip = G.num_parts == 2;
  if (bip && L % 2) return 0;

  std::vector<uint32_t> dist_v;
  bfs_ecc(G, v, dist_v);

  // count simple u-v paths of length L-1 with internal vertices not in {u,v}
  std::vector<uint8_t> used(nv, 0);
  used[u] = used[v] = 1;
  struct Frame { uint32_t vertex; uint32_t next; };
  std::vector<Frame> stack;
  stack.push_back({u, 0});
  uint64_t count = 0;
  const uint32_t steps = L - 1; // edges on the path
  while (!stack.empty()) {
    Frame& f = stack.back();
    uint32_t depth = uint32_t(stack.size()) - 1; // edges used so far
    if (depth == steps - 1) {
      // one edge left: it must close into v
      if (G.has_edge(f.vertex, v)) ++count;
      used[f.vertex] = f.vertex == u || f.vertex == v ? 1 : 0;
      stack.pop_back();
      continue;
    }
    auto nb = G.neighbors(f.vertex);
    bool descended = false;
    while (f.next < nb.size()) {
      uint32_t w = nb[f.next++];
      if (used[w]) continue;
      uint32_t rem = steps - depth - 1; // edges left after stepping to w
      if (dist_v[w] > rem) continue;
      if (bip && (dist_v[w] % 2) != (rem % 2)) continue;
      used[w] = 1;
      stack.push_back({w, 0});
      descended = true;
      break;
    }
    if (!descended) {
      uint32_t x = f.vertex;
      stack.pop_back();
      if (x != u && x != v) used[x] = 0;
    }
  }
  return count;
}

uint32_t min_cycle_through_edge(const Graph& G, uint32_t u, uint32_t v) {
  if (!G.has_edge(u, v))
    throw std::invalid_argument("min_cycle_through_edge: {u,v} is not an edge");
  // BFS u -> v avoiding the edge {u,v}
  const uint32_t nv = G.num_vertices();
  std::vector<uint32_t> dist(nv, UINT32_MAX), queue(nv);
  uint32_t head = 0, tail = 0;
  dist[u] = 0;
  queue[tail++] = u;
  while (head < tail) {
    uint32_t x = queue[head++];
    for (uint32_t w : G.neighbors(x)) {
      if ((x == u && w == v) || (x == v && w == u)) continue;
      if (dist[w] != UINT32_MAX) continue;
      dist[w] = dist[x] + 1;
      if (w == v) return dist[w] + 1;
      queue[tail++] = w;
    }
  }
  return 0;
}

CycleWitness has_cycle_of_length(const Graph& G, uint32_t L) {
  const uint32_t nv = G.num_vertices();
  if (L < 3 || L > nv) return {};
  const bool bip = G.is_bipartite();
  if (bip && L % 2) return {};
  // a cycle's minimum vertex lies in part 0 (part-0 ids precede part-1)
  const uint64_t starts = G.num_parts == 2 ? G.part_sizes[0] : nv;

  std::atomic<uint32_t> found_start{UINT32_MAX};
  std::vector<uint32_t> witness;
  std::mutex witness_mu;

  parallel_chunks(starts, [&](uint64_t lo, uint64_t hi) {
    std::vector<uint32_t> dist;
    std::vector<uint8_t> used(nv, 0);
    struct Frame { uint32_t vertex; uint32_t next; };
    std::vector<Frame> stack;
    std::vector<uint32_t> path;
    for (uint64_t s64 = lo; s64 < hi; ++s64) {
      uint32_t s = uint32_t(s64);
      if (s >= found_start.load(std::memory_order_relaxed)) return;
      if (G.degree(s) < 2) continue;
      bfs_ecc(G, s, dist);
      // simple cycles with minimum vertex s, explored in ascending
      // neighbor order; orientation fixed by path[1] < closing vertex
      std::fill(used.begin(), used.end(), 0);
      used[s] = 1;
      stack.clear();
      stack.push_back({s, 0});
      path.assign(1, s);
      bool hit = false;
      while (!stack.empty() && !hit) {
        Frame& f = stack.back();
        uint32_t depth = uint32_t(stack.size()) - 1; // edges used
        if (depth == L - 1) {
          if (G.has_edge(f.vertex, s) && path[1] < f.vertex) {
            hit = true;
            break;
          }
          used[f.vertex] = 0;
          stack.pop_back();
          path.pop_back();
          continue;
        }
        auto nb = G.neighbors(f.vertex);
        bool descended = false;
        while (f.next < nb.size()) {
          uint32_t w = nb[f.next++];
          if (w <= s || used[w]) continue;
          uint32_t rem = L - depth - 1; // edges left to close at s
          if (dist[w] > rem) continue;
          if (bip && (dist[w] % 2) != (rem % 2)) continue;
          used[w] = 1;
          stack.push_back({w, 0});
          path.push_back(w);
          descended = true;
          break;
        }
        if (!descended) {
          used[f.vertex] = f.vertex == s;
          stack.pop_back();
          if (path.size() > 1) path.pop_back();
        }
      }
      if (hit) {
        std::lock_guard<std::mutex> lock(witness_mu);
        if (s < found_start.load()) {
          found_start.store(s);
          witness = path;
        }
        return;
      }
    }
  });

  if (found_start.load() == UINT32_MAX) return {};
  return {true, witness};
}

SuspensionWitness is_suspension_free(const TripleSystem& H, int k) {
  if (k < 2) throw std::invalid_argument("is_suspension_free: k must be >= 2");
  const uint32_t nv = H.num_vertices();
  for (uint32_t x = 0; x < nv; ++x) {
    Graph L = link_of(H, x);
    CycleWitness w = has_cycle_of_length(L, uint32_t(2 * k));
    if (!w.found) continue;
    SuspensionWitness out;
    out.free = false;
    out.apex = x;
    if (H.num_parts == 3) {
      int part = H.part_of(x);
      int p1 = part == 0 ? 1 : 0;
      int p2 = part == 2 ? 1 : 2;
      uint32_t size1 = H.part_sizes[p1];
      for (uint32_t v : w.cycle)
        out.cycle.push_back(v < size1 ? H.part_begin(p1) + v
                                      : H.part_begin(p2) + (v - size1));
    } else {
      for (uint32_t v : w.cycle) out.cycle.push_back(v >= x ? v + 1 : v);
    }
    return out;
  }
  return {};
}

IsoReport verify_iso_map(const Graph& G, const Graph& H,
                         const std::vector<uint32_t>& map) {
  auto fail = [](std::string msg) { return IsoReport{false, std::move(msg)}; };
  const uint32_t nv = G.num_vertices();
  if (nv != H.num_vertices()) return fail("vertex counts differ");
  if (map.size() != nv) return fail("map size does not match vertex count");
  if (G.num_edges() != H.num_edges()) return fail("edge counts differ");
  std::vector<uint32_t> preimage(nv, UINT32_MAX);
  for (uint32_t u = 0; u < nv; ++u) {
    if (map[u] >= nv) return fail("image out of range at vertex " + std::to_string(u));
    if (preimage[map[u]] != UINT32_MAX)
      return fail("not injective: vertices " + std::to_string(preimage[map[u]]) +
                  " and " + std::to_string(u) + " share image " +
                  std::to_string(map[u]));
    preimage[map[u]] = u;
  }
  for (uint32_t u = 0; u < nv; ++u) {
    for (uint32_t w : G.neighbors(u)) {
      if (G.num_parts == 2 ? G.part_of(u) != 0 : u > w) continue;
      if (!H.has_edge(map[u], map[w]))
        return fail("edge {" + std::to_string(u) + "," + std::to_string(w) +
                    "} maps to non-edge {" + std::to_string(map[u]) + "," +
                    std::to_string(map[w]) + "}");
    }
  }
  return {};
}

std::string InvariantSignature::to_string() const {
  std::ostringstream os;
  os << "parts=";
  for (size_t i = 0; i < part_sizes.size(); ++i)
    os << (i ? "," : "") << part_sizes[i];
  os << " degrees=";
  for (size_t i = 0; i < degrees.size(); ++i)
    os << (i ? "," : "") << degrees[i].first << "x" << degrees[i].second;
  os << " girth=" << (girth_exact ? "" : ">=") << girth_value;
  os << " diameter0=" << diameter_of_base_component;
  os << " base_edge=(" << base_vertex << "," << base_edge_to << ")";
  os << " min_cycle=" << min_cycle_through_base_edge;
  os << " count=" << cycles_at_min_length;
  return os.str();
}

InvariantSignature signature(const Graph& G, uint32_t girth_cap) {
  InvariantSignature S;
  S.part_sizes = G.part_sizes;
  S.degrees = G.degree_histogram();
  GirthResult g = girth(G, girth_cap);
  S.girth_exact = g.exact;
  S.girth_value = g.value;
  S.base_vertex = 0;
  Component C = component_of(G, 0);
  S.diameter_of_base_component = diameter(C.graph);
  if (G.degree(0) > 0) {
    uint32_t to = G.neighbors(0)[0];
    S.base_edge_to = to;
    S.min_cycle_through_base_edge = min_cycle_through_edge(G, 0, to);
    if (S.min_cycle_through_base_edge)
      S.cycles_at_min_length =
          cycles_through_edge(G, 0, to, S.min_cycle_through_base_edge);
  }
  return S;
}

} // namespace girthlab
