#pragma once
// Structural analysis: exact girth (optionally capped), exact diameter,
// cycle counting and detection, suspension-freeness of triple systems,
// isomorphism certificate checking, and invariant signatures.
//
// All routines are deterministic: results are independent of the thread
// count, which only partitions work whose reduction (min/max/sum) is
// order-insensitive.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "girthlab/dseries.hpp"
#include "girthlab/graph.hpp"

namespace girthlab {

// Worker threads used by the analysis routines.  Defaults to the
// GIRTHLAB_THREADS environment variable if set, else the hardware
// concurrency.
int current_threads();
void set_threads(int t);

struct GirthResult {
  bool exact = true;
  // Exact girth when exact; otherwise cap+1, certifying girth >= value.
  // UINT32_MAX with exact=true means acyclic.
  uint32_t value = UINT32_MAX;
};

// Exact girth via truncated BFS from every vertex with a running upper
// bound.  cap = 0 means uncapped; with a cap the scan is truncated so the
// result is exact whenever the girth is <= cap.
GirthResult girth(const Graph& G, uint32_t cap = 0);

// Exact diameter of a connected graph (throws std::invalid_argument if
// disconnected).  Double sweep lower bound, then eccentricity scan from
// the top BFS levels down, skipping levels once 2(i-1) cannot exceed the
// bound.
uint32_t diameter(const Graph& G);

// Number of simple cycles of length exactly L through the edge {u,v}
// (equivalently, simple u-v paths of length L-1 with internal vertices
// distinct from both endpoints).
uint64_t cycles_through_edge(const Graph& G, uint32_t u, uint32_t v, uint32_t L);

// Length of the shortest cycle through the edge {u,v}; 0 if none.
uint32_t min_cycle_through_edge(const Graph& G, uint32_t u, uint32_t v);

struct CycleWitness {
  bool found = false;
  std::vector<uint32_t> cycle; // vertex ids in cycle order, size L
};

// Does G contain a simple cycle of length exactly L?  Exhaustive
// depth-limited DFS with canonical-start pruning (cycles are searched
// from their minimum vertex); returns the first witness in that order.
CycleWitness has_cycle_of_length(const Graph& G, uint32_t L);

struct SuspensionWitness {
  bool free = true;
  uint32_t apex = 0;
  std::vector<uint32_t> cycle; // triple-system vertex ids, size 2k
};

// Checks that no vertex link contains a 2k-cycle (no suspended cycle
// \tilde C_{2k}).  Apexes are scanned in ascending id order.
SuspensionWitness is_suspension_free(const TripleSystem& H, int k);

struct IsoReport {
  bool ok = true;
  std::string error;
};

// Verifies that `map` (global id -> global id) is a graph isomorphism
// from G onto H: a bijection with every G-edge mapped to an H-edge and
// |E(G)| == |E(H)|.
IsoReport verify_iso_map(const Graph& G, const Graph& H,
                         const std::vector<uint32_t>& map);

struct InvariantSignature {
  std::vector<uint32_t> part_sizes;
  std::vector<std::pair<uint32_t, uint64_t>> degrees; // (degree, count)
  bool girth_exact = true;
  uint32_t girth_value = 0;
  uint32_t base_vertex = 0;
  uint32_t base_edge_to = 0;
  uint32_t diameter_of_base_component = 0;
  uint32_t min_cycle_through_base_edge = 0;
  uint64_t cycles_at_min_length = 0;
  bool operator==(const InvariantSignature&) const = default;
  std::string to_string() const;
};

// Signature relative to base vertex 0 and its first incident edge.
InvariantSignature signature(const Graph& G, uint32_t girth_cap = 0);

} // namespace girthlab
