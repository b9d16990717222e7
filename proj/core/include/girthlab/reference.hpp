#pragma once
// Straightforward reference implementations used to cross-check the
// optimized analysis routines on small inputs.  Deliberately written with
// different algorithms and no shared code with analysis.cpp: girth by
// per-edge removal, diameter by Floyd-Warshall, path counting by plain
// exhaustive DFS, suspension search by explicit subset enumeration.

#include <cstdint>

#include "girthlab/graph.hpp"

namespace girthlab {

// UINT32_MAX when acyclic.
uint32_t ref_girth(const Graph& G);

// Floyd-Warshall; throws std::invalid_argument when disconnected.
uint32_t ref_diameter(const Graph& G);

// Simple u-v paths of length L-1 avoiding u and v internally.
uint64_t ref_cycles_through_edge(const Graph& G, uint32_t u, uint32_t v,
                                 uint32_t L);

bool ref_has_cycle_of_length(const Graph& G, uint32_t L);

// Enumerates every (2k+1)-subset, every apex choice in it, and every
// cyclic arrangement of the rest; true iff none forms a suspended
// 2k-cycle.  Explicit triple storage only.
bool ref_suspension_free(const TripleSystem& H, int k);

} // namespace girthlab
