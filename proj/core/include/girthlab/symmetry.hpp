#pragma once
// Coordinate automorphisms of the triple system family (characteristic 3):
// five one-parameter kinds acting identically on every part, chains of
// them, greedy normalization of a vertex to (a1, 0, ..., 0), the link
// scaling map, and the two-link classification pipeline.
//
// Index conventions for the generator tables: sources with index 0 or
// negative resolve to constants ((0,0) and (0,0)' to -1; (0,1), (1,0) to
// the first coordinate; (1,1)' to (1,1)); rows whose source index drops
// below its floor leave the coordinate fixed.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "girthlab/analysis.hpp"
#include "girthlab/dseries.hpp"
#include "girthlab/field.hpp"

namespace girthlab {

enum class AutoKind {
  T11,       // t_{1,1}
  TUpper,    // t_{m,m+1}, m >= 1
  TLower,    // t_{m+1,m}, m >= 1
  TDiag,     // t_{m,m},   m >= 2
  TDiagPrime // t'_{m,m},  m >= 2
};

struct AutoSpec {
  AutoKind kind = AutoKind::T11;
  int m = 1;
  Scalar x = 0;
  bool operator==(const AutoSpec&) const = default;
};

// Applied left to right (chain[0] first).
using AutoChain = std::vector<AutoSpec>;

// One map application: every coordinate position picks up source*x where
// the source is read from the ORIGINAL vector (simultaneous update).
// Works on any side's coordinates; the pattern is side-independent.
std::vector<Scalar> apply_auto(const AutoSpec& spec, std::span<const Scalar> v,
                               const Field& F);
std::vector<Scalar> apply_chain(const AutoChain& chain,
                                std::span<const Scalar> v, const Field& F);

// spec(x) o spec(-x) = id; a chain inverts by reversing and negating.
AutoChain inverse_chain(const AutoChain& chain, const Field& F);

// Greedy normalization: zeroes positions 2..s+1 in order, one generator
// per position (each later generator fixes all earlier positions).
struct NormalizeResult {
  AutoChain chain;
  std::vector<Scalar> image;
};
NormalizeResult normalize_vertex(std::span<const Scalar> a, int s,
                                 const Field& F);

// Exhaustive or sampled verification that the chain preserves the
// hyperedge relations of the k-truncation and satisfies the inverse law.
// Throws std::invalid_argument unless char(F) = 3.  sample = 0 means
// exhaustive (allowed when q^{2k+1} <= 10^6).
struct AutoCheckReport {
  bool ok = true;
  uint64_t checked = 0;
  std::string error; // names the violated relation index on failure
};
AutoCheckReport verify_auto(const AutoChain& chain, int k, const Field& F,
                            uint64_t sample = 0, uint64_t seed = 1);

// Division of position pos by a1^e(pos) with e = 1 for the first
// coordinate, 2i on the (i,i) and (i,i)' positions, 2i+1 on (i,i+1) and
// (i+1,i).  Takes the link at (a1, 0, ..., 0) to the link at
// (1, 0, ..., 0); requires a1 != 0.
std::vector<Scalar> link_scaling(Scalar a1, std::span<const Scalar> v,
                                 const Field& F);

// Chain serialization, right-to-left composition notation with tokens
// kind(m;x), e.g. "t12(1;1)" then "t11(;2)" prints as
// "t12(1;1)∘t11(;2)".  An empty chain prints as "id".
std::string print_chain(const AutoChain& chain);
AutoChain parse_chain(const std::string& s);

// Two-link classification of a triple-system vertex (characteristic 3):
// rotate the vertex to part C, normalize all but the first coordinate,
// then compare the link either to D(k,q) directly (a1 = 0) or to
// D'(k,q) through the link scaling and the first-coordinate shift by -1
// (a1 != 0).  Every intermediate step is certified with verify_iso_map.
struct LinkClassification {
  bool ok = false;
  std::string kind;    // "D" or "Dprime"
  int rotations = 0;   // part rotations applied to land in C
  AutoChain chain;
  Scalar a1 = 0;
  std::string error;
};
LinkClassification classify_link(const TripleSystem& H, uint32_t v,
                                 const Graph& Dk, const Graph& Dpk);

} // namespace girthlab
