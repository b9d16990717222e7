#pragma once
// The D-series families over GF(q): the bipartite graphs D(k,q) and
// D'(k,q) and the 3-partite 3-graph D3(k,q).  Both parts (all three parts
// for D3) are coordinate tuples in F_q^k under the scheme of coords.hpp;
// adjacency is cut out by k-1 polynomial relations that are triangular:
// relation r only reads positions <= r+1 and determines position r+1 of
// any one side from the other side(s) and a free first coordinate.

#include <cstdint>
#include <span>
#include <vector>

#include "girthlab/coords.hpp"
#include "girthlab/field.hpp"
#include "girthlab/graph.hpp"

namespace girthlab {

enum class DFamily { D, Dprime, D3 };
enum class Side : uint8_t { A = 0, B = 1, C = 2 };

struct DVertex {
  Side side = Side::A;
  std::vector<Scalar> coords;
  bool operator==(const DVertex&) const = default;
};

// One monomial of a relation: sign * product of up to two coordinates,
// each addressed as (side, 1-based position).
struct RelTerm {
  bool negate = false;
  int nfactors = 1;
  uint8_t side[2] = {0, 0};
  int16_t pos[2] = {0, 0};
};

struct Relation {
  int index = 0;    // 1-based r; targets position r+1 on every side
  std::vector<RelTerm> terms; // includes the linear target terms
};

// Compiled relation list for (family, k).  Verifies the triangular
// structure on construction (throws std::logic_error if violated).
class RelationProgram {
public:
  static RelationProgram make(DFamily family, int k);
  DFamily family;
  int k = 0;
  int sides = 2; // 3 for D3
  std::vector<Relation> relations; // k-1 of them

  // Evaluates relation r on the tuple of coordinate vectors.
  Scalar eval(const Field& F, int r,
              std::span<const Scalar* const> sides_coords) const;
  // True if all k-1 relations vanish.
  bool satisfied(const Field& F,
                 std::span<const Scalar* const> sides_coords) const;
  // Solves positions 2..k of side `solve_side` given its first coordinate
  // and complete coordinates of the other side(s); writes into out.
  void solve(const Field& F, int solve_side,
             std::span<const Scalar* const> sides_coords, Scalar first,
             Scalar* out) const;
};

// ---- bipartite families ----

// D(k,q) or D'(k,q): parts A and B of size q^k, vertex ids are big-endian
// tuple encodings, edges solved per (a, b1).  Throws if q^k > 2e7.
Graph build_bipartite(DFamily family, int k, const Field& F);

// B-side neighbor of a with first coordinate b1 (and the symmetric map).
std::vector<Scalar> solve_neighbor(DFamily family, int k, const Field& F,
                                   std::span<const Scalar> a, Scalar b1);
std::vector<Scalar> solve_neighbor_a(DFamily family, int k, const Field& F,
                                     std::span<const Scalar> b, Scalar a1);

// ---- the 3-graph ----

// D3(k,q): parts A, B, C of size q^k, hyperedges {a, b, c} solved per
// (a, b, c1); q^{2k+1} hyperedges.  Explicit storage when the hyperedge
// count is at most explicit_limit, implicit (regenerated on demand)
// otherwise.
TripleSystem build_triple_system(int k, const Field& F,
                                 uint64_t explicit_limit = 100000000);

// Completes the hyperedge in cyclic role order: given coordinates of the
// side preceding and the side following, and the first coordinate of the
// remaining side.  For roles (a, b) it returns c; by the cyclic symmetry
// of the relations, third_of(b, c, a1) returns a and third_of(c, a, b1)
// returns b.
std::vector<Scalar> solve_third(int k, const Field& F,
                                std::span<const Scalar> u,
                                std::span<const Scalar> v, Scalar w1);

// Membership test for a hyperedge given as per-part coordinate vectors.
bool is_hyperedge(int k, const Field& F, std::span<const Scalar> a,
                  std::span<const Scalar> b, std::span<const Scalar> c);

// Link of a vertex: the graph on the remaining vertices whose edges are
// the hyperedges through v.  For 3-partite systems the result is
// bipartite on the two remaining parts (full vertex sets); for plain
// systems it is a one-part graph on V minus v.  Works in both explicit
// and implicit modes.
Graph link_of(const TripleSystem& H, uint32_t v);

// The cyclic part rotation A->B->C->A on a D3 vertex (an automorphism of
// the triple system).
DVertex rotate_part(const DVertex& v);

// ---- explicit coordinate maps ----

// The triangular change of coordinates taking D'(k,q) vertices to D(k,q)
// vertices, defined for k <= 6.  Applied identically on both parts.
std::vector<Scalar> table2_map(std::span<const Scalar> v, const Field& F);

// Adds delta to the first coordinate, fixing the rest.  In characteristic
// 3 this takes solutions of the D'(k,q) relations to solutions of the
// link relations at the all-but-first-zero vertex (and back).
std::vector<Scalar> shift_map(std::span<const Scalar> v, const Field& F,
                              int delta);

// Vertex-id bijection induced by a coordinate map applied to both parts
// of a bipartite family graph (sizes must match).
std::vector<uint32_t> coordinate_bijection(
    const Graph& from, const Graph& to, int k, const Field& F,
    std::vector<Scalar> (*coord_map)(std::span<const Scalar>, const Field&));

} // namespace girthlab
