#pragma once
// Projective constructions over GF(q): arcs in the hyperplane x1 = 0 of
// PG(t, q), the bipartite point-line incidence graphs they induce, Plücker
// line coordinates, and the coordinate maps onto the bipartite sum
// families H(k, q) and G(2^r, s).
//
// Projective points are (t+1)-tuples of homogeneous coordinates, 1-based
// in the prose, index 0 first in storage, normalized so the first nonzero
// coordinate is 1.

#include <cstdint>
#include <span>
#include <vector>

#include "girthlab/field.hpp"
#include "girthlab/graph.hpp"

namespace girthlab {

// Scales so the first nonzero coordinate becomes 1; throws on the zero
// vector.
std::vector<Scalar> proj_normalize(std::span<const Scalar> v, const Field& F);

// Normal rational curve arc in the hyperplane: points [0:1:x:...:x^{t-1}]
// for x in F, plus [0:...:0:1] when include_infinity (q+1 points with it,
// q without).
std::vector<std::vector<Scalar>> nrc_arc(int t, const Field& F,
                                         bool include_infinity);

// Characteristic-2 arc [0:1:x:x^{2^s}] in PG(3, 2^r); requires
// gcd(s, r) = 1 (throws otherwise).  q points.
std::vector<std::vector<Scalar>> frobenius_arc(const Field& F, int s);

// Arc test: every subset_size-subset of the points is linearly independent
// in the hyperplane coordinates (positions 2..t+1).  subset_size = 0 means
// t, the hyperplane's maximal rank.  All points must lie in the
// hyperplane.  Vacuously true when fewer than subset_size points.
bool is_arc(const std::vector<std::vector<Scalar>>& points, int t,
            const Field& F, int subset_size = 0);

// Bipartite incidence graph: part A holds the q^t affine points
// [1:a1:...:at], part B the lines of PG(t, q) meeting the hyperplane in
// exactly one arc point.  Lines are stored per arc point (sorted), with
// the canonical affine representative whose coordinate at the arc point's
// pivot is zero; ids follow lexicographic label order on both parts.
// Labels: points carry the t+1 homogeneous coordinates, lines the 2(t+1)
// coordinates [arc point | representative].
Graph build_arc_graph(int t, const Field& F,
                      const std::vector<std::vector<Scalar>>& arc);

// All Plücker coordinates w_ij = p_i s_j - p_j s_i, 1 <= i < j <= t+1, in
// row-major order; index via plucker_index.
std::vector<Scalar> plucker_coords(std::span<const Scalar> p,
                                   std::span<const Scalar> s, const Field& F);
inline size_t plucker_index(int i, int j, int npts) {
  return size_t(i - 1) * (2 * npts - i) / 2 + size_t(j - i - 1);
}

// Line-side coordinate map onto the sum families:
// (w13, w23, w24, ..., w_{2,k+1}) computed from the canonical
// representative and the arc point of a line in PG(k, q).
std::vector<Scalar> arc_to_wenger_map(std::span<const Scalar> line_s,
                                      std::span<const Scalar> line_rep, int k,
                                      const Field& F);

// H(k, q): parts A and B of size q^k, edges cut out by
// b_i + a_i = a1 b1^{i-1} for 2 <= i <= k.
Graph build_wenger(int k, const Field& F);

// G(2^r, s): characteristic-2 variant with k = 3 and relations
// b2 + a2 = a1 b1 and b3 + a3 = a1 b1^{2^s}; requires gcd(s, r) = 1.
Graph build_g2rs(const Field& F, int s);

} // namespace girthlab
