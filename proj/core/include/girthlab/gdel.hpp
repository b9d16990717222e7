#pragma once
// Random 3-graphs G3(n, p) with exact dyadic edge probability and the
// suspended-cycle deletion process.  Probabilities are carried as exact
// rationals: the sampler keeps a triple when a counter-based 64-bit hash
// falls below a threshold T, so the realized probability is exactly
// T / 2^64.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "girthlab/graph.hpp"

namespace girthlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// value(n) = coeff * n^(exp_num / exp_den).
struct RationalPower {
  Rational coeff;
  int64_t exp_num = 0;
  int64_t exp_den = 1;
  double to_double(uint64_t n) const;
};

// The deletion-method rate for girth parameter k:
// (1/10) k^{-100} n^{-(2k-2)/(2k-1)}.
RationalPower deletion_rate(int k);

// Parses "3", "1/2", or "0.125" into an exact rational.
Rational parse_rational(const std::string& s);

// Largest T < 2^64 with T / 2^64 <= value(n), found by exact integer
// binary search; rates of at least 1 saturate at 2^64 - 1.
uint64_t threshold_from_rate(uint64_t n, const RationalPower& rate);

// G3(n, p): plain triple system on n vertices keeping the triple of rank
// r (lexicographic over i < j < k) iff hash(seed, r) < threshold.
TripleSystem sample_g3(uint32_t n, uint64_t threshold, uint64_t seed);

// Scans apexes in ascending order; while the apex link contains a
// 2k-cycle, deletes the hyperedge of the witness's first edge and
// rescans.  Removals never create cycles, so one pass over the apexes
// suffices.  Returns the number of deleted hyperedges and replaces H by
// the surviving system.
uint64_t deletion_process(TripleSystem& H, int k);

// E(final) lower bound p*C(n,3) - (2k+1) n^{2k+1} p^{2k}, evaluated two
// independent ways: directly in rational arithmetic, and from the raw
// threshold by forming one integer numerator and denominator.
Rational expected_final_lower_bound(uint32_t n, int k, const Rational& p);
Rational expected_final_lower_bound_alt(uint32_t n, int k, uint64_t threshold);

struct DeletionReport {
  uint32_t n = 0;
  int k = 0;
  uint64_t seed = 0;
  uint64_t threshold = 0;
  Rational p;
  uint64_t initial_edges = 0;
  uint64_t deleted_edges = 0;
  uint64_t final_edges = 0;
  Rational expected_initial;  // p * C(n,3)
  Rational expected_final_lb; // cross-checked between the two routes
  bool suspension_free = false;
};

// Samples at the given rate, runs the deletion, certifies the survivor.
// The two expectation routes are compared exactly (std::logic_error on
// mismatch).  The surviving system is written to *out when given.
DeletionReport deletion_experiment(uint32_t n, int k,
                                   const RationalPower& rate, uint64_t seed,
                                   TripleSystem* out = nullptr);

} // namespace girthlab
