#pragma once
// Closed-form weight distributions for the Hamming family and for lifted
// Simplex, Hamming, and first/next-to-top-order Reed-Muller codes, plus
// the rank-count combinatorics they are built from.

#include <vector>

#include "liftlab/code.hpp"
#include "liftlab/types.hpp"

namespace liftlab {

// Number of ell x m matrices over GF(q) of rank r:
//   prod_{j=1}^{r} (q^ell - q^(j-1)) (q^m - q^(j-1)) / (q^(j-1) (q^j - 1))
// Evaluated over exact rationals; a non-integral result throws.
BigInt rank_count(u64 q, unsigned ell, unsigned m, unsigned r);

struct RankCountTable {
  u64 q = 0;
  unsigned ell = 0, m = 0;
  std::vector<BigInt> counts;  // counts[r], r = 0..min(ell, m)
};

// Full table; verifies counts[0] = 1 and sum = q^(ell*m).
RankCountTable rank_count_table(u64 q, unsigned ell, unsigned m);

// Weight distribution of the [(q^m-1)/(q-1), n-m] Hamming code:
//   q^m A_w = sum_{i+j=w} C(t1,i) C(q^(m-1),j)
//                 [(q-1)^w + (-1)^j (q-1)^i (q^m-1)],
// with t1 = (q^(m-1)-1)/(q-1).  The q^m divisor must clear exactly.
WeightDistribution hamming_wd_formula(u64 q, unsigned m);

// Lifted Simplex S(q,m) read over GF(q^ell):
//   A at weight q^(m-r)(q^r-1)/(q-1) is rank_count(q, ell, m, r).
WeightDistribution lifted_simplex_wd_formula(u64 q, unsigned m, unsigned ell);

// Lifted Hamming: MacWilliams transform of the lifted Simplex form.
WeightDistribution lifted_hamming_wd_formula(u64 q, unsigned m, unsigned ell);

// Lifted first-order Reed-Muller RM(1,m) over GF(2^ell):
//   A_{2^m - 2^(m-h)} = 2^h rank_count(2, ell, m, h) for h = 1..ell,
//   A_{2^m} = 2^(ell(m+1)) - 1 - sum of the above.
WeightDistribution lifted_rm1_wd_formula(unsigned m, unsigned ell);

// Lifted RM(m-2,m): MacWilliams transform of the lifted RM(1,m) form.
WeightDistribution lifted_rm_m2_wd_formula(unsigned m, unsigned ell);

// Specialized two- and three-weight enumerators for small lifts.
enum class TwoThreeKind { simplex_ell2, simplex_ell3, rm1_ell2 };

struct TwoThreeWeightReport {
  TwoThreeKind kind = TwoThreeKind::simplex_ell2;
  u64 q = 0;
  unsigned m = 0;
  WeightDistribution wd;
  unsigned weight_values = 0;  // number of distinct nonzero weights
};

// Builds the specialized enumerator from its explicit coefficients and
// checks it against the general formula; a mismatch throws.
// simplex_ell2 needs m >= 2, the other kinds m >= 3; rm1_ell2 needs q = 2.
TwoThreeWeightReport two_three_weight_report(TwoThreeKind kind, u64 q,
                                             unsigned m);

}  // namespace liftlab
