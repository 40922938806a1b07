#pragma once
// Lifted codes: the same generator matrix read over the extension field
// GF(q^ell), with the selector (rank-spectrum) route to the lifted weight
// distribution and checks of the lift/dual interplay.

#include "liftlab/code.hpp"
#include "liftlab/field.hpp"

namespace liftlab {

struct LiftedCode {
  LinearCode base;
  unsigned ell;
  FieldTower tower;
  LinearCode code;  // over tower.top(), same n and k as the base
};

// Embeds the base generator entrywise through the tower.  Length and
// dimension are preserved.
LiftedCode lift(const LinearCode& base, unsigned ell,
                u64 order_bound = kDefaultFieldOrderBound);

// Weight contributed by a selector matrix B (ell x k over the base
// field): n minus the number of generator columns g_j, counted with
// multiplicity, satisfying B g_j^T = 0.  Equals the Hamming weight of
// the lifted codeword whose basis coordinates are the rows of B G.
unsigned selector_weight(const LiftedCode& lc, const Matrix& b);

// Lifted weight distribution tallied over all q^(ell k) selector
// matrices, enumerated row-major lexicographically.
WeightDistribution rank_spectrum_wd(const LiftedCode& lc,
                                    const Budget& budget = {},
                                    unsigned workers = 1);

// A_d(lifted) against ((q^ell - 1)/(q - 1)) * A_d(base), plus (when the
// lifted code is small enough to enumerate) the check that every
// minimum-weight lifted word is a scalar multiple of an embedded base
// word.
struct AdRatioReport {
  unsigned d = 0;
  BigInt base_count;
  BigInt lifted_count;
  BigInt expected;  // ratio * base_count
  bool equal = false;
  bool scalar_checked = false;
  bool scalar_ok = false;
};

AdRatioReport check_ad_relation(const LinearCode& base, unsigned ell,
                                const Budget& budget = {},
                                unsigned workers = 1);

}  // namespace liftlab
