#pragma once
// Support designs: collect the supports of fixed-weight codewords,
// verify t-design properties by exhaustive subset counting, run the
// Assmus-Mattson applicability check, and test the lifted RM(1,m)
// lambda prediction.

#include <map>
#include <vector>

#include "liftlab/code.hpp"
#include "liftlab/types.hpp"

namespace liftlab {

struct SupportDesign {
  std::size_t v = 0;                  // points 0..v-1 (code coordinates)
  std::size_t k = 0;                  // block size (the codeword weight)
  std::vector<std::vector<u32>> blocks;  // distinct sorted k-subsets, lex order
};

// Supports of all weight-w codewords, deduplicated.  Throws
// EmptySupportError when A_w = 0 and BudgetError when q^k codewords
// exceed the enumeration budget.
SupportDesign supports(const LinearCode& c, unsigned w,
                       const Budget& budget = {}, unsigned workers = 1);

// One pass over the code collecting the support design of every
// positive weight that occurs; keys are the weights.
std::map<unsigned, SupportDesign> supports_by_weight(
    const LinearCode& c, const Budget& budget = {}, unsigned workers = 1);

enum class DesignStatus { verified, not_a_design, complete_design };

struct DesignCertificate {
  unsigned t = 0;
  std::size_t v = 0, k = 0;
  BigInt lambda;  // common subset count when verified; 0 otherwise
  BigInt b;       // number of blocks
  DesignStatus status = DesignStatus::not_a_design;
  // Populated when status == not_a_design: two t-subsets with
  // different containment counts.
  std::vector<u32> witness_a, witness_b;
  BigInt count_a, count_b;
};

// Counts, for every t-subset of points, the blocks containing it.
// Requires 1 <= t <= k <= v and C(v,t) within the subset budget.
DesignCertificate verify_design(const SupportDesign& d, unsigned t,
                                const Budget& budget = {},
                                unsigned workers = 1);

// Largest t for which verify_design succeeds, with its lambda; t = 1 is
// tried first, so a result of (0, b) means not even a 1-design.
std::pair<unsigned, BigInt> max_strength(const SupportDesign& d,
                                         const Budget& budget = {},
                                         unsigned workers = 1);

// supports + verify_design in one step.
DesignCertificate support_design_certificate(const LinearCode& c, unsigned w,
                                             unsigned t,
                                             const Budget& budget = {},
                                             unsigned workers = 1);

struct AMReport {
  unsigned t = 0;
  std::size_t v = 0;
  unsigned d = 0, d_dual = 0;  // d_dual = 0 when the dual is the zero code
  std::size_t w = 0, w_dual = 0;
  std::size_t s = 0;  // nonzero dual weights in [1, v-t]
  bool applicable = false;
  std::vector<std::size_t> guaranteed_primal;  // i with A_i != 0, d <= i <= w
  std::vector<std::size_t> guaranteed_dual;    // dual i in [d_dual, min(v-t, w_dual)]
};

// Assmus-Mattson check at strength t.  The dual distribution comes from
// the MacWilliams transform, so only the primal side is enumerated.
AMReport assmus_mattson(const LinearCode& c, unsigned t,
                        const Budget& budget = {}, unsigned workers = 1);

struct ConjectureReport {
  unsigned m = 0;
  DesignCertificate cert;      // weight 3*2^(m-2) supports at t = 3
  BigRat lambda_conjectured;   // 2 C(3*2^(m-2),3)(2^m-1)(2^m-2) / (3 C(2^m,3))
  bool agree = false;
};

// Tests the predicted lambda of the 3-design extracted from RM(1,m)
// read over GF(4).  Requires m >= 3.
ConjectureReport conjecture_rm1(unsigned m, const Budget& budget = {},
                                unsigned workers = 1);

}  // namespace liftlab
