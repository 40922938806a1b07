#pragma once
// Linear codes in canonical (reduced row echelon) form, weight
// distributions by direct or dual-side enumeration, and the exact
// MacWilliams transform.

#include <utility>
#include <vector>

#include "liftlab/matrix.hpp"
#include "liftlab/types.hpp"

namespace liftlab {

struct WeightDistribution {
  std::size_t n = 0;
  std::vector<BigInt> counts;  // counts[w] = number of codewords of weight w

  BigInt total() const;
  // Smallest positive weight with a nonzero count, or -1 if none.
  long min_positive() const;
  std::vector<std::pair<std::size_t, BigInt>> nonzero() const;
  bool operator==(const WeightDistribution&) const = default;
};

class LinearCode {
 public:
  const Field& field() const { return f_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const Matrix& generator() const { return gen_; }  // rref, k nonzero rows
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Codeword for a message given as k element indices.
  std::vector<u32> encode(const std::vector<u32>& message) const;

 private:
  friend LinearCode code_from_generator(const Matrix&);
  LinearCode(Field f, Matrix gen, std::vector<std::size_t> pivots);

  Field f_;
  std::size_t n_, k_;
  Matrix gen_;
  std::vector<std::size_t> pivots_;
};

// Canonicalizes a spanning matrix; throws on a zero matrix.
LinearCode code_from_generator(const Matrix& g);

// Dual code.  Throws ZeroDualError when k = n (the dual is the zero code,
// which has no generator).  The result satisfies G H^T = 0.
LinearCode dual(const LinearCode& c);

enum class WdStrategy { automatic, direct, via_dual };

// Weight distribution by message enumeration.  `automatic` enumerates the
// smaller of q^k and q^(n-k) codewords; the via_dual route applies the
// MacWilliams transform to the dual distribution.  Throws BudgetError
// (reporting both side sizes) when the chosen side exceeds the budget.
WeightDistribution weight_distribution(const LinearCode& c,
                                       WdStrategy strategy = WdStrategy::automatic,
                                       const Budget& budget = {},
                                       unsigned workers = 1);

unsigned min_distance(const LinearCode& c, const Budget& budget = {},
                      unsigned workers = 1);

// Exact MacWilliams transform of a length-n distribution summing to
// order^dim; the result sums to order^(n-dim).  All arithmetic is exact;
// throws on inputs that fail to clear to nonnegative integers.
WeightDistribution macwilliams(const WeightDistribution& w, u64 order,
                               u64 dim);

}  // namespace liftlab
