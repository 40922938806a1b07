#pragma once
// Shared aliases, limits and error types.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace liftlab {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

using BigInt = mpz_class;
using BigRat = mpq_class;

// Default operating limits.  Enumeration counts codewords (or selector
// matrices), subsets counts t-subsets visited by design verification.
constexpr u64 kDefaultFieldOrderBound = u64(1) << 20;
constexpr u64 kDefaultLengthBound = u64(1) << 20;
constexpr u64 kDefaultEnumerationBudget = u64(1) << 26;
constexpr u64 kDefaultSubsetBudget = 10'000'000;

struct Budget {
  u64 enumeration = kDefaultEnumerationBudget;
  u64 subsets = kDefaultSubsetBudget;
};

// Thrown when a requested computation would exceed a configured budget.
// The message names the offending sizes so callers can report them.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Dual of the full space: the zero code has no generator rows.
struct ZeroDualError : std::domain_error {
  explicit ZeroDualError(const std::string& what) : std::domain_error(what) {}
};

// Support extraction at a weight with no codewords.
struct EmptySupportError : std::domain_error {
  explicit EmptySupportError(const std::string& what) : std::domain_error(what) {}
};

inline BigInt big_pow(u64 base, u64 exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline BigInt binomial(u64 n, u64 k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace liftlab
