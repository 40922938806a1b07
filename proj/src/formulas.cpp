#include "liftlab/formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace liftlab {

namespace {

u64 checked_u64(const BigInt& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p())
    throw std::invalid_argument(std::string(what) + " out of range");
  return v.get_ui();
}

// Projective length (q^m - 1)/(q - 1), bounds-checked.
std::size_t guarded_length(u64 q, unsigned m) {
  BigInt n = (big_pow(q, m) - 1) / (q - 1);
  if (n > kDefaultLengthBound)
    throw BudgetError("code length " + n.get_str() + " exceeds bound " +
                      std::to_string(kDefaultLengthBound));
  return std::size_t(n.get_ui());
}

}  // namespace

BigInt rank_count(u64 q, unsigned ell, unsigned m, unsigned r) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  if (r > std::min(ell, m))
    throw std::invalid_argument("rank exceeds min(ell, m)");
  BigRat prod = 1;
  for (unsigned j = 1; j <= r; ++j) {
    BigInt pj = big_pow(q, j - 1);
    BigRat num((big_pow(q, ell) - pj) * (big_pow(q, m) - pj));
    BigRat den(pj * (big_pow(q, j) - 1));
    prod *= num / den;
  }
  prod.canonicalize();
  if (prod.get_den() != 1)
    throw std::logic_error("rank count is not integral");
  return prod.get_num();
}

RankCountTable rank_count_table(u64 q, unsigned ell, unsigned m) {
  RankCountTable t{q, ell, m, {}};
  unsigned rmax = std::min(ell, m);
  BigInt sum = 0;
  for (unsigned r = 0; r <= rmax; ++r) {
    t.counts.push_back(rank_count(q, ell, m, r));
    sum += t.counts.back();
  }
  if (t.counts[0] != 1 || sum != big_pow(q, u64(ell) * m))
    throw std::logic_error("rank counts do not sum to the matrix count");
  return t;
}

WeightDistribution hamming_wd_formula(u64 q, unsigned m) {
  if (q < 2 || m < 2) throw std::invalid_argument("need q >= 2 and m >= 2");
  const std::size_t n = guarded_length(q, m);
  const u64 t1 = checked_u64((big_pow(q, m - 1) - 1) / (q - 1), "t1");
  const u64 points = checked_u64(big_pow(q, m - 1), "q^(m-1)");
  const BigInt qm1 = big_pow(q, m) - 1;
  const BigInt divisor = big_pow(q, m);

  std::vector<BigInt> pw(n + 1);
  pw[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) pw[i] = pw[i - 1] * (q - 1);

  WeightDistribution wd;
  wd.n = n;
  wd.counts.assign(n + 1, 0);
  for (std::size_t w = 0; w <= n; ++w) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= w; ++i) {
      std::size_t j = w - i;
      BigInt coef = binomial(t1, i) * binomial(points, j);
      if (coef == 0) continue;
      BigInt bracket = pw[i] * qm1;
      if (j % 2) bracket = -bracket;
      acc += coef * (pw[w] + bracket);
    }
    BigInt quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(),
                divisor.get_mpz_t());
    if (rem != 0 || quot < 0)
      throw std::logic_error("hamming formula does not clear to integers");
    wd.counts[w] = quot;
  }
  if (wd.total() != big_pow(q, n - m))
    throw std::logic_error("hamming formula total is not the code size");
  return wd;
}

WeightDistribution lifted_simplex_wd_formula(u64 q, unsigned m,
                                             unsigned ell) {
  if (q < 2 || m < 2) throw std::invalid_argument("need q >= 2 and m >= 2");
  if (ell < 1 || ell > m)
    throw std::invalid_argument("need 1 <= ell <= m");
  const std::size_t n = guarded_length(q, m);
  WeightDistribution wd;
  wd.n = n;
  wd.counts.assign(n + 1, 0);
  wd.counts[0] = 1;
  for (unsigned r = 1; r <= ell; ++r) {
    u64 w = checked_u64(big_pow(q, m - r) * (big_pow(q, r) - 1) / (q - 1),
                        "weight");
    wd.counts[w] = rank_count(q, ell, m, r);
  }
  if (wd.total() != big_pow(q, u64(ell) * m))
    throw std::logic_error("lifted simplex total is not the code size");
  return wd;
}

WeightDistribution lifted_hamming_wd_formula(u64 q, unsigned m,
                                             unsigned ell) {
  u64 order = checked_u64(big_pow(q, ell), "lift order");
  return macwilliams(lifted_simplex_wd_formula(q, m, ell), order, m);
}

WeightDistribution lifted_rm1_wd_formula(unsigned m, unsigned ell) {
  if (m < 3) throw std::invalid_argument("need m >= 3");
  if (ell < 1 || ell > m)
    throw std::invalid_argument("need 1 <= ell <= m");
  if (m > 20) throw BudgetError("2^m exceeds the length bound");
  const std::size_t n = std::size_t(1) << m;
  WeightDistribution wd;
  wd.n = n;
  wd.counts.assign(n + 1, 0);
  wd.counts[0] = 1;
  BigInt rest = 0;
  for (unsigned h = 1; h <= ell; ++h) {
    std::size_t w = n - (std::size_t(1) << (m - h));
    wd.counts[w] = big_pow(2, h) * rank_count(2, ell, m, h);
    rest += wd.counts[w];
  }
  wd.counts[n] = big_pow(2, u64(ell) * (m + 1)) - 1 - rest;
  if (wd.counts[n] < 0)
    throw std::logic_error("lifted RM(1,m) top coefficient is negative");
  return wd;
}

WeightDistribution lifted_rm_m2_wd_formula(unsigned m, unsigned ell) {
  u64 order = checked_u64(big_pow(2, ell), "lift order");
  return macwilliams(lifted_rm1_wd_formula(m, ell), order, u64(m) + 1);
}

TwoThreeWeightReport two_three_weight_report(TwoThreeKind kind, u64 q,
                                             unsigned m) {
  TwoThreeWeightReport rep;
  rep.kind = kind;
  rep.q = q;
  rep.m = m;

  WeightDistribution general;
  std::vector<std::pair<std::size_t, BigInt>> terms;
  switch (kind) {
    case TwoThreeKind::simplex_ell2: {
      if (q < 2 || m < 2)
        throw std::invalid_argument("need q >= 2 and m >= 2");
      general = lifted_simplex_wd_formula(q, m, 2);
      BigInt qm = big_pow(q, m);
      u64 w1 = checked_u64(big_pow(q, m - 1), "weight");
      u64 w2 = w1 + checked_u64(big_pow(q, m - 2), "weight");
      terms = {{w1, (qm - 1) * (q + 1)}, {w2, (qm - q) * (qm - 1)}};
      rep.weight_values = 2;
      break;
    }
    case TwoThreeKind::simplex_ell3: {
      if (q < 2 || m < 3)
        throw std::invalid_argument("need q >= 2 and m >= 3");
      general = lifted_simplex_wd_formula(q, m, 3);
      BigInt qm = big_pow(q, m);
      BigInt s2 = BigInt(q) * q + q + 1;
      u64 w1 = checked_u64(big_pow(q, m - 1), "weight");
      u64 w2 = w1 + checked_u64(big_pow(q, m - 2), "weight");
      u64 w3 = w2 + checked_u64(big_pow(q, m - 3), "weight");
      terms = {{w1, s2 * (qm - 1)},
               {w2, s2 * (qm - 1) * (qm - q)},
               {w3, (qm - 1) * (qm - q) * (qm - BigInt(q) * q)}};
      rep.weight_values = 3;
      break;
    }
    case TwoThreeKind::rm1_ell2: {
      if (q != 2) throw std::invalid_argument("this family needs q = 2");
      if (m < 3) throw std::invalid_argument("need m >= 3");
      general = lifted_rm1_wd_formula(m, 2);
      std::size_t n = std::size_t(1) << m;
      terms = {{n / 2, 3 * (big_pow(2, m + 1) - 2)},
               {3 * (n / 4), 4 * (big_pow(2, m) - 1) * (big_pow(2, m) - 2)},
               {n, 3 * (big_pow(2, m + 1) - 1)}};
      rep.weight_values = 3;
      break;
    }
  }

  rep.wd.n = general.n;
  rep.wd.counts.assign(general.n + 1, 0);
  rep.wd.counts[0] = 1;
  for (const auto& [w, c] : terms) rep.wd.counts[w] = c;
  if (!(rep.wd == general))
    throw std::logic_error(
        "specialized enumerator disagrees with the general formula");
  return rep;
}

}  // namespace liftlab
