#include "liftlab/lift.hpp"

#include <bit>
#include <stdexcept>
#include <thread>

#include "liftlab/enumerate.hpp"

namespace liftlab {

LiftedCode lift(const LinearCode& base, unsigned ell, u64 order_bound) {
  if (ell < 1) throw std::invalid_argument("ell must be at least 1");
  FieldTower tw = make_tower(base.field(), ell, order_bound);
  Matrix g(tw.top(), base.k(), base.n());
  for (std::size_t i = 0; i < base.k(); ++i)
    for (std::size_t j = 0; j < base.n(); ++j)
      g.at(i, j) = tw.embed(base.generator().at(i, j));
  LinearCode lifted = code_from_generator(g);
  if (lifted.n() != base.n() || lifted.k() != base.k())
    throw std::logic_error("lift changed code parameters");
  return LiftedCode{base, ell, std::move(tw), std::move(lifted)};
}

unsigned selector_weight(const LiftedCode& lc, const Matrix& b) {
  if (!b.field()->same(*lc.base.field()))
    throw std::invalid_argument("selector matrix field mismatch");
  if (b.rows() != lc.ell || b.cols() != lc.base.k())
    throw std::invalid_argument("selector matrix shape mismatch");
  const FieldSpec& F = *lc.base.field();
  const Matrix& g = lc.base.generator();
  const std::size_t n = lc.base.n(), k = lc.base.k();
  std::size_t zeros = 0;
  for (std::size_t j = 0; j < n; ++j) {
    bool all = true;
    for (std::size_t i = 0; i < b.rows() && all; ++i) {
      u32 acc = 0;
      for (std::size_t t = 0; t < k; ++t)
        acc = F.add(acc, F.mul(b.at(i, t), g.at(t, j)));
      all = acc == 0;
    }
    zeros += all;
  }
  return unsigned(n - zeros);
}

namespace {

// Zero-position bitmasks of every base codeword, in message-lex order.
struct MaskBuild {
  std::size_t n, words;
  std::vector<u64>* out;
  u64 next = 0;
  void operator()(const u32* word) {
    u64* dst = out->data() + next * words;
    for (std::size_t w = 0; w < words; ++w) dst[w] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (word[j] == 0) dst[j / 64] |= u64(1) << (j % 64);
    ++next;
  }
};

void spectrum_recurse(const std::vector<u64>& masks, std::size_t words,
                      unsigned level, unsigned ell, u64 rows, u64* acc,
                      std::vector<u64>& counts, std::size_t n) {
  u64* next = acc + words;
  for (u64 r = 0; r < rows; ++r) {
    const u64* m = masks.data() + r * words;
    std::size_t zeros = 0;
    if (level + 1 == ell) {
      for (std::size_t w = 0; w < words; ++w)
        zeros += std::size_t(std::popcount(acc[w] & m[w]));
      ++counts[n - zeros];
    } else {
      for (std::size_t w = 0; w < words; ++w) next[w] = acc[w] & m[w];
      spectrum_recurse(masks, words, level + 1, ell, rows, next, counts, n);
    }
  }
}

}  // namespace

WeightDistribution rank_spectrum_wd(const LiftedCode& lc,
                                    const Budget& budget, unsigned workers) {
  const u64 q = lc.base.field()->order();
  const std::size_t k = lc.base.k(), n = lc.base.n();
  const BigInt total = big_pow(q, u64(lc.ell) * k);
  if (total > budget.enumeration)
    throw BudgetError("selector enumeration " + total.get_str() +
                      " exceeds budget " +
                      std::to_string(budget.enumeration));

  if (lc.ell == 1) {
    // 1 x k selectors are exactly the base messages
    return weight_distribution(lc.code, WdStrategy::direct, budget, workers);
  }

  u64 rows = 1;
  for (std::size_t i = 0; i < k; ++i) rows *= q;
  const std::size_t words = (n + 63) / 64;
  std::vector<u64> masks(rows * words);
  {
    detail::WalkPlan plan = detail::make_plan(lc.base.generator());
    MaskBuild mb{n, words, &masks, 0};
    detail::Walker<MaskBuild> w(plan, mb);
    w.run(0, plan.total);
    if (mb.next != rows) throw std::logic_error("mask count mismatch");
  }

  // split the first selector row across workers
  auto ranges = detail::split_ranges(rows, workers);
  std::vector<std::vector<u64>> tallies(ranges.size(),
                                        std::vector<u64>(n + 1, 0));
  auto body = [&](std::size_t idx) {
    std::vector<u64> acc((lc.ell + 1) * words, 0);
    for (u64 r = ranges[idx].first; r < ranges[idx].second; ++r) {
      const u64* m = masks.data() + r * words;
      for (std::size_t w = 0; w < words; ++w) acc[w] = m[w];
      spectrum_recurse(masks, words, 1, lc.ell, rows, acc.data(),
                       tallies[idx], n);
    }
  };
  if (ranges.size() <= 1) {
    if (!ranges.empty()) body(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < ranges.size(); ++i)
      pool.emplace_back(body, i);
    for (auto& th : pool) th.join();
  }

  WeightDistribution wd;
  wd.n = n;
  wd.counts.assign(n + 1, 0);
  for (const auto& t : tallies)
    for (std::size_t w = 0; w <= n; ++w) wd.counts[w] += t[w];
  return wd;
}

namespace {

// Checks that a lifted word is u * embed(c) for a base codeword c.
struct ScalarCheck {
  const LiftedCode* lc;
  unsigned d;
  u64 hits = 0;
  bool ok = true;

  void operator()(const u32* word) {
    const std::size_t n = lc->code.n();
    std::size_t w = 0;
    for (std::size_t j = 0; j < n; ++j) w += word[j] != 0;
    if (w != d) return;
    ++hits;
    if (!ok) return;
    const FieldSpec& T = *lc->tower.top();
    u32 first = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (word[j]) {
        first = word[j];
        break;
      }
    u32 scale = T.inv(first);
    std::vector<u32> base_word(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      u32 s = T.mul(scale, word[j]);
      if (!lc->tower.in_image(s)) {
        ok = false;
        return;
      }
      base_word[j] = lc->tower.unembed(s);
    }
    // membership in the base code via its systematic pivot columns
    std::vector<u32> msg(lc->base.k());
    for (std::size_t i = 0; i < lc->base.k(); ++i)
      msg[i] = base_word[lc->base.pivots()[i]];
    if (lc->base.encode(msg) != base_word) ok = false;
  }
};

}  // namespace

AdRatioReport check_ad_relation(const LinearCode& base, unsigned ell,
                                const Budget& budget, unsigned workers) {
  AdRatioReport rep;
  WeightDistribution wb = weight_distribution(base, WdStrategy::automatic,
                                              budget, workers);
  long d = wb.min_positive();
  if (d < 1) throw std::logic_error("base code has no nonzero word");
  rep.d = unsigned(d);
  rep.base_count = wb.counts[rep.d];

  LiftedCode lc = lift(base, ell);
  WeightDistribution wl = weight_distribution(lc.code, WdStrategy::automatic,
                                              budget, workers);
  rep.lifted_count = wl.counts[rep.d];

  const u64 q = base.field()->order();
  BigInt ratio = (big_pow(q, ell) - 1) / (q - 1);
  rep.expected = ratio * rep.base_count;
  rep.equal = rep.lifted_count == rep.expected;

  const BigInt lifted_words = big_pow(lc.tower.top()->order(), base.k());
  if (lifted_words <= (u64(1) << 18)) {
    detail::WalkPlan plan = detail::make_plan(lc.code.generator());
    ScalarCheck proto{&lc, rep.d, 0, true};
    auto states = detail::walk_all(plan, workers, proto);
    rep.scalar_checked = true;
    rep.scalar_ok = true;
    BigInt hits = 0;
    for (const ScalarCheck& s : states) {
      rep.scalar_ok = rep.scalar_ok && s.ok;
      hits += s.hits;
    }
    if (hits != rep.lifted_count) rep.scalar_ok = false;
  }
  return rep;
}

}  // namespace liftlab
