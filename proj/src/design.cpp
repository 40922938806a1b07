#include "liftlab/design.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "liftlab/enumerate.hpp"
#include "liftlab/families.hpp"
#include "liftlab/lift.hpp"

namespace liftlab {

namespace {

struct SupportCollect {
  std::size_t n = 0;
  unsigned w = 0;
  std::set<std::vector<u32>> blocks;
  u64 hits = 0;

  void operator()(const u32* word) {
    std::vector<u32> sup;
    for (std::size_t j = 0; j < n; ++j)
      if (word[j]) {
        if (sup.size() == w) return;  // already too heavy
        sup.push_back(u32(j));
      }
    if (sup.size() != w) return;
    ++hits;
    blocks.insert(std::move(sup));
  }
};

struct SupportCollectAll {
  std::size_t n = 0;
  std::map<unsigned, std::set<std::vector<u32>>> by_weight;

  void operator()(const u32* word) {
    std::vector<u32> sup;
    for (std::size_t j = 0; j < n; ++j)
      if (word[j]) sup.push_back(u32(j));
    if (sup.empty()) return;
    by_weight[unsigned(sup.size())].insert(std::move(sup));
  }
};

void check_enumeration_budget(const LinearCode& c, const Budget& budget) {
  const BigInt total = big_pow(c.field()->order(), c.k());
  if (total > budget.enumeration)
    throw BudgetError("support enumeration " + total.get_str() +
                      " exceeds budget " +
                      std::to_string(budget.enumeration));
}

}  // namespace

SupportDesign supports(const LinearCode& c, unsigned w, const Budget& budget,
                       unsigned workers) {
  if (w > c.n()) throw std::invalid_argument("weight exceeds length");
  check_enumeration_budget(c, budget);

  detail::WalkPlan plan = detail::make_plan(c.generator());
  SupportCollect proto{c.n(), w, {}, 0};
  auto states = detail::walk_all(plan, workers, proto);

  SupportDesign d;
  d.v = c.n();
  d.k = w;
  std::set<std::vector<u32>> merged;
  u64 hits = 0;
  for (auto& s : states) {
    hits += s.hits;
    merged.merge(std::move(s.blocks));
  }
  if (hits == 0)
    throw EmptySupportError("no codeword has weight " + std::to_string(w));
  if (merged.size() > hits)
    throw std::logic_error("more blocks than codewords");
  d.blocks.assign(merged.begin(), merged.end());
  return d;
}

std::map<unsigned, SupportDesign> supports_by_weight(const LinearCode& c,
                                                     const Budget& budget,
                                                     unsigned workers) {
  check_enumeration_budget(c, budget);
  detail::WalkPlan plan = detail::make_plan(c.generator());
  SupportCollectAll proto{c.n(), {}};
  auto states = detail::walk_all(plan, workers, proto);

  std::map<unsigned, std::set<std::vector<u32>>> merged;
  for (auto& s : states)
    for (auto& [w, blocks] : s.by_weight) merged[w].merge(std::move(blocks));

  std::map<unsigned, SupportDesign> out;
  for (auto& [w, blocks] : merged) {
    SupportDesign d;
    d.v = c.n();
    d.k = w;
    d.blocks.assign(blocks.begin(), blocks.end());
    out.emplace(w, std::move(d));
  }
  return out;
}

namespace {

// Lexicographic rank/unrank for t-subsets of [0, v).
std::vector<u32> unrank_subset(std::size_t v, unsigned t, u64 rank) {
  std::vector<u32> c(t);
  u32 next = 0;
  for (unsigned i = 0; i < t; ++i) {
    for (;; ++next) {
      BigInt tail = binomial(v - 1 - next, t - 1 - i);
      if (tail > rank) break;
      rank -= tail.get_ui();
    }
    c[i] = next++;
  }
  return c;
}

bool next_subset(std::vector<u32>& c, std::size_t v) {
  unsigned t = unsigned(c.size());
  for (unsigned i = t; i-- > 0;) {
    if (c[i] + (t - i) < v) {
      ++c[i];
      for (unsigned j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

u64 count_containing(const std::vector<u64>& masks, std::size_t words,
                     std::size_t nblocks, const std::vector<u64>& sub) {
  u64 count = 0;
  for (std::size_t bi = 0; bi < nblocks; ++bi) {
    const u64* bm = masks.data() + bi * words;
    bool in = true;
    for (std::size_t w = 0; w < words && in; ++w)
      in = (bm[w] & sub[w]) == sub[w];
    count += in;
  }
  return count;
}

struct Mismatch {
  bool found = false;
  std::vector<u32> subset;
  u64 count = 0;
};

}  // namespace

DesignCertificate verify_design(const SupportDesign& d, unsigned t,
                                const Budget& budget, unsigned workers) {
  if (t < 1 || t > d.k || d.k > d.v)
    throw std::invalid_argument("need 1 <= t <= k <= v");
  const BigInt nsub = binomial(d.v, t);
  if (nsub > budget.subsets)
    throw BudgetError("subset count " + nsub.get_str() + " exceeds budget " +
                      std::to_string(budget.subsets));
  const u64 total = nsub.get_ui();

  const std::size_t words = (d.v + 63) / 64;
  std::vector<u64> masks(d.blocks.size() * words, 0);
  for (std::size_t bi = 0; bi < d.blocks.size(); ++bi)
    for (u32 p : d.blocks[bi])
      masks[bi * words + p / 64] |= u64(1) << (p % 64);

  auto subset_mask = [&](const std::vector<u32>& c) {
    std::vector<u64> m(words, 0);
    for (u32 p : c) m[p / 64] |= u64(1) << (p % 64);
    return m;
  };

  std::vector<u32> first(t);
  for (unsigned i = 0; i < t; ++i) first[i] = i;
  const u64 lambda_ref =
      count_containing(masks, words, d.blocks.size(), subset_mask(first));

  auto ranges = detail::split_ranges(total, workers);
  std::vector<Mismatch> found(ranges.size());
  auto body = [&](std::size_t idx) {
    std::vector<u32> c = unrank_subset(d.v, t, ranges[idx].first);
    for (u64 r = ranges[idx].first; r < ranges[idx].second; ++r) {
      u64 cnt = count_containing(masks, words, d.blocks.size(),
                                 subset_mask(c));
      if (cnt != lambda_ref) {
        found[idx] = {true, c, cnt};
        return;
      }
      if (!next_subset(c, d.v)) break;
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

  DesignCertificate cert;
  cert.t = t;
  cert.v = d.v;
  cert.k = d.k;
  cert.b = BigInt(d.blocks.size());
  for (const Mismatch& mm : found)
    if (mm.found) {
      cert.status = DesignStatus::not_a_design;
      cert.lambda = 0;
      cert.witness_a = first;
      cert.witness_b = mm.subset;
      cert.count_a = lambda_ref;
      cert.count_b = mm.count;
      return cert;
    }

  cert.lambda = lambda_ref;
  if (cert.lambda * binomial(d.v, t) != cert.b * binomial(d.k, t))
    throw std::logic_error("design double-counting identity fails");
  const bool complete = cert.b == binomial(d.v, d.k);
  if (complete && cert.lambda != binomial(d.v - t, d.k - t))
    throw std::logic_error("complete design has the wrong lambda");
  cert.status = complete ? DesignStatus::complete_design
                         : DesignStatus::verified;
  return cert;
}

std::pair<unsigned, BigInt> max_strength(const SupportDesign& d,
                                         const Budget& budget,
                                         unsigned workers) {
  unsigned best_t = 0;
  BigInt best_lambda = BigInt(d.blocks.size());  // every 0-subset is in all b
  for (unsigned t = 1; t <= d.k; ++t) {
    DesignCertificate cert = verify_design(d, t, budget, workers);
    if (cert.status == DesignStatus::not_a_design) break;
    best_t = t;
    best_lambda = cert.lambda;
  }
  return {best_t, best_lambda};
}

DesignCertificate support_design_certificate(const LinearCode& c, unsigned w,
                                             unsigned t, const Budget& budget,
                                             unsigned workers) {
  return verify_design(supports(c, w, budget, workers), t, budget, workers);
}

namespace {

// Largest w <= v with w - floor((w+q-2)/(q-1)) < d, or 0 when none.
std::size_t am_threshold(std::size_t v, u64 q, unsigned d) {
  for (std::size_t w = v; w > 0; --w)
    if (w - (w + q - 2) / (q - 1) < d) return w;
  return 0;
}

}  // namespace

AMReport assmus_mattson(const LinearCode& c, unsigned t, const Budget& budget,
                        unsigned workers) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  const u64 q = c.field()->order();
  WeightDistribution primal =
      weight_distribution(c, WdStrategy::automatic, budget, workers);
  WeightDistribution dual_wd = macwilliams(primal, q, c.k());

  AMReport rep;
  rep.t = t;
  rep.v = c.n();
  long d = primal.min_positive();
  long dd = dual_wd.min_positive();
  rep.d = d < 0 ? 0 : unsigned(d);
  rep.d_dual = dd < 0 ? 0 : unsigned(dd);
  rep.w = am_threshold(rep.v, q, rep.d);
  rep.w_dual = am_threshold(rep.v, q, rep.d_dual);

  const std::size_t hi = rep.v >= t ? rep.v - t : 0;
  for (std::size_t i = 1; i <= hi && i <= dual_wd.n; ++i)
    if (dual_wd.counts[i] != 0) ++rep.s;

  rep.applicable = t < rep.d && rep.s + t <= rep.d;

  for (std::size_t i = rep.d; i <= rep.w && i <= primal.n && rep.d > 0; ++i)
    if (primal.counts[i] != 0) rep.guaranteed_primal.push_back(i);
  const std::size_t dual_hi = std::min(hi, rep.w_dual);
  for (std::size_t i = rep.d_dual; i <= dual_hi && rep.d_dual > 0; ++i)
    if (dual_wd.counts[i] != 0) rep.guaranteed_dual.push_back(i);
  return rep;
}

ConjectureReport conjecture_rm1(unsigned m, const Budget& budget,
                                unsigned workers) {
  if (m < 3) throw std::invalid_argument("need m >= 3");
  if (m > 20) throw BudgetError("2^m exceeds the length bound");
  ConjectureReport rep;
  rep.m = m;

  LinearCode base = rm2(1, m);
  LiftedCode lc = lift(base, 2);
  const unsigned w = 3u << (m - 2);
  rep.cert = support_design_certificate(lc.code, w, 3, budget, workers);

  BigInt n2m = big_pow(2, m);
  BigRat num(2 * binomial((3u << (m - 2)), 3) * (n2m - 1) * (n2m - 2));
  BigRat den(3 * binomial((u64(1) << m), 3));
  rep.lambda_conjectured = num / den;
  rep.lambda_conjectured.canonicalize();

  const bool is_design = rep.cert.status != DesignStatus::not_a_design;
  rep.agree = is_design && BigRat(rep.cert.lambda) == rep.lambda_conjectured;
  return rep;
}

}  // namespace liftlab
