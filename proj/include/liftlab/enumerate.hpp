#pragma once
// Codeword enumeration.  Messages (m_1, ..., m_k) are visited in
// lexicographic order, coordinates compared left to right and field
// elements ordered by coefficient vectors (constant term first).  The
// message-rank space [0, q^k) splits into contiguous ranges, one per
// worker, so parallel runs tally exactly the same multiset.

#include <cstring>
#include <thread>
#include <utility>
#include <vector>

#include "liftlab/matrix.hpp"

namespace liftlab {
namespace detail {

struct WalkPlan {
  Field field;
  std::size_t k = 0, n = 0;
  u64 q = 0;
  u64 total = 0;                         // q^k
  std::vector<u64> span;                 // span[i] = q^(k-i)
  std::vector<std::vector<u32>> scaled;  // [level*q + t] = elem(t)*row(level)
};

inline WalkPlan make_plan(const Matrix& gen) {
  WalkPlan p;
  p.field = gen.field();
  p.k = gen.rows();
  p.n = gen.cols();
  p.q = p.field->order();
  p.span.assign(p.k + 1, 1);
  for (std::size_t i = p.k; i-- > 0;) p.span[i] = p.span[i + 1] * p.q;
  p.total = p.span[0];
  const FieldSpec& F = *p.field;
  p.scaled.resize(p.k * p.q);
  for (std::size_t lvl = 0; lvl < p.k; ++lvl)
    for (u64 t = 0; t < p.q; ++t) {
      u32 s = F.lex_element(u32(t));
      std::vector<u32>& row = p.scaled[lvl * p.q + t];
      row.resize(p.n);
      for (std::size_t j = 0; j < p.n; ++j) row[j] = F.mul(s, gen.at(lvl, j));
    }
  return p;
}

// Visits every codeword whose message rank lies in [lo, hi), ascending.
template <class V>
class Walker {
 public:
  Walker(const WalkPlan& plan, V& visit) : p_(plan), v_(visit) {
    buf_.assign(p_.k + 1, std::vector<u32>(p_.n, 0));
  }

  void run(u64 lo, u64 hi) {
    if (lo >= hi) return;
    lo_ = lo;
    hi_ = hi;
    if (lo == 0 && hi == p_.total)
      full(0);
    else
      ranged(0, 0);
  }

 private:
  void child(std::size_t level, u64 t) {
    const u32* parent = buf_[level].data();
    u32* out = buf_[level + 1].data();
    if (t == 0) {
      std::memcpy(out, parent, p_.n * sizeof(u32));
      return;
    }
    const u32* add = p_.scaled[level * p_.q + t].data();
    const FieldSpec& F = *p_.field;
    for (std::size_t j = 0; j < p_.n; ++j) out[j] = F.add(parent[j], add[j]);
  }

  void full(std::size_t level) {
    if (level == p_.k) {
      v_(buf_[p_.k].data());
      return;
    }
    for (u64 t = 0; t < p_.q; ++t) {
      child(level, t);
      full(level + 1);
    }
  }

  void ranged(std::size_t level, u64 base) {
    if (level == p_.k) {
      v_(buf_[p_.k].data());
      return;
    }
    const u64 step = p_.span[level + 1];
    for (u64 t = 0; t < p_.q; ++t) {
      u64 cb = base + t * step;
      if (cb >= hi_) break;
      if (cb + step <= lo_) continue;
      child(level, t);
      if (lo_ <= cb && cb + step <= hi_)
        full(level + 1);
      else
        ranged(level + 1, cb);
    }
  }

  const WalkPlan& p_;
  V& v_;
  std::vector<std::vector<u32>> buf_;
  u64 lo_ = 0, hi_ = 0;
};

inline std::vector<std::pair<u64, u64>> split_ranges(u64 total,
                                                     unsigned workers) {
  if (workers < 1) workers = 1;
  std::vector<std::pair<u64, u64>> r;
  for (unsigned i = 0; i < workers; ++i) {
    u64 lo = total / workers * i + std::min<u64>(i, total % workers);
    u64 hi = lo + total / workers + (i < total % workers ? 1 : 0);
    if (lo < hi) r.emplace_back(lo, hi);
  }
  return r;
}

// Copies `proto` once per worker range, walks each range, and returns the
// states in range order for deterministic merging.  Each state is called
// as state(word) and may also use state.rank bookkeeping of its own.
template <class State>
std::vector<State> walk_all(const WalkPlan& plan, unsigned workers,
                            const State& proto) {
  auto ranges = split_ranges(plan.total, workers);
  std::vector<State> states(ranges.size(), proto);
  if (ranges.size() <= 1) {
    if (!ranges.empty()) {
      Walker<State> w(plan, states[0]);
      w.run(ranges[0].first, ranges[0].second);
    }
    return states;
  }
  std::vector<std::thread> pool;
  pool.reserve(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i)
    pool.emplace_back([&, i] {
      Walker<State> w(plan, states[i]);
      w.run(ranges[i].first, ranges[i].second);
    });
  for (auto& th : pool) th.join();
  return states;
}

}  // namespace detail
}  // namespace liftlab
