#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "liftlab/code.hpp"

using namespace liftlab;

namespace {

// Dumb weight-distribution oracle: odometer over all q^k messages and a
// naive vector-matrix product, no shared code with the library walker.
WeightDistribution dumb_wd(const LinearCode& c) {
  const FieldSpec& F = *c.field();
  u64 q = F.order();
  WeightDistribution wd;
  wd.n = c.n();
  wd.counts.assign(c.n() + 1, 0);
  std::vector<u32> msg(c.k(), 0);
  for (;;) {
    unsigned w = 0;
    for (std::size_t j = 0; j < c.n(); ++j) {
      u32 acc = 0;
      for (std::size_t i = 0; i < c.k(); ++i)
        acc = F.add(acc, F.mul(msg[i], c.generator().at(i, j)));
      if (acc) ++w;
    }
    wd.counts[w] += 1;
    std::size_t i = 0;
    while (i < msg.size() && msg[i] == q - 1) msg[i++] = 0;
    if (i == msg.size()) break;
    ++msg[i];
  }
  return wd;
}

Field field_of_order(u32 q) {
  switch (q) {
    case 2: return make_field(2, 1);
    case 3: return make_field(3, 1);
    case 4: return make_field(2, 2);
    case 8: return make_field(2, 3);
    case 9: return make_field(3, 2);
    default: return make_field(q, 1);
  }
}

LinearCode random_code(Field f, std::size_t rows, std::size_t cols,
                       std::mt19937_64& rng) {
  std::uniform_int_distribution<u32> pick(0, u32(f->order()) - 1);
  for (;;) {
    Matrix m(f, rows, cols);
    bool nonzero = false;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        m.at(r, c) = pick(rng);
        nonzero |= m.at(r, c) != 0;
      }
    if (nonzero) return code_from_generator(m);
  }
}

}  // namespace

TEST_CASE("code_from_generator canonicalizes") {
  Field f = make_field(2, 1);
  Matrix rep(f, 1, 3);
  rep.at(0, 0) = rep.at(0, 1) = rep.at(0, 2) = 1;
  LinearCode r = code_from_generator(rep);
  CHECK(r.n() == 3);
  CHECK(r.k() == 1);

  Matrix dup(f, 2, 3);
  dup.at(0, 0) = dup.at(0, 1) = 1;
  dup.at(1, 0) = dup.at(1, 1) = 1;
  CHECK(code_from_generator(dup).k() == 1);  // dependent rows collapse

  Matrix id = Matrix::identity(f, 4);
  LinearCode full = code_from_generator(id);
  CHECK(full.k() == 4);
  CHECK(min_distance(full) == 1);

  Matrix zero(f, 2, 3);
  CHECK_THROWS(code_from_generator(zero));
}

TEST_CASE("encode agrees with the generator rows") {
  std::mt19937_64 rng(2024);
  Field f = make_field(3, 1);
  LinearCode c = random_code(f, 3, 6, rng);
  const FieldSpec& F = *f;
  std::vector<u32> msg = {1, 2, 1};
  msg.resize(c.k());
  auto word = c.encode(msg);
  REQUIRE(word.size() == c.n());
  for (std::size_t j = 0; j < c.n(); ++j) {
    u32 acc = 0;
    for (std::size_t i = 0; i < c.k(); ++i)
      acc = F.add(acc, F.mul(msg[i], c.generator().at(i, j)));
    CHECK(word[j] == acc);
  }
  // pivot columns reproduce the message (generator is in rref)
  for (std::size_t i = 0; i < c.k(); ++i)
    CHECK(word[c.pivots()[i]] == msg[i]);
}

TEST_CASE("weight distribution: direct, dual route and oracle agree") {
  std::mt19937_64 rng(987654321);
  for (u32 q : {2u, 3u, 4u}) {
    Field f = field_of_order(q);
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t n = 3 + trial % 6;
      std::size_t rows = 1 + trial % n;
      LinearCode c = random_code(f, rows, n, rng);
      WeightDistribution oracle = dumb_wd(c);
      CHECK(weight_distribution(c, WdStrategy::direct) == oracle);
      if (c.k() < c.n())
        CHECK(weight_distribution(c, WdStrategy::via_dual) == oracle);
      CHECK(weight_distribution(c) == oracle);
      CHECK(oracle.counts[0] == 1);
      CHECK(oracle.total() == big_pow(q, c.k()));
    }
  }
}

TEST_CASE("multi-worker tallies equal single-worker tallies") {
  std::mt19937_64 rng(13);
  Field f = make_field(2, 1);
  LinearCode c = random_code(f, 9, 14, rng);
  WeightDistribution one = weight_distribution(c, WdStrategy::direct, {}, 1);
  for (unsigned workers : {2u, 3u, 4u, 7u})
    CHECK(weight_distribution(c, WdStrategy::direct, {}, workers) == one);
}

TEST_CASE("known distributions") {
  // simplex S(2,4) and its dual, the [15,11,3] Hamming code
  Field f2 = make_field(2, 1);
  Matrix g(f2, 4, 15);
  // columns: all nonzero 4-bit patterns, lexicographic
  {
    std::size_t col = 0;
    for (u32 v = 1; v < 16; ++v) {
      for (u32 bit = 0; bit < 4; ++bit) g.at(bit, col) = (v >> bit) & 1;
      ++col;
    }
  }
  LinearCode s24 = code_from_generator(g);
  WeightDistribution wd = weight_distribution(s24);
  CHECK(wd.counts[0] == 1);
  CHECK(wd.counts[8] == 15);
  CHECK(wd.nonzero().size() == 2);
  CHECK(min_distance(s24) == 8);

  LinearCode h24 = dual(s24);
  WeightDistribution hw = weight_distribution(h24);
  const std::vector<std::pair<std::size_t, u64>> expected = {
      {0, 1},  {3, 35},  {4, 105}, {5, 168}, {6, 280},  {7, 435},
      {8, 435}, {9, 280}, {10, 168}, {11, 105}, {12, 35}, {15, 1}};
  for (auto [w, a] : expected) CHECK(hw.counts[w] == a);
  CHECK(hw.counts[13] == 0);
  CHECK(hw.counts[14] == 0);
  CHECK(hw.total() == big_pow(2, 11));

  // full space: binomial counts
  LinearCode full = code_from_generator(Matrix::identity(f2, 5));
  WeightDistribution fw = weight_distribution(full);
  for (std::size_t i = 0; i <= 5; ++i) CHECK(fw.counts[i] == binomial(5, i));
}

TEST_CASE("dual: annihilation, involution, classic pairs") {
  std::mt19937_64 rng(31415);
  for (u32 q : {2u, 3u, 4u, 5u}) {
    Field f = field_of_order(q);
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t n = 4 + trial % 5;
      LinearCode c = random_code(f, 1 + trial % 3, n, rng);
      if (c.k() == c.n()) {
        CHECK_THROWS_AS(dual(c), ZeroDualError);
        continue;
      }
      LinearCode d = dual(c);
      CHECK(d.n() == n);
      CHECK(d.k() == n - c.k());
      CHECK((c.generator() * d.generator().transpose()).is_zero());
      CHECK(row_space_equal(dual(d).generator(), c.generator()));
    }
  }
  // repetition <-> even-weight
  Field f2 = make_field(2, 1);
  Matrix rep(f2, 1, 3);
  rep.at(0, 0) = rep.at(0, 1) = rep.at(0, 2) = 1;
  LinearCode even = dual(code_from_generator(rep));
  CHECK(even.k() == 2);
  CHECK(min_distance(even) == 2);
  CHECK_THROWS_AS(dual(code_from_generator(Matrix::identity(f2, 3))),
                  ZeroDualError);
}

TEST_CASE("macwilliams transform: known pair, involution, validation") {
  std::mt19937_64 rng(271828);
  // zero code of length n -> full space binomials
  WeightDistribution zero;
  zero.n = 6;
  zero.counts.assign(7, 0);
  zero.counts[0] = 1;
  WeightDistribution full = macwilliams(zero, 2, 0);
  for (std::size_t i = 0; i <= 6; ++i) CHECK(full.counts[i] == binomial(6, i));

  for (u32 q : {2u, 3u, 4u}) {
    Field f = field_of_order(q);
    for (int trial = 0; trial < 20; ++trial) {
      LinearCode c = random_code(f, 1 + trial % 3, 4 + trial % 4, rng);
      if (c.k() == c.n()) continue;
      WeightDistribution w = weight_distribution(c, WdStrategy::direct);
      WeightDistribution wd = macwilliams(w, q, c.k());
      CHECK(wd == weight_distribution(dual(c), WdStrategy::direct));
      CHECK(macwilliams(wd, q, c.n() - c.k()) == w);
      CHECK(wd.total() == big_pow(q, c.n() - c.k()));
    }
  }

  WeightDistribution bad;
  bad.n = 3;
  bad.counts = {BigInt(1), BigInt(0), BigInt(0), BigInt(2)};  // sums to 3
  CHECK_THROWS(macwilliams(bad, 2, 1));
}

TEST_CASE("budgets bound the enumerated side") {
  Field f = make_field(2, 1);
  Matrix g(f, 7, 12);
  for (std::size_t i = 0; i < 7; ++i) {
    g.at(i, i) = 1;
    g.at(i, 7 + i % 5) = 1;
  }
  LinearCode c = code_from_generator(g);  // [12,7]: sides 2^7 and 2^5
  Budget tiny;
  tiny.enumeration = 16;
  CHECK_THROWS_AS(weight_distribution(c, WdStrategy::direct, tiny),
                  BudgetError);
  CHECK_THROWS_AS(weight_distribution(c, WdStrategy::automatic, tiny),
                  BudgetError);
  try {
    weight_distribution(c, WdStrategy::automatic, tiny);
  } catch (const BudgetError& e) {
    std::string msg = e.what();
    // reports both side sizes
    CHECK(msg.find("128") != std::string::npos);
    CHECK(msg.find("32") != std::string::npos);
  }
}

TEST_CASE("min_distance is the least positive weight") {
  std::mt19937_64 rng(777);
  for (u32 q : {2u, 3u}) {
    Field f = field_of_order(q);
    for (int trial = 0; trial < 15; ++trial) {
      LinearCode c = random_code(f, 2 + trial % 3, 5 + trial % 4, rng);
      WeightDistribution wd = dumb_wd(c);
      unsigned d = min_distance(c);
      CHECK(d >= 1);
      CHECK(wd.counts[d] > 0);
      for (unsigned i = 1; i < d; ++i) CHECK(wd.counts[i] == 0);
      CHECK(long(d) == wd.min_positive());
    }
  }
}
