#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "liftlab/code.hpp"
#include "liftlab/families.hpp"

using namespace liftlab;

namespace {

Field field_of_order(u32 q) {
  switch (q) {
    case 4: return make_field(2, 2);
    case 8: return make_field(2, 3);
    case 9: return make_field(3, 2);
    case 16: return make_field(2, 4);
    default: return make_field(q, 1);
  }
}

u64 theta(u64 q, unsigned m) {
  u64 n = 0, p = 1;
  for (unsigned i = 0; i < m; ++i) {
    n += p;
    p *= q;
  }
  return n;
}

bool proportional(const FieldSpec& F, const std::vector<u32>& a,
                  const std::vector<u32>& b) {
  for (u32 s = 1; s < F.order(); ++s) {
    bool all = true;
    for (std::size_t i = 0; i < a.size() && all; ++i)
      all = F.mul(s, a[i]) == b[i];
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("projective point lists cover the nonzero vectors exactly once") {
  for (auto [q, m] : std::vector<std::pair<u32, unsigned>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
    Field f = field_of_order(q);
    const FieldSpec& F = *f;
    ProjectivePointList pl = projective_points(f, m);
    CAPTURE(q);
    CAPTURE(m);
    CHECK(pl.points.size() == theta(q, m));
    // normalization and lexicographic listing
    for (std::size_t i = 0; i < pl.points.size(); ++i) {
      const auto& pt = pl.points[i];
      REQUIRE(pt.size() == m);
      std::size_t first = 0;
      while (first < m && pt[first] == 0) ++first;
      REQUIRE(first < m);
      CHECK(pt[first] == 1);
      if (i + 1 < pl.points.size()) {
        // compare coordinate by coordinate through the lex element order
        std::vector<u32> ra(m), rb(m);
        for (unsigned j = 0; j < m; ++j) {
          ra[j] = F.lex_rank(pt[j]);
          rb[j] = F.lex_rank(pl.points[i + 1][j]);
        }
        CHECK(ra < rb);
      }
    }
    // no two proportional; every nonzero vector proportional to exactly one
    for (std::size_t i = 0; i < pl.points.size(); ++i)
      for (std::size_t j = i + 1; j < pl.points.size(); ++j)
        CHECK(!proportional(F, pl.points[i], pl.points[j]));
    u64 total = 1;
    for (unsigned i = 0; i < m; ++i) total *= q;
    std::vector<u32> v(m, 0);
    u64 covered = 0;
    for (u64 t = 1; t < total; ++t) {
      u64 x = t;
      for (unsigned i = 0; i < m; ++i) {
        v[i] = u32(x % q);
        x /= q;
      }
      int matches = 0;
      for (const auto& pt : pl.points)
        if (proportional(F, pt, v)) ++matches;
      CHECK(matches == 1);
      ++covered;
    }
    CHECK(covered == total - 1);
  }

  // smallest case, frozen
  ProjectivePointList p12 = projective_points(make_field(2, 1), 2);
  REQUIRE(p12.points.size() == 3);
  CHECK(p12.points[0] == std::vector<u32>{0, 1});
  CHECK(p12.points[1] == std::vector<u32>{1, 0});
  CHECK(p12.points[2] == std::vector<u32>{1, 1});
}

TEST_CASE("simplex codes: parameters, constant weight, point columns") {
  for (auto [q, m] : std::vector<std::pair<u32, unsigned>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
    Field f = field_of_order(q);
    LinearCode s = simplex(f, m);
    CAPTURE(q);
    CAPTURE(m);
    CHECK(s.n() == theta(q, m));
    CHECK(s.k() == m);
    u64 qm = 1;
    for (unsigned i = 0; i < m; ++i) qm *= q;
    u64 d = qm / q;  // q^(m-1)
    WeightDistribution wd = weight_distribution(s);
    CHECK(wd.counts[0] == 1);
    CHECK(wd.counts[d] == qm - 1);
    CHECK(wd.nonzero().size() == 2);  // constant-weight code
    CHECK(min_distance(s) == d);

    // row space is spanned by the point coordinates
    ProjectivePointList pl = projective_points(f, m);
    Matrix pts(f, m, s.n());
    for (std::size_t j = 0; j < pl.points.size(); ++j)
      for (unsigned i = 0; i < m; ++i) pts.at(i, j) = pl.points[j][i];
    CHECK(row_space_equal(s.generator(), pts));
  }
}

TEST_CASE("trace construction reproduces the simplex distribution") {
  for (auto [q, m] : std::vector<std::pair<u32, unsigned>>{
           {2, 3}, {2, 4}, {2, 6}, {3, 2}, {3, 3}, {4, 2}, {4, 3},
           {5, 2}, {7, 2}, {9, 2}}) {
    Field f = field_of_order(q);
    CAPTURE(q);
    CAPTURE(m);
    LinearCode s = simplex(f, m);
    LinearCode t = simplex_trace(f, m);
    CHECK(t.n() == s.n());
    CHECK(t.k() == s.k());
    CHECK(weight_distribution(t) == weight_distribution(s));
  }
}

TEST_CASE("hamming codes: dual of simplex, distance exactly 3") {
  for (auto [q, m] : std::vector<std::pair<u32, unsigned>>{
           {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
    Field f = field_of_order(q);
    LinearCode h = hamming(f, m);
    LinearCode s = simplex(f, m);
    CAPTURE(q);
    CAPTURE(m);
    CHECK(h.n() == theta(q, m));
    CHECK(h.k() == h.n() - m);
    CHECK((h.generator() * s.generator().transpose()).is_zero());
    CHECK(row_space_equal(h.generator(), dual(s).generator()));
    CHECK(min_distance(h) == 3);
    // parity-check columns pairwise independent: distinct projective points
    ProjectivePointList pl = projective_points(f, m);
    for (std::size_t i = 0; i < pl.points.size(); ++i)
      for (std::size_t j = i + 1; j < pl.points.size(); ++j)
        CHECK(!proportional(*f, pl.points[i], pl.points[j]));
  }
  CHECK(hamming(make_field(2, 1), 3).n() == 7);
  CHECK(hamming(make_field(2, 1), 4).k() == 11);
  CHECK(weight_distribution(hamming(make_field(2, 1), 4)).counts[3] == 35);
}

TEST_CASE("reed-muller: parameters, nesting, duality") {
  for (unsigned m = 1; m <= 5; ++m) {
    for (unsigned r = 0; r < m; ++r) {
      LinearCode c = rm2(r, m);
      CAPTURE(m);
      CAPTURE(r);
      CHECK(c.n() == (std::size_t(1) << m));
      u64 dim = 0;
      for (unsigned i = 0; i <= r; ++i) dim += binomial(m, i).get_ui();
      CHECK(c.k() == dim);
      CHECK(min_distance(c) == (1u << (m - r)));
      if (r + 1 < m) {
        LinearCode bigger = rm2(r + 1, m);
        Matrix stacked(c.field(), c.k() + bigger.k(), c.n());
        for (std::size_t i = 0; i < c.k(); ++i)
          for (std::size_t j = 0; j < c.n(); ++j)
            stacked.at(i, j) = c.generator().at(i, j);
        for (std::size_t i = 0; i < bigger.k(); ++i)
          for (std::size_t j = 0; j < c.n(); ++j)
            stacked.at(c.k() + i, j) = bigger.generator().at(i, j);
        CHECK(rref(stacked).rank == bigger.k());  // containment
      }
      if (c.k() < c.n())
        CHECK(row_space_equal(dual(c).generator(),
                              rm2(m - 1 - r, m).generator()));
    }
  }
  // known shapes
  WeightDistribution r14 = weight_distribution(rm2(1, 4));
  CHECK(r14.counts[0] == 1);
  CHECK(r14.counts[8] == 30);
  CHECK(r14.counts[16] == 1);
  WeightDistribution r13 = weight_distribution(rm2(1, 3));
  CHECK(r13.counts[4] == 14);
  CHECK(min_distance(rm2(0, 5)) == 32);  // repetition
  LinearCode even = rm2(4, 5);
  CHECK(even.k() == 31);
  CHECK(min_distance(even) == 2);
  LinearCode full = rm2(3, 3);  // r = m gives the whole space
  CHECK(full.k() == full.n());
  CHECK(min_distance(full) == 1);
  CHECK_THROWS(rm2(4, 3));
  CHECK_THROWS(rm2(5, 4));
}

TEST_CASE("projective reed-muller: dimension formula is the rank") {
  for (u32 q : {2u, 3u, 4u, 5u}) {
    Field f = field_of_order(q);
    for (unsigned m : {2u, 3u}) {
      unsigned hmax = (m - 1) * (q - 1);
      for (unsigned h = 1; h <= hmax; ++h) {
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(h);
        LinearCode c = prm(f, m, h);
        CHECK(c.n() == theta(q, m));
        CHECK(c.k() == prm_dimension(q, m, h));
      }
      CHECK_THROWS(prm(f, m, 0));
      CHECK_THROWS(prm(f, m, hmax + 1));
    }
  }
  CHECK(prm_dimension(3, 3, 1) == 3);
  CHECK(prm_dimension(3, 3, 3) == 10);
  CHECK(prm_dimension(2, 3, 1) == 3);
}

TEST_CASE("projective reed-muller: distances and the simplex/hamming ends") {
  Field f3 = make_field(3, 1);
  LinearCode low = prm(f3, 3, 1);
  CHECK(low.n() == 13);
  CHECK(low.k() == 3);
  CHECK(min_distance(low) == 9);
  CHECK(weight_distribution(low) == weight_distribution(simplex(f3, 3)));

  LinearCode high = prm(f3, 3, 3);
  CHECK(high.k() == 10);
  CHECK(min_distance(high) == 3);

  LinearCode p231 = prm(make_field(2, 1), 3, 1);
  CHECK(p231.n() == 7);
  CHECK(p231.k() == 3);
  CHECK(min_distance(p231) == 4);

  CHECK(prm_min_distance(3, 3, 1) == 9);
  CHECK(prm_min_distance(3, 3, 3) == 3);
  CHECK(prm_min_distance(4, 3, 2) == 12);
  CHECK(min_distance(prm(field_of_order(4), 3, 2)) == 12);
}

TEST_CASE("projective reed-muller duality at complementary orders") {
  for (u32 q : {3u, 4u}) {
    Field f = field_of_order(q);
    for (unsigned m : {2u, 3u}) {
      unsigned hmax = (m - 1) * (q - 1);
      for (unsigned h = 1; h < hmax; ++h) {
        if (h % (q - 1) == 0) continue;
        unsigned hd = hmax - h;
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(h);
        LinearCode c = prm(f, m, h);
        CHECK(row_space_equal(dual(c).generator(),
                              prm(f, m, hd).generator()));
      }
    }
  }
}
