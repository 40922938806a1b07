#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "liftlab/field.hpp"

using namespace liftlab;

namespace {

// Independent re-derivation of the modulus contract, sharing no code with
// the library: plain coefficient-vector polynomial arithmetic over GF(p).
using Poly = std::vector<u32>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Remainder of a divided by monic f.
Poly poly_rem(Poly a, const Poly& f, u32 p) {
  a = trim(a);
  while (a.size() >= f.size()) {
    u32 c = a.back();
    std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i) {
      u32 sub = c * f[i] % p;
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    a = trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, u32 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool oracle_irreducible(const Poly& f, u32 p) {
  u32 e = u32(f.size()) - 1;
  for (u32 d = 1; 2 * d <= e; ++d) {
    u64 count = 1;
    for (u32 i = 0; i < d; ++i) count *= p;
    for (u64 t = 0; t < count; ++t) {
      Poly g(d + 1, 0);
      u64 v = t;
      for (u32 i = 0; i < d; ++i) {
        g[i] = u32(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Multiplicative order of the class of x in GF(p)[x]/(f).
u64 oracle_x_order(const Poly& f, u32 p) {
  Poly x{0, 1}, acc{1};
  for (u64 i = 1;; ++i) {
    acc = poly_rem(poly_mul(acc, x, p), f, p);
    if (acc.size() == 1 && acc[0] == 1) return i;
  }
}

u64 residue_order(u32 a, u32 p) {
  u64 acc = 1;
  for (u64 i = 1;; ++i) {
    acc = acc * a % p;
    if (acc == 1) return i;
  }
}

// First monic degree-e polynomial, coefficients compared constant term
// first, that is irreducible with a primitive root.
Poly oracle_modulus(u32 p, u32 e) {
  u64 q = 1;
  for (u32 i = 0; i < e; ++i) q *= p;
  if (e == 1) {
    for (u32 c0 = 0; c0 < p; ++c0)
      if ((p - c0) % p != 0 && residue_order((p - c0) % p, p) == p - 1)
        return {c0, 1};
    return {};
  }
  u64 total = q;
  for (u64 t = 0; t < total; ++t) {
    Poly cand(e + 1, 0);
    u64 v = t;
    for (u32 i = 0; i < e; ++i) {
      cand[e - 1 - i] = u32(v % p);
      v /= p;
    }
    cand[e] = 1;
    if (!oracle_irreducible(cand, p)) continue;
    if (oracle_x_order(cand, p) != q - 1) continue;
    return cand;
  }
  return {};
}

}  // namespace

TEST_CASE("modulus matches an independent lexicographic search") {
  const std::vector<std::pair<u32, u32>> cases = {
      {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 8}, {3, 2}, {3, 3},
      {3, 4}, {5, 2},  {5, 3}, {7, 2}, {11, 2}, {13, 2},
      {2, 1}, {3, 1}, {5, 1}, {7, 1}, {13, 1}, {17, 1}, {31, 1}};
  for (auto [p, e] : cases) {
    CAPTURE(p);
    CAPTURE(e);
    Field f = make_field(p, e);
    CHECK(f->modulus() == oracle_modulus(p, e));
    CHECK(f->p() == p);
    CHECK(f->e() == e);
    u64 q = 1;
    for (u32 i = 0; i < e; ++i) q *= p;
    CHECK(f->order() == q);
  }
}

TEST_CASE("frozen moduli for the workhorse fields") {
  CHECK(make_field(2, 2)->modulus() == Poly{1, 1, 1});
  CHECK(make_field(2, 3)->modulus() == Poly{1, 0, 1, 1});
  CHECK(make_field(2, 4)->modulus() == Poly{1, 0, 0, 1, 1});
  CHECK(make_field(3, 2)->modulus() == Poly{2, 1, 1});
  CHECK(make_field(3, 3)->modulus() == Poly{1, 0, 2, 1});
  CHECK(make_field(3, 1)->modulus() == Poly{1, 1});
  CHECK(make_field(5, 1)->modulus() == Poly{2, 1});
  CHECK(make_field(3, 1)->primitive() == 2);
  CHECK(make_field(7, 1)->primitive() == 3);
}

TEST_CASE("field axioms hold exhaustively") {
  const std::vector<std::pair<u32, u32>> cases = {
      {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3},
      {3, 2}, {2, 4}, {5, 2}, {3, 3}, {2, 5}};
  for (auto [p, e] : cases) {
    Field f = make_field(p, e);
    const FieldSpec& F = *f;
    u32 q = u32(F.order());
    CAPTURE(q);
    bool ok = true;
    for (u32 a = 0; a < q && ok; ++a)
      for (u32 b = 0; b < q && ok; ++b) {
        ok = F.add(a, b) == F.add(b, a) && F.mul(a, b) == F.mul(b, a) &&
             F.sub(a, b) == F.add(a, F.neg(b)) &&
             F.add(F.sub(a, b), b) == a;
        for (u32 c = 0; c < q && ok; ++c)
          ok = F.add(F.add(a, b), c) == F.add(a, F.add(b, c)) &&
               F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)) &&
               F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c));
      }
    CHECK(ok);
    for (u32 a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.mul(a, 0) == 0);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a) CHECK(F.mul(a, F.inv(a)) == 1);
    }
  }
}

TEST_CASE("exp, log and pow agree with repeated multiplication") {
  for (auto [p, e] : std::vector<std::pair<u32, u32>>{
           {2, 4}, {3, 2}, {5, 1}, {7, 1}, {2, 5}, {3, 3}}) {
    Field f = make_field(p, e);
    const FieldSpec& F = *f;
    u64 q = F.order();
    // primitive really generates: its powers hit every nonzero element once
    std::set<u32> seen;
    u32 acc = 1;
    for (u64 i = 0; i < q - 1; ++i) {
      CHECK(F.exp(i) == acc);
      CHECK(F.log(acc) == i);
      seen.insert(acc);
      acc = F.mul(acc, F.primitive());
    }
    CHECK(acc == 1);
    CHECK(seen.size() == q - 1);
    for (u32 a = 1; a < q; ++a) {
      u32 power = 1;
      for (u64 n = 0; n < 2 * q; ++n) {
        CHECK(F.pow(a, n) == power);
        power = F.mul(power, a);
      }
    }
    CHECK(F.pow(0, 0) == 1);
    CHECK(F.pow(0, 5) == 0);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
    CHECK_THROWS_AS(F.log(0), std::domain_error);
  }
}

TEST_CASE("lexicographic element order sorts coefficient vectors") {
  for (auto [p, e] : std::vector<std::pair<u32, u32>>{
           {2, 3}, {3, 2}, {2, 4}, {5, 2}, {5, 1}}) {
    Field f = make_field(p, e);
    const FieldSpec& F = *f;
    u32 q = u32(F.order());
    CHECK(F.lex_element(0) == 0);
    std::set<u32> ranks;
    for (u32 a = 0; a < q; ++a) {
      ranks.insert(F.lex_rank(a));
      CHECK(F.lex_element(F.lex_rank(a)) == a);
    }
    CHECK(ranks.size() == q);
    for (u32 r = 0; r + 1 < q; ++r)
      CHECK(F.coeffs(F.lex_element(r)) < F.coeffs(F.lex_element(r + 1)));
  }
}

TEST_CASE("coefficient vectors round trip") {
  Field f = make_field(3, 3);
  for (u32 a = 0; a < f->order(); ++a) {
    auto c = f->coeffs(a);
    CHECK(c.size() == 3);
    CHECK(f->from_coeffs(c) == a);
  }
  CHECK_THROWS_AS(f->from_coeffs({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(f->from_coeffs({1, 2, 3}), std::invalid_argument);
}

TEST_CASE("element wrapper checks fields and mirrors the spec ops") {
  Field f = make_field(2, 2), g = make_field(3, 1);
  FieldElement a(f, 2), b(f, 3), zero(f, 0), one(f, 1);
  CHECK((a + b).idx() == f->add(2, 3));
  CHECK((a * b).idx() == f->mul(2, 3));
  CHECK((a - b).idx() == f->sub(2, 3));
  CHECK((a / b).idx() == f->mul(2, f->inv(3)));
  CHECK((-a).idx() == f->neg(2));
  CHECK(a.inv().idx() == f->inv(2));
  CHECK(a.pow(3).idx() == f->pow(2, 3));
  CHECK(zero.is_zero());
  CHECK(!one.is_zero());
  CHECK(a == FieldElement(f, 2));
  CHECK_THROWS_AS(a + FieldElement(g, 1), std::invalid_argument);
  CHECK_THROWS_AS(FieldElement(f, 9), std::invalid_argument);
}

TEST_CASE("make_field rejects bad parameters") {
  CHECK_THROWS_AS(make_field(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_field(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_field(2, 30, u64(1) << 20), BudgetError);
}

TEST_CASE("tower embeddings are ring isomorphisms onto the image") {
  struct Case {
    u32 p, e, ell;
  };
  for (Case c : {Case{2, 1, 2}, Case{2, 1, 4}, Case{2, 2, 2}, Case{2, 2, 3},
                 Case{3, 1, 2}, Case{3, 1, 3}, Case{3, 2, 2}, Case{5, 1, 2},
                 Case{7, 1, 2}, Case{2, 4, 2}}) {
    CAPTURE(c.p);
    CAPTURE(c.e);
    CAPTURE(c.ell);
    Field base = make_field(c.p, c.e);
    FieldTower t = make_tower(base, c.ell);
    const FieldSpec& B = *t.base();
    const FieldSpec& T = *t.top();
    u64 q = B.order();
    CHECK(T.order() == [&] {
      u64 v = 1;
      for (u32 i = 0; i < c.ell; ++i) v *= q;
      return v;
    }());
    CHECK(t.degree() == c.ell);
    CHECK(t.embed(0) == 0);
    CHECK(t.embed(1) == 1);

    std::set<u32> image;
    for (u32 a = 0; a < q; ++a) image.insert(t.embed(a));
    CHECK(image.size() == q);  // injective
    for (u32 a = 0; a < q; ++a)
      for (u32 b = 0; b < q; ++b) {
        CHECK(t.embed(B.add(a, b)) == T.add(t.embed(a), t.embed(b)));
        CHECK(t.embed(B.mul(a, b)) == T.mul(t.embed(a), t.embed(b)));
      }

    // The image is exactly the fixed field of x -> x^q.
    for (u32 x = 0; x < T.order(); ++x) {
      bool fixed = T.pow(x, q) == x;
      CHECK(t.in_image(x) == fixed);
      CHECK(t.in_image(x) == (image.count(x) > 0));
      if (fixed)
        CHECK(t.embed(t.unembed(x)) == x);
      else
        CHECK_THROWS_AS(t.unembed(x), std::domain_error);
    }
    for (u32 a = 0; a < q; ++a) CHECK(t.unembed(t.embed(a)) == a);
  }
}

TEST_CASE("tower coordinates round trip and extend the embedding") {
  for (auto [p, e, ell] : std::vector<std::array<u32, 3>>{
           {2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}}) {
    FieldTower t = make_tower(make_field(p, e), ell);
    const FieldSpec& T = *t.top();
    CHECK(t.basis().size() == ell);
    CHECK(t.basis()[0] == 1);
    for (u32 x = 0; x < T.order(); ++x) {
      auto coords = t.decompose(x);
      CHECK(coords.size() == ell);
      for (u32 ci : coords) CHECK(ci < t.base()->order());
      CHECK(t.compose(coords) == x);
      // recombine by hand through the embedding
      u32 acc = 0;
      for (u32 i = 0; i < ell; ++i)
        acc = T.add(acc, T.mul(t.embed(coords[i]), t.basis()[i]));
      CHECK(acc == x);
    }
    for (u32 a = 0; a < t.base()->order(); ++a) {
      auto coords = t.decompose(t.embed(a));
      CHECK(coords[0] == a);
      for (u32 i = 1; i < ell; ++i) CHECK(coords[i] == 0);
    }
  }
}

TEST_CASE("relative trace is additive, Frobenius-built and balanced") {
  for (auto [p, e, ell] : std::vector<std::array<u32, 3>>{
           {2, 1, 2}, {2, 1, 4}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}}) {
    FieldTower t = make_tower(make_field(p, e), ell);
    const FieldSpec& T = *t.top();
    u64 q = t.base()->order();
    std::vector<u64> hits(q, 0);
    for (u32 x = 0; x < T.order(); ++x) {
      u32 manual = 0;
      u64 qe = 1;
      for (u32 i = 0; i < ell; ++i) {
        manual = T.add(manual, T.pow(x, qe));
        qe *= q;
      }
      CHECK(t.embed(t.rel_trace(x)) == manual);
      hits[t.rel_trace(x)]++;
    }
    u64 expected = T.order() / q;  // kernel-coset size q^(ell-1)
    for (u64 h : hits) CHECK(h == expected);
    for (u32 x = 0; x < T.order(); ++x)
      for (u32 y = 0; y < 8 && y < T.order(); ++y)
        CHECK(t.rel_trace(T.add(x, y)) ==
              t.base()->add(t.rel_trace(x), t.rel_trace(y)));
  }
}
