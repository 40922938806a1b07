#pragma once
// GF(p^e) with a deterministic modulus choice, plus subfield towers.
//
// Elements are stored as indices: the element with coefficient vector
// (c_0, ..., c_{e-1}) over GF(p), constant term first, has index
// sum c_i * p^i.  All arithmetic below operates on these indices.

#include <memory>
#include <vector>

#include "liftlab/types.hpp"

namespace liftlab {

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

// Constructs GF(p^e).  The modulus is the lexicographically smallest monic
// irreducible polynomial of degree e over GF(p), coefficients compared
// constant term first, whose root is primitive.  Irreducibility is checked
// by trial division, primitivity through the prime factors of p^e - 1.
Field make_field(u32 p, u32 e, u64 order_bound = kDefaultFieldOrderBound);

class FieldSpec {
 public:
  static constexpr u32 kNoElement = 0xFFFFFFFFu;

  u32 p() const { return p_; }
  u32 e() const { return e_; }
  u64 order() const { return order_; }
  // e+1 coefficients, constant term first, leading coefficient 1.
  const std::vector<u32>& modulus() const { return modulus_; }
  // The root of the modulus for e > 1, the smallest primitive residue for e = 1.
  u32 primitive() const { return primitive_; }

  u32 add(u32 a, u32 b) const {
    if (p_ == 2) return a ^ b;
    u32 r = 0, place = 1;
    while (a | b) {
      u32 s = a % p_ + b % p_;
      if (s >= p_) s -= p_;
      r += s * place;
      place *= p_;
      a /= p_;
      b /= p_;
    }
    return r;
  }
  u32 neg(u32 a) const { return neg_[a]; }
  u32 sub(u32 a, u32 b) const { return add(a, neg_[b]); }
  u32 mul(u32 a, u32 b) const {
    return (a && b) ? exp_[u64(log_[a]) + log_[b]] : 0;
  }
  u32 inv(u32 a) const;          // extended gcd on polynomials; throws on 0
  u32 pow(u32 a, u64 n) const;   // square and multiply; pow(0,0) = 1
  u32 exp(u64 i) const { return exp_[i % (order_ - 1)]; }
  u32 log(u32 a) const;          // throws on 0

  std::vector<u32> coeffs(u32 a) const;
  u32 from_coeffs(const std::vector<u32>& c) const;

  // Rank of an element when elements are ordered by their coefficient
  // vectors, constant term compared first.  Fixes enumeration order.
  u32 lex_rank(u32 a) const { return idx_to_lex_[a]; }
  u32 lex_element(u32 rank) const { return lex_to_idx_[rank]; }

  bool same(const FieldSpec& o) const {
    return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
  }

 private:
  friend Field make_field(u32, u32, u64);
  FieldSpec() = default;
  void build_tables();

  u32 p_ = 0, e_ = 0;
  u64 order_ = 0;
  std::vector<u32> modulus_;
  u32 primitive_ = 0;
  std::vector<u32> exp_;   // 2*(order-1) entries, exp_[i] = primitive^i
  std::vector<u32> log_;   // order entries, log_[0] unused
  std::vector<u32> neg_;
  std::vector<u32> lex_to_idx_, idx_to_lex_;
};

// Value type pairing an element index with its field; checks operands
// belong to the same field.  Hot paths use FieldSpec on raw indices instead.
class FieldElement {
 public:
  FieldElement(Field f, u32 idx);

  const Field& field() const { return f_; }
  u32 idx() const { return v_; }
  std::vector<u32> coeffs() const { return f_->coeffs(v_); }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(u64 n) const;
  bool operator==(const FieldElement& o) const;

 private:
  Field f_;
  u32 v_;
};

// GF(q) inside GF(q^ell), q = base order.  embed maps the base primitive
// element a to g^(((q^ell-1)/(q-1)) * s) for the top primitive g and the
// smallest s >= 1 making the image a root of the base modulus.
class FieldTower {
 public:
  const Field& base() const { return base_; }
  const Field& top() const { return top_; }
  u32 degree() const { return ell_; }

  u32 embed(u32 base_elt) const { return embed_[base_elt]; }
  bool in_image(u32 top_elt) const {
    return unembed_[top_elt] != FieldSpec::kNoElement;
  }
  u32 unembed(u32 top_elt) const;  // throws if not in the embedded subfield

  // 1, g, g^2, ..., g^(ell-1): a basis of the top field over the base.
  const std::vector<u32>& basis() const { return basis_; }

  // Coordinates of a top element with respect to basis(), as base elements.
  std::vector<u32> decompose(u32 top_elt) const;
  u32 compose(const std::vector<u32>& coords) const;

  // Relative trace: sum of a^(q^i) for i < ell, returned as a base element.
  u32 rel_trace(u32 top_elt) const;

 private:
  friend FieldTower make_tower(const Field&, u32, u64);
  FieldTower() = default;

  Field base_, top_;
  u32 ell_ = 0;
  std::vector<u32> embed_;    // base order entries
  std::vector<u32> unembed_;  // top order entries, kNoElement off image
  std::vector<u32> basis_;
  std::vector<u32> coord_rank_;  // top elt -> rank of its coordinate tuple
};

FieldTower make_tower(const Field& base, u32 ell,
                      u64 order_bound = kDefaultFieldOrderBound);

}  // namespace liftlab
