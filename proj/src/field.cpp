#include "liftlab/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace liftlab {
namespace {

// Dense polynomials over GF(p), coefficient vectors with constant term
// first, trailing zeros trimmed (empty vector = zero polynomial).
using Poly = std::vector<u32>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u32 mod_inv_prime(u32 a, u32 p) {
  // Fermat: p is prime and a != 0.
  u32 r = 1;
  u64 b = a, n = p - 2;
  while (n) {
    if (n & 1) r = u32(r * b % p);
    b = b * b % p;
    n >>= 1;
  }
  return r;
}

void poly_mod(Poly& a, const Poly& m, u32 p) {
  // m monic.
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    u32 lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    if (lead) {
      for (std::size_t i = 0; i < dm; ++i) {
        u64 v = a[shift + i] + u64(p - 1) * lead % p * m[i] % p;
        a[shift + i] = u32(v % p);
      }
    }
    a.pop_back();
    trim(a);
    if (a.size() <= dm) break;
  }
  trim(a);
}

Poly poly_mul(const Poly& a, const Poly& b, u32 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = u32((r[i + j] + u64(a[i]) * b[j]) % p);
  }
  trim(r);
  return r;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, u32 p) {
  Poly r = poly_mul(a, b, p);
  poly_mod(r, m, p);
  return r;
}

Poly poly_powmod(Poly base, u64 n, const Poly& m, u32 p) {
  Poly r{1};
  poly_mod(base, m, p);
  while (n) {
    if (n & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    n >>= 1;
  }
  return r;
}

bool poly_divides(const Poly& d, Poly f, u32 p) {
  poly_mod(f, d, p);
  return f.empty();
}

// Trial division against every monic polynomial of degree up to deg(f)/2.
bool is_irreducible(const Poly& f, u32 p) {
  std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  if (f[0] == 0 && deg > 1) return false;  // divisible by x
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    u64 count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (u64 t = 0; t < count; ++t) {
      Poly divisor(d + 1, 0);
      u64 v = t;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = u32(v % p);
        v /= p;
      }
      divisor[d] = 1;
      if (poly_divides(divisor, f, p)) return false;
    }
  }
  return true;
}

// Quotient of a by monic-leading d; remainder is left in a.
Poly poly_divmod(Poly& a, const Poly& d, u32 p) {
  const std::size_t dd = d.size() - 1;
  const u32 linv = mod_inv_prime(d.back(), p);
  Poly q;
  if (a.size() > dd) q.assign(a.size() - dd, 0);
  while (a.size() > dd) {
    std::size_t shift = a.size() - 1 - dd;
    u32 qc = u32(u64(a.back()) * linv % p);
    q[shift] = qc;
    if (qc) {
      for (std::size_t i = 0; i < dd; ++i) {
        u64 v = a[shift + i] + u64(p - 1) * qc % p * d[i] % p;
        a[shift + i] = u32(v % p);
      }
    }
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

Poly poly_sub(const Poly& a, const Poly& b, u32 p) {
  Poly r = a;
  r.resize(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] = u32((r[i] + u64(p) - b[i]) % p);
  trim(r);
  return r;
}

// Inverse of a modulo m by the extended Euclidean algorithm.
Poly poly_invmod(Poly a, const Poly& m, u32 p) {
  poly_mod(a, m, p);
  Poly r0 = m, r1 = a, s0, s1{1};
  while (!r1.empty()) {
    Poly rem = r0;
    Poly q = poly_divmod(rem, r1, p);
    Poly s2 = poly_sub(s0, poly_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::domain_error("element not invertible");
  u32 scale = mod_inv_prime(r0[0], p);
  for (auto& c : s0) c = u32(u64(c) * scale % p);
  trim(s0);
  poly_mod(s0, m, p);
  return s0;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> fs;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

u32 poly_to_idx(const Poly& a, u32 p) {
  u64 v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return u32(v);
}

Poly idx_to_poly(u64 v, u32 p) {
  Poly a;
  while (v) {
    a.push_back(u32(v % p));
    v /= p;
  }
  return a;
}

// Root of x + c0 over GF(p) has multiplicative order p-1?
bool residue_primitive(u32 g, u32 p, const std::vector<u64>& factors) {
  if (g == 0) return false;
  if (p == 2) return g == 1;
  for (u64 r : factors) {
    u64 n = (u64(p) - 1) / r, b = g, acc = 1;
    while (n) {
      if (n & 1) acc = acc * b % p;
      b = b * b % p;
      n >>= 1;
    }
    if (acc == 1) return false;
  }
  return true;
}

}  // namespace

Field make_field(u32 p, u32 e, u64 order_bound) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (e < 1) throw std::invalid_argument("e must be at least 1");
  u64 order = 1;
  for (u32 i = 0; i < e; ++i) {
    if (order > order_bound / p)
      throw BudgetError("field order " + std::to_string(p) + "^" +
                        std::to_string(e) + " exceeds bound " +
                        std::to_string(order_bound));
    order *= p;
  }
  if (order > order_bound)
    throw BudgetError("field order exceeds bound");
  if (order > (u64(1) << 31))
    throw BudgetError("field order exceeds index range");

  auto factors = prime_factors(order - 1);
  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->e_ = e;
  spec->order_ = order;

  if (e == 1) {
    // Smallest primitive residue; modulus is the lexicographically first
    // monic linear polynomial with a primitive root.
    u32 g = 0;
    for (u32 c = 1; c < p; ++c)
      if (residue_primitive(c, p, factors)) {
        g = c;
        break;
      }
    spec->primitive_ = g;
    for (u32 c0 = 0; c0 < p; ++c0) {
      u32 root = (p - c0) % p;
      if (residue_primitive(root, p, factors)) {
        spec->modulus_ = {c0, 1};
        break;
      }
    }
  } else {
    // Lexicographically smallest monic irreducible of degree e whose root
    // (the class of x) is primitive; coefficients compared constant first.
    u64 total = order;  // p^e candidates
    bool found = false;
    for (u64 t = 0; t < total && !found; ++t) {
      // c_0 is the most significant digit of the counter so candidates
      // appear in increasing lexicographic order, constant term first.
      Poly cand(e + 1, 0);
      u64 v = t;
      for (u32 i = 0; i < e; ++i) {
        cand[e - 1 - i] = u32(v % p);
        v /= p;
      }
      cand[e] = 1;
      if (!is_irreducible(cand, p)) continue;
      bool primitive = true;
      for (u64 r : factors) {
        Poly img = poly_powmod(Poly{0, 1}, (order - 1) / r, cand, p);
        if (img.size() == 1 && img[0] == 1) {
          primitive = false;
          break;
        }
      }
      if (!primitive) continue;
      spec->modulus_ = cand;
      spec->primitive_ = p;  // the class of x
      found = true;
    }
    if (!found) throw std::logic_error("no primitive polynomial found");
  }

  spec->build_tables();
  return spec;
}

void FieldSpec::build_tables() {
  const u64 n1 = order_ - 1;
  exp_.assign(2 * n1, 0);
  log_.assign(order_, 0);
  exp_[0] = 1;
  if (e_ == 1) {
    for (u64 i = 1; i < n1; ++i)
      exp_[i] = u32(u64(exp_[i - 1]) * primitive_ % p_);
  } else {
    // multiply by x and reduce once per step
    std::vector<u32> cur(e_, 0);
    cur[0] = 1;
    for (u64 i = 1; i < n1; ++i) {
      u32 carry = cur[e_ - 1];
      for (u32 j = e_ - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      if (carry) {
        for (u32 j = 0; j < e_; ++j) {
          u64 v = cur[j] + u64(p_ - 1) * carry % p_ * modulus_[j] % p_;
          cur[j] = u32(v % p_);
        }
      }
      u64 idx = 0;
      for (u32 j = e_; j-- > 0;) idx = idx * p_ + cur[j];
      exp_[i] = u32(idx);
    }
  }
  for (u64 i = 0; i < n1; ++i) exp_[n1 + i] = exp_[i];
  std::vector<bool> seen(order_, false);
  for (u64 i = 0; i < n1; ++i) {
    if (exp_[i] == 0 || seen[exp_[i]])
      throw std::logic_error("primitive element has short order");
    seen[exp_[i]] = true;
    log_[exp_[i]] = u32(i);
  }

  neg_.assign(order_, 0);
  if (p_ == 2) {
    for (u64 a = 0; a < order_; ++a) neg_[a] = u32(a);
  } else {
    for (u64 a = 0; a < order_; ++a) {
      u64 v = a, r = 0, place = 1;
      for (u32 j = 0; j < e_; ++j) {
        u32 c = u32(v % p_);
        r += u64(c ? p_ - c : 0) * place;
        place *= p_;
        v /= p_;
      }
      neg_[a] = u32(r);
    }
  }

  lex_to_idx_.assign(order_, 0);
  idx_to_lex_.assign(order_, 0);
  for (u64 a = 0; a < order_; ++a) {
    u64 v = a, rank = 0;
    for (u32 j = 0; j < e_; ++j) {
      rank = rank * p_ + v % p_;  // constant term becomes most significant
      v /= p_;
    }
    idx_to_lex_[a] = u32(rank);
    lex_to_idx_[rank] = u32(a);
  }
}

u32 FieldSpec::inv(u32 a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  Poly pa = idx_to_poly(a, p_);
  Poly r = poly_invmod(pa, modulus_, p_);
  return poly_to_idx(r, p_);
}

u32 FieldSpec::pow(u32 a, u64 n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  u32 r = 1, b = a;
  while (n) {
    if (n & 1) r = mul(r, b);
    b = mul(b, b);
    n >>= 1;
  }
  return r;
}

u32 FieldSpec::log(u32 a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return log_[a];
}

std::vector<u32> FieldSpec::coeffs(u32 a) const {
  std::vector<u32> c(e_, 0);
  for (u32 i = 0; i < e_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

u32 FieldSpec::from_coeffs(const std::vector<u32>& c) const {
  if (c.size() != e_) throw std::invalid_argument("coefficient count");
  u64 v = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
    v = v * p_ + c[i];
  }
  return u32(v);
}

FieldElement::FieldElement(Field f, u32 idx) : f_(std::move(f)), v_(idx) {
  if (!f_) throw std::invalid_argument("null field");
  if (v_ >= f_->order()) throw std::invalid_argument("element out of range");
}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field()->same(*b.field()))
    throw std::invalid_argument("elements of different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(*this, o);
  return {f_, f_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(*this, o);
  return {f_, f_->sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(*this, o);
  return {f_, f_->mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(*this, o);
  return {f_, f_->mul(v_, f_->inv(o.v_))};
}
FieldElement FieldElement::operator-() const { return {f_, f_->neg(v_)}; }
FieldElement FieldElement::inv() const { return {f_, f_->inv(v_)}; }
FieldElement FieldElement::pow(u64 n) const { return {f_, f_->pow(v_, n)}; }
bool FieldElement::operator==(const FieldElement& o) const {
  return f_->same(*o.field()) && v_ == o.v_;
}

u32 FieldTower::unembed(u32 top_elt) const {
  u32 b = unembed_[top_elt];
  if (b == FieldSpec::kNoElement)
    throw std::domain_error("element not in embedded subfield");
  return b;
}

std::vector<u32> FieldTower::decompose(u32 top_elt) const {
  u64 rank = coord_rank_[top_elt];
  std::vector<u32> c(ell_, 0);
  u64 q = base_->order();
  for (u32 i = 0; i < ell_; ++i) {
    c[i] = u32(rank % q);
    rank /= q;
  }
  return c;
}

u32 FieldTower::compose(const std::vector<u32>& coords) const {
  if (coords.size() != ell_) throw std::invalid_argument("coordinate count");
  u32 acc = 0;
  for (u32 i = 0; i < ell_; ++i) {
    if (coords[i] >= base_->order())
      throw std::invalid_argument("coordinate out of range");
    acc = top_->add(acc, top_->mul(embed_[coords[i]], basis_[i]));
  }
  return acc;
}

u32 FieldTower::rel_trace(u32 top_elt) const {
  const u64 q = base_->order();
  u32 acc = top_elt, term = top_elt;
  for (u32 i = 1; i < ell_; ++i) {
    term = top_->pow(term, q);
    acc = top_->add(acc, term);
  }
  u32 b = unembed_[acc];
  if (b == FieldSpec::kNoElement)
    throw std::logic_error("relative trace left the base field");
  return b;
}

FieldTower make_tower(const Field& base, u32 ell, u64 order_bound) {
  if (!base) throw std::invalid_argument("null base field");
  if (ell < 1) throw std::invalid_argument("tower degree must be at least 1");

  FieldTower t;
  t.base_ = base;
  t.ell_ = ell;
  t.top_ = make_field(base->p(), base->e() * ell, order_bound);
  const Field& top = t.top_;

  const u64 q = base->order(), Q = top->order();
  const u64 nsub = (Q - 1) / (q - 1);
  const u32 beta = top->primitive();

  // Target: image of the base primitive element must be a root of its
  // minimal polynomial over GF(p) (the base modulus for e > 1, x - alpha
  // for e = 1), so that powers extend to a ring isomorphism.
  Poly minpoly;
  if (base->e() > 1) {
    minpoly = base->modulus();
  } else {
    minpoly = {(base->p() - base->primitive()) % base->p(), 1};
  }

  u32 gamma = FieldSpec::kNoElement;
  for (u64 s = 1; s <= q - 1; ++s) {
    u32 cand = top->pow(beta, nsub * s);
    u32 acc = 0;
    for (std::size_t j = minpoly.size(); j-- > 0;)
      acc = top->add(top->mul(acc, cand), minpoly[j]);
    if (acc == 0) {
      gamma = cand;
      break;
    }
  }
  if (gamma == FieldSpec::kNoElement)
    throw std::logic_error("no embedding found");

  t.embed_.assign(q, 0);
  t.embed_[0] = 0;
  u32 cur = 1;
  for (u64 i = 0; i < q - 1; ++i) {
    t.embed_[base->exp(i)] = cur;
    cur = top->mul(cur, gamma);
  }

  t.unembed_.assign(Q, FieldSpec::kNoElement);
  for (u64 a = 0; a < q; ++a) {
    if (t.unembed_[t.embed_[a]] != FieldSpec::kNoElement)
      throw std::logic_error("embedding not injective");
    t.unembed_[t.embed_[a]] = u32(a);
  }

  if (t.embed_[1] != 1) throw std::logic_error("embedding moves 1");
  if (q <= 256) {
    // full ring-isomorphism check on small base fields
    for (u64 a = 0; a < q; ++a)
      for (u64 b = 0; b < q; ++b) {
        if (t.embed_[base->add(u32(a), u32(b))] !=
            top->add(t.embed_[a], t.embed_[b]))
          throw std::logic_error("embedding not additive");
        if (t.embed_[base->mul(u32(a), u32(b))] !=
            top->mul(t.embed_[a], t.embed_[b]))
          throw std::logic_error("embedding not multiplicative");
      }
  }

  t.basis_.assign(ell, 0);
  for (u32 i = 0; i < ell; ++i) t.basis_[i] = top->pow(beta, i);

  // Every top element must decompose uniquely over the basis; build the
  // lookup by composing all coordinate tuples.
  t.coord_rank_.assign(Q, FieldSpec::kNoElement);
  for (u64 rank = 0; rank < Q; ++rank) {
    u64 v = rank;
    u32 acc = 0;
    for (u32 i = 0; i < ell; ++i) {
      u32 ci = u32(v % q);
      v /= q;
      acc = top->add(acc, top->mul(t.embed_[ci], t.basis_[i]));
    }
    if (t.coord_rank_[acc] != FieldSpec::kNoElement)
      throw std::logic_error("tower basis is dependent");
    t.coord_rank_[acc] = u32(rank);
  }
  return t;
}

}  // namespace liftlab
