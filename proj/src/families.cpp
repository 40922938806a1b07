#include "liftlab/families.hpp"

#include <stdexcept>

namespace liftlab {
namespace {

// Sum of q^j for j < m, guarded against the length bound.  The bound
// check each round keeps pw small enough that pw * q cannot overflow.
u64 projective_count(u64 q, unsigned m) {
  u64 n = 0, pw = 1;
  for (unsigned j = 0; j < m; ++j) {
    n += pw;
    if (n > kDefaultLengthBound)
      throw BudgetError("code length exceeds bound");
    if (j + 1 < m) pw *= q;
  }
  return n;
}

}  // namespace

ProjectivePointList projective_points(const Field& f, unsigned m) {
  if (!f) throw std::invalid_argument("null field");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  const u64 q = f->order();
  const u64 n = projective_count(q, m);

  ProjectivePointList out;
  out.field = f;
  out.m = m;
  out.points.reserve(n);
  // Normalized representatives in lexicographic order: vectors whose
  // first nonzero coordinate is 1 sort by that position, last first,
  // then by the free tail.
  for (unsigned pos = m; pos-- > 0;) {
    const unsigned tail = m - pos - 1;
    u64 tails = 1;
    for (unsigned j = 0; j < tail; ++j) tails *= q;
    for (u64 t = 0; t < tails; ++t) {
      std::vector<u32> pt(m, 0);
      pt[pos] = 1;
      u64 v = t;
      for (unsigned j = m; j-- > pos + 1;) {
        // leftmost tail coordinate is the most significant digit
        pt[j] = f->lex_element(u32(v % q));
        v /= q;
      }
      out.points.push_back(std::move(pt));
    }
  }
  if (out.points.size() != n) throw std::logic_error("point count mismatch");
  return out;
}

LinearCode simplex(const Field& f, unsigned m) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  ProjectivePointList pl = projective_points(f, m);
  const std::size_t n = pl.points.size();
  Matrix g(f, m, n);
  for (std::size_t j = 0; j < n; ++j)
    for (unsigned i = 0; i < m; ++i) g.at(i, j) = pl.points[j][i];
  LinearCode c = code_from_generator(g);
  if (c.k() != m) throw std::logic_error("simplex rank mismatch");
  return c;
}

LinearCode simplex_trace(const Field& f, unsigned m, u64 order_bound) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  FieldTower tw = make_tower(f, m, order_bound);
  const Field& top = tw.top();
  const u64 n = (top->order() - 1) / (f->order() - 1);
  if (n > kDefaultLengthBound) throw BudgetError("code length exceeds bound");
  Matrix g(f, m, std::size_t(n));
  for (unsigned j = 0; j < m; ++j)
    for (u64 i = 0; i < n; ++i)
      g.at(j, std::size_t(i)) = tw.rel_trace(top->exp(i + j));
  LinearCode c = code_from_generator(g);
  if (c.k() != m) throw std::logic_error("trace form rank mismatch");
  return c;
}

LinearCode hamming(const Field& f, unsigned m) { return dual(simplex(f, m)); }

LinearCode rm2(unsigned r, unsigned m) {
  if (m < 1 || m > 20) throw std::invalid_argument("m out of range");
  if (r > m) throw std::invalid_argument("order exceeds variable count");
  Field f2 = make_field(2, 1);
  const u64 n = u64(1) << m;

  // monomials as variable subsets, by degree then lexicographically
  std::vector<std::vector<unsigned>> monos;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned next, unsigned left) -> void {
    if (left == 0) {
      monos.push_back(cur);
      return;
    }
    for (unsigned v = next; v + left <= m + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1, left - 1);
      cur.pop_back();
    }
  };
  for (unsigned d = 0; d <= r; ++d) rec(rec, 1, d);

  Matrix g(f2, monos.size(), std::size_t(n));
  for (std::size_t row = 0; row < monos.size(); ++row)
    for (u64 t = 0; t < n; ++t) {
      u32 val = 1;
      for (unsigned v : monos[row]) val &= u32(t >> (v - 1)) & 1;
      g.at(row, std::size_t(t)) = val;
    }
  LinearCode c = code_from_generator(g);
  if (c.k() != monos.size()) throw std::logic_error("rm2 rank mismatch");
  return c;
}

LinearCode prm(const Field& f, unsigned m, unsigned h) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  const u64 q = f->order();
  if (h < 1 || u64(h) > (u64(m) - 1) * (q - 1))
    throw std::invalid_argument("degree out of range");
  ProjectivePointList pl = projective_points(f, m);
  const std::size_t n = pl.points.size();

  // exponent vectors summing to h, lexicographic, e_1 most significant
  std::vector<std::vector<unsigned>> expo;
  std::vector<unsigned> cur(m, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
    if (pos + 1 == m) {
      cur[pos] = left;
      expo.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, h);

  const FieldSpec& F = *f;
  Matrix g(f, expo.size(), n);
  for (std::size_t row = 0; row < expo.size(); ++row)
    for (std::size_t j = 0; j < n; ++j) {
      u32 val = 1;
      for (unsigned i = 0; i < m; ++i)
        val = F.mul(val, F.pow(pl.points[j][i], expo[row][i]));
      g.at(row, j) = val;
    }
  LinearCode c = code_from_generator(g);
  if (c.k() != prm_dimension(q, m, h))
    throw std::logic_error("projective Reed-Muller dimension mismatch");
  return c;
}

u64 prm_dimension(u64 q, unsigned m, unsigned h) {
  if (m < 2 || h < 1 || u64(h) > (u64(m) - 1) * (q - 1))
    throw std::invalid_argument("bad parameters");
  BigInt dim = 0;
  for (u64 t = 1; t <= h; ++t) {
    if ((h - t) % (q - 1) != 0) continue;
    for (unsigned j = 0; j <= m; ++j) {
      if (u64(j) * q > t) break;  // later terms vanish
      u64 b = t - u64(j) * q;
      BigInt term = binomial(m, j) * binomial(b + m - 1, b);
      if (j & 1)
        dim -= term;
      else
        dim += term;
    }
  }
  if (dim < 0 || !dim.fits_ulong_p())
    throw std::logic_error("dimension out of range");
  return dim.get_ui();
}

u64 prm_min_distance(u64 q, unsigned m, unsigned h) {
  if (m < 2 || h < 1 || u64(h) > (u64(m) - 1) * (q - 1))
    throw std::invalid_argument("bad parameters");
  u64 u = (h - 1) / (q - 1), v = (h - 1) % (q - 1);
  u64 d = q - v;
  for (u64 i = 0; i < u64(m) - 2 - u; ++i) d *= q;
  return d;
}

}  // namespace liftlab
