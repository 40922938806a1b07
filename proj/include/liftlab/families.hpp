#pragma once
// Classical code families: simplex (projective-point and trace forms),
// Hamming, binary Reed-Muller, and projective Reed-Muller codes.

#include <vector>

#include "liftlab/code.hpp"
#include "liftlab/field.hpp"

namespace liftlab {

// One representative per point of PG(m-1, q): the nonzero vectors whose
// first nonzero coordinate is 1, listed in lexicographic order
// (coordinates compared left to right, elements by coefficient vectors).
struct ProjectivePointList {
  Field field;
  unsigned m = 0;
  std::vector<std::vector<u32>> points;  // each of length m
};

ProjectivePointList projective_points(const Field& f, unsigned m);

// Columns of the generator are the projective points in order;
// parameters [(q^m-1)/(q-1), m, q^(m-1)].
LinearCode simplex(const Field& f, unsigned m);

// Trace form: rows (Tr(a^(j) b_i))_i for a basis a^(j) = alpha^j of
// GF(q^m) over GF(q) and coset representatives b_i = alpha^i,
// i = 0..n-1, alpha the primitive element of GF(q^m).
LinearCode simplex_trace(const Field& f, unsigned m,
                         u64 order_bound = kDefaultFieldOrderBound);

// Dual of the simplex code: [(q^m-1)/(q-1), n-m, 3].
LinearCode hamming(const Field& f, unsigned m);

// Binary Reed-Muller RM(r, m): evaluations over GF(2)^m of monomials of
// degree <= r, monomials ordered by degree then lexicographically,
// points ordered as integers 0..2^m-1 with x_1 the least significant bit.
LinearCode rm2(unsigned r, unsigned m);

// Projective Reed-Muller code of order h on PG(m-1, q): row space of the
// degree-h monomial evaluations at the normalized projective points.
LinearCode prm(const Field& f, unsigned m, unsigned h);

// Dimension of prm(q, m, h) in closed form.
u64 prm_dimension(u64 q, unsigned m, unsigned h);

// Minimum distance (q - v) q^(m-2-u) where h - 1 = u(q-1) + v, 0 <= v < q-1.
u64 prm_min_distance(u64 q, unsigned m, unsigned h);

}  // namespace liftlab
