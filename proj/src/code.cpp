#include "liftlab/code.hpp"

#include <algorithm>
#include <stdexcept>

#include "liftlab/enumerate.hpp"

namespace liftlab {

BigInt WeightDistribution::total() const {
  BigInt s = 0;
  for (const BigInt& c : counts) s += c;
  return s;
}

long WeightDistribution::min_positive() const {
  for (std::size_t w = 1; w < counts.size(); ++w)
    if (counts[w] != 0) return long(w);
  return -1;
}

std::vector<std::pair<std::size_t, BigInt>> WeightDistribution::nonzero()
    const {
  std::vector<std::pair<std::size_t, BigInt>> r;
  for (std::size_t w = 0; w < counts.size(); ++w)
    if (counts[w] != 0) r.emplace_back(w, counts[w]);
  return r;
}

LinearCode::LinearCode(Field f, Matrix gen, std::vector<std::size_t> pivots)
    : f_(std::move(f)),
      n_(gen.cols()),
      k_(gen.rows()),
      gen_(std::move(gen)),
      pivots_(std::move(pivots)) {}

std::vector<u32> LinearCode::encode(const std::vector<u32>& message) const {
  if (message.size() != k_) throw std::invalid_argument("message length");
  const FieldSpec& F = *f_;
  std::vector<u32> word(n_, 0);
  for (std::size_t i = 0; i < k_; ++i) {
    u32 m = message[i];
    if (m >= F.order()) throw std::invalid_argument("message symbol");
    if (!m) continue;
    const u32* row = gen_.row(i);
    for (std::size_t j = 0; j < n_; ++j)
      word[j] = F.add(word[j], F.mul(m, row[j]));
  }
  return word;
}

LinearCode code_from_generator(const Matrix& g) {
  if (g.cols() < 1) throw std::invalid_argument("empty length");
  RrefResult r = rref(g);
  if (r.rank == 0) throw std::invalid_argument("zero generator matrix");
  Matrix gen(g.field(), r.rank, g.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) gen.at(i, j) = r.mat.at(i, j);
  return LinearCode(g.field(), std::move(gen), std::move(r.pivots));
}

LinearCode dual(const LinearCode& c) {
  if (c.k() == c.n())
    throw ZeroDualError("dual of the full space is the zero code");
  Matrix kern = kernel_basis(c.generator());
  LinearCode d = code_from_generator(kern);
  Matrix prod = c.generator() * d.generator().transpose();
  if (!prod.is_zero()) throw std::logic_error("dual fails orthogonality");
  return d;
}

namespace {

struct WeightTally {
  std::size_t n;
  std::vector<u64> counts;
  explicit WeightTally(std::size_t len) : n(len), counts(len + 1, 0) {}
  void operator()(const u32* word) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < n; ++j) w += word[j] != 0;
    ++counts[w];
  }
};

BigInt side_size(u64 q, std::size_t dim) { return big_pow(q, dim); }

WeightDistribution enumerate_side(const LinearCode& c, unsigned workers) {
  detail::WalkPlan plan = detail::make_plan(c.generator());
  auto states = detail::walk_all(plan, workers, WeightTally(c.n()));
  WeightDistribution wd;
  wd.n = c.n();
  wd.counts.assign(c.n() + 1, 0);
  for (const WeightTally& t : states)
    for (std::size_t w = 0; w <= c.n(); ++w) wd.counts[w] += t.counts[w];
  return wd;
}

}  // namespace

WeightDistribution weight_distribution(const LinearCode& c,
                                       WdStrategy strategy,
                                       const Budget& budget,
                                       unsigned workers) {
  const u64 q = c.field()->order();
  const BigInt direct_side = side_size(q, c.k());
  const BigInt dual_side = side_size(q, c.n() - c.k());

  auto over = [&](const BigInt& side) { return side > budget.enumeration; };
  auto budget_error = [&]() {
    return BudgetError("enumeration budget " +
                       std::to_string(budget.enumeration) +
                       " exceeded: side sizes " + direct_side.get_str() +
                       " and " + dual_side.get_str());
  };

  if (strategy == WdStrategy::automatic)
    strategy = direct_side <= dual_side ? WdStrategy::direct
                                        : WdStrategy::via_dual;

  if (strategy == WdStrategy::direct) {
    if (over(direct_side)) throw budget_error();
    return enumerate_side(c, workers);
  }

  if (over(dual_side)) throw budget_error();
  WeightDistribution dual_wd;
  if (c.k() == c.n()) {
    dual_wd.n = c.n();
    dual_wd.counts.assign(c.n() + 1, 0);
    dual_wd.counts[0] = 1;  // zero code
  } else {
    dual_wd = enumerate_side(dual(c), workers);
  }
  return macwilliams(dual_wd, q, c.n() - c.k());
}

unsigned min_distance(const LinearCode& c, const Budget& budget,
                      unsigned workers) {
  long d = weight_distribution(c, WdStrategy::automatic, budget, workers)
               .min_positive();
  if (d < 0) throw std::logic_error("code has no nonzero word");
  return unsigned(d);
}

WeightDistribution macwilliams(const WeightDistribution& w, u64 order,
                               u64 dim) {
  const std::size_t n = w.n;
  if (w.counts.size() != n + 1)
    throw std::invalid_argument("distribution length mismatch");
  if (order < 2) throw std::invalid_argument("field order must be >= 2");
  for (const BigInt& c : w.counts)
    if (c < 0) throw std::invalid_argument("negative weight count");
  const BigInt qk = big_pow(order, dim);
  if (w.total() != qk)
    throw std::invalid_argument(
        "weight distribution does not sum to order^dim");

  // binomials and powers of (order-1)
  std::vector<std::vector<BigInt>> C(n + 1, std::vector<BigInt>(n + 1, 0));
  for (std::size_t a = 0; a <= n; ++a) {
    C[a][0] = 1;
    for (std::size_t b = 1; b <= a; ++b)
      C[a][b] = C[a - 1][b - 1] + (b <= a - 1 ? C[a - 1][b] : BigInt(0));
  }
  std::vector<BigInt> qm1(n + 1);
  qm1[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) qm1[i] = qm1[i - 1] * (order - 1);

  WeightDistribution out;
  out.n = n;
  out.counts.assign(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (w.counts[i] == 0) continue;
      // Krawtchouk K_j(i) = sum_h (-1)^h C(i,h) C(n-i, j-h) (order-1)^(j-h)
      BigInt kr = 0;
      for (std::size_t h = 0; h <= j && h <= i; ++h) {
        if (j - h > n - i) continue;
        BigInt term = C[i][h] * C[n - i][j - h] * qm1[j - h];
        if (h & 1)
          kr -= term;
        else
          kr += term;
      }
      acc += w.counts[i] * kr;
    }
    BigInt quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(),
                qk.get_mpz_t());
    if (rem != 0)
      throw std::invalid_argument("transform does not clear to integers");
    if (quot < 0)
      throw std::invalid_argument("transform produced a negative count");
    out.counts[j] = quot;
  }
  return out;
}

}  // namespace liftlab
