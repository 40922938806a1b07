#include "liftlab/matrix.hpp"

#include <stdexcept>

namespace liftlab {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
  if (!f_) throw std::invalid_argument("null field");
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (!f_->same(*o.f_)) throw std::invalid_argument("field mismatch");
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
  Matrix r(f_, rows_, o.cols_);
  const FieldSpec& F = *f_;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      u32 v = at(i, k);
      if (!v) continue;
      const u32* orow = o.row(k);
      u32* rrow = r.row(i);
      for (std::size_t j = 0; j < o.cols_; ++j)
        rrow[j] = F.add(rrow[j], F.mul(v, orow[j]));
    }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return f_->same(*o.f_) && rows_ == o.rows_ && cols_ == o.cols_ &&
         a_ == o.a_;
}

bool Matrix::is_zero() const {
  for (u32 v : a_)
    if (v) return false;
  return true;
}

RrefResult rref(const Matrix& m) {
  RrefResult r{m, 0, {}};
  Matrix& a = r.mat;
  const FieldSpec& F = *m.field();
  std::size_t pr = 0;  // next pivot row
  for (std::size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
    std::size_t sel = pr;
    while (sel < a.rows() && a.at(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(sel, j), a.at(pr, j));
    u32 inv = F.inv(a.at(pr, c));
    for (std::size_t j = c; j < a.cols(); ++j)
      a.at(pr, j) = F.mul(inv, a.at(pr, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == pr) continue;
      u32 v = a.at(i, c);
      if (!v) continue;
      for (std::size_t j = c; j < a.cols(); ++j)
        a.at(i, j) = F.sub(a.at(i, j), F.mul(v, a.at(pr, j)));
    }
    r.pivots.push_back(c);
    ++pr;
  }
  r.rank = pr;
  return r;
}

Matrix kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  const FieldSpec& F = *m.field();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;

  Matrix k(m.field(), n - r.rank, n);
  std::size_t out = 0;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    u32* row = k.row(out);
    row[fc] = 1;
    for (std::size_t i = 0; i < r.rank; ++i)
      row[r.pivots[i]] = F.neg(r.mat.at(i, fc));
    ++out;
  }

  // every kernel row must annihilate m
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t mr = 0; mr < m.rows(); ++mr) {
      u32 acc = 0;
      for (std::size_t j = 0; j < n; ++j)
        acc = F.add(acc, F.mul(m.at(mr, j), k.at(i, j)));
      if (acc) throw std::logic_error("kernel row fails to annihilate");
    }
  return k;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
  if (!a.field()->same(*b.field()))
    throw std::invalid_argument("field mismatch");
  if (a.cols() != b.cols()) throw std::invalid_argument("column mismatch");
  RrefResult ra = rref(a), rb = rref(b);
  if (ra.rank != rb.rank) return false;
  for (std::size_t i = 0; i < ra.rank; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (ra.mat.at(i, j) != rb.mat.at(i, j)) return false;
  return true;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("not square");
  const std::size_t n = m.rows();
  if (n == 0) return Matrix(m.field(), 0, 0);
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] >= n) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

}  // namespace liftlab
