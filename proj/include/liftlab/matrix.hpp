#pragma once
// Dense matrices over a FieldSpec with deterministic Gauss-Jordan
// elimination, kernel bases and row-space comparison.

#include <cstddef>
#include <optional>
#include <vector>

#include "liftlab/field.hpp"

namespace liftlab {

class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);

  const Field& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  u32& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  u32 at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const u32* row(std::size_t r) const { return a_.data() + r * cols_; }
  u32* row(std::size_t r) { return a_.data() + r * cols_; }

  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  static Matrix identity(Field f, std::size_t n);

 private:
  Field f_;
  std::size_t rows_, cols_;
  std::vector<u32> a_;
};

struct RrefResult {
  Matrix mat;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
};

// Reduced row echelon form.  Pivots are the first nonzero entries found
// scanning columns left to right; rows are only reordered by the sweep
// itself, so the result is a deterministic canonical form.
RrefResult rref(const Matrix& m);

// Rows span the right null space {v : M v^T = 0}; may have zero rows.
// Each returned row is checked against M before returning.
Matrix kernel_basis(const Matrix& m);

// Compare row spaces via canonical forms.  Throws on field or column
// count mismatch.
bool row_space_equal(const Matrix& a, const Matrix& b);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace liftlab
