// Dense matrices over a finite Field and exact Gaussian elimination.
#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "fgeom/field.hpp"

namespace fgeom {

using Vec = std::vector<Fe>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Fe> data);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(std::span<const Vec> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Fe& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fe at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Fe> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Fe> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { auto s = row(r); return {s.begin(), s.end()}; }
  const std::vector<Fe>& data() const { return data_; }

  void append_row(std::span<const Fe> r);
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fe> data_;
};

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b);
Matrix mat_add(const Field& f, const Matrix& a, const Matrix& b);
Matrix mat_sub(const Field& f, const Matrix& a, const Matrix& b);
Matrix mat_scale(const Field& f, Fe s, const Matrix& a);
Matrix transpose(const Matrix& a);
/// Entrywise a -> a^(p^l).
Matrix mat_frobenius(const Field& f, const Matrix& a, long l);
/// Row vector times matrix.
Vec vec_mat(const Field& f, std::span<const Fe> v, const Matrix& m);

/// Reduced row echelon form with zero rows removed.  Leading entries are 1
/// and pivot columns are zero elsewhere, so the result is a canonical
/// basis of the row space.
Matrix rref(const Field& f, Matrix a, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Field& f, const Matrix& a);
/// Basis (as rows, in RREF) of {x : a x^T = 0}.
Matrix null_space(const Field& f, const Matrix& a);
/// Throws std::domain_error if singular.
Matrix inverse(const Field& f, const Matrix& a);
bool is_invertible(const Field& f, const Matrix& a);

/// Coordinates of v in the row basis `basis` (rows independent), or empty
/// if v is not in the row space.
std::vector<Fe> solve_in_rowspace(const Field& f, const Matrix& basis, std::span<const Fe> v, bool* ok);

/// All invertible n x n matrices over f in row-major index order.
std::vector<Matrix> enumerate_gl(const Field& f, std::size_t n);

}  // namespace fgeom
