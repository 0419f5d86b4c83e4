#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kcat/scalar.hpp"

namespace kcat {

/// Dense row-major matrix of exact scalars. Shapes with zero rows or
/// columns are legal (empty hom spaces show up everywhere).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Scalar& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix zero(const Field& k, std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols, k.zero());
  }
  static Matrix identity(const Field& k, std::size_t n) {
    Matrix m(n, n, k.zero());
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = k.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

using Vec = std::vector<Scalar>;

Matrix mat_mul(const Field& k, const Matrix& a, const Matrix& b);
Matrix mat_add(const Field& k, const Matrix& a, const Matrix& b);
Matrix mat_scale(const Field& k, const Scalar& c, const Matrix& a);
bool mat_is_zero(const Field& k, const Matrix& a);
bool mat_is_identity(const Field& k, const Matrix& a);
/// Exactly one entry 1 in every row and column, all else 0.
bool mat_is_permutation(const Field& k, const Matrix& a);
std::optional<Matrix> mat_inverse(const Field& k, const Matrix& a);
std::size_t mat_rank(const Field& k, Matrix a);

Vec vec_zero(const Field& k, std::size_t n);
Vec vec_unit(const Field& k, std::size_t n, std::size_t i);
/// y += c * x
void vec_axpy(const Field& k, const Scalar& c, const Vec& x, Vec& y);
bool vec_is_zero(const Field& k, const Vec& x);
Vec mat_apply(const Field& k, const Matrix& m, const Vec& x);

}  // namespace kcat
