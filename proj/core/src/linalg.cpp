#include "kcat/linalg.hpp"

namespace kcat {

Matrix mat_mul(const Field& k, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("BadShape", "matrix product shape mismatch");
  Matrix out(a.rows(), b.cols(), k.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (k.is_zero(a.at(i, l))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) = k.add(out.at(i, j), k.mul(a.at(i, l), b.at(l, j)));
    }
  return out;
}

Matrix mat_add(const Field& k, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("BadShape", "matrix sum shape mismatch");
  Matrix out(a.rows(), a.cols(), k.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.at(i, j) = k.add(a.at(i, j), b.at(i, j));
  return out;
}

Matrix mat_scale(const Field& k, const Scalar& c, const Matrix& a) {
  Matrix out(a.rows(), a.cols(), k.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = k.mul(c, a.at(i, j));
  return out;
}

bool mat_is_zero(const Field& k, const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!k.is_zero(a.at(i, j))) return false;
  return true;
}

bool mat_is_identity(const Field& k, const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& want = i == j ? k.one() : k.zero();
      if (a.at(i, j) != want) return false;
    }
  return true;
}

bool mat_is_permutation(const Field& k, const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  std::vector<bool> col_used(a.cols(), false);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::size_t ones = 0, hit = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (k.is_zero(a.at(i, j))) continue;
      if (!k.is_one(a.at(i, j))) return false;
      ++ones;
      hit = j;
    }
    if (ones != 1 || col_used[hit]) return false;
    col_used[hit] = true;
  }
  return true;
}

std::optional<Matrix> mat_inverse(const Field& k, const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  Matrix m = a;
  Matrix inv = Matrix::identity(k, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && k.is_zero(m.at(pivot, col))) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    Scalar scale = k.inv(m.at(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      m.at(col, j) = k.mul(scale, m.at(col, j));
      inv.at(col, j) = k.mul(scale, inv.at(col, j));
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || k.is_zero(m.at(row, col))) continue;
      Scalar factor = m.at(row, col);
      for (std::size_t j = 0; j < n; ++j) {
        m.at(row, j) = k.sub(m.at(row, j), k.mul(factor, m.at(col, j)));
        inv.at(row, j) = k.sub(inv.at(row, j), k.mul(factor, inv.at(col, j)));
      }
    }
  }
  return inv;
}

std::size_t mat_rank(const Field& k, Matrix a) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && k.is_zero(a.at(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(rank, j));
    Scalar scale = k.inv(a.at(rank, col));
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(rank, j) = k.mul(scale, a.at(rank, j));
    for (std::size_t row = 0; row < a.rows(); ++row) {
      if (row == rank || k.is_zero(a.at(row, col))) continue;
      Scalar factor = a.at(row, col);
      for (std::size_t j = 0; j < a.cols(); ++j)
        a.at(row, j) = k.sub(a.at(row, j), k.mul(factor, a.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

Vec vec_zero(const Field& k, std::size_t n) { return Vec(n, k.zero()); }

Vec vec_unit(const Field& k, std::size_t n, std::size_t i) {
  Vec v(n, k.zero());
  v[i] = k.one();
  return v;
}

void vec_axpy(const Field& k, const Scalar& c, const Vec& x, Vec& y) {
  if (x.size() != y.size()) throw Error("BadShape", "vector sum shape mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = k.add(y[i], k.mul(c, x[i]));
}

bool vec_is_zero(const Field& k, const Vec& x) {
  for (const Scalar& c : x)
    if (!k.is_zero(c)) return false;
  return true;
}

Vec mat_apply(const Field& k, const Matrix& m, const Vec& x) {
  if (m.cols() != x.size()) throw Error("BadShape", "matrix apply shape mismatch");
  Vec out(m.rows(), k.zero());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (k.is_zero(x[j])) continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      out[i] = k.add(out[i], k.mul(m.at(i, j), x[j]));
  }
  return out;
}

}  // namespace kcat
