#pragma once
// Dense exact matrices over the scalar tower.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uvbraid/exactnum.hpp"

namespace uvb {

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

/// Row-major dense matrix. Column vectors are m x 1, row vectors 1 x m.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix column(std::vector<T> entries) {
    Matrix m(entries.size(), 1);
    m.data_ = std::move(entries);
    return m;
  }
  static Matrix row(std::vector<T> entries) {
    Matrix m(1, entries.size());
    m.data_ = std::move(entries);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<T>& entries() const noexcept { return data_; }
  std::vector<T>& entries() noexcept { return data_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!uvb::is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "add");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "sub");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionMismatch("mul: " + a.shape() + " times " + b.shape());
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(r, k);
        if (uvb::is_zero(x)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          const T& y = b(k, c);
          if (uvb::is_zero(y)) continue;
          out(r, c) += x * y;
        }
      }
    }
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  /// Row-major entries rendered with the scalar's canonical form.
  std::vector<std::vector<std::string>> rendered() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c).to_string());
    return out;
  }

 private:
  void require_same_shape(const Matrix& b, const char* op) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw DimensionMismatch(std::string(op) + ": " + shape() + " vs " + b.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<GaussianRational>;
using RMatrix = Matrix<RatFunc>;
using QVector = std::vector<GaussianRational>;

/// I_{i-1} (+) block (+) I_{m-i-k+1}, with 1-based strand index i.
template <class T>
Matrix<T> block_embed(const Matrix<T>& block, std::size_t i, std::size_t m) {
  if (!block.is_square()) throw DimensionMismatch("block_embed: block must be square");
  std::size_t k = block.rows();
  if (i < 1 || k > m || i > m - k + 1) {
    throw std::out_of_range("block_embed: index " + std::to_string(i) + " out of range for block " +
                            std::to_string(k) + " in degree " + std::to_string(m));
  }
  Matrix<T> out = Matrix<T>::identity(m);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) out(i - 1 + r, i - 1 + c) = block(r, c);
  return out;
}

/// Right-multiplies `acc` in place by block_embed(block, i, m) touching only
/// the affected columns.
template <class T>
void right_multiply_block(Matrix<T>& acc, const Matrix<T>& block, std::size_t i) {
  std::size_t k = block.rows();
  std::size_t off = i - 1;
  std::vector<T> row(k);
  for (std::size_t r = 0; r < acc.rows(); ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      T sum{};
      for (std::size_t l = 0; l < k; ++l) {
        const T& x = acc(r, off + l);
        if (uvb::is_zero(x)) continue;
        const T& y = block(l, c);
        if (uvb::is_zero(y)) continue;
        sum += x * y;
      }
      row[c] = std::move(sum);
    }
    for (std::size_t c = 0; c < k; ++c) acc(r, off + c) = row[c];
  }
}

/// Gauss-Jordan inverse; throws SingularMatrix when no nonzero pivot exists.
template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of non-square matrix " + a.shape());
  std::size_t n = a.rows();
  Matrix<T> work = a;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(work(pivot, col))) ++pivot;
    if (pivot == n) throw SingularMatrix("singular matrix: determinant is zero");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    T scale = T(1) / work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(work(r, col))) continue;
      T factor = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (!is_zero(work(col, c))) work(r, c) -= factor * work(col, c);
        if (!is_zero(inv(col, c))) inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

/// Fraction-free Bareiss determinant over an integral domain with exact division.
template <class R, class ExactDiv>
R bareiss_determinant(std::vector<std::vector<R>> m, ExactDiv&& divide_exact) {
  std::size_t n = m.size();
  if (n == 0) return R(1);
  R prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return R(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = R(0);
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

inline GaussianRational determinant(const QMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  std::vector<std::vector<GaussianRational>> rows(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) rows[r].push_back(a(r, c));
  return bareiss_determinant(std::move(rows), [](const GaussianRational& x, const GaussianRational& y) {
    return x / y;
  });
}

/// Clears each row to a common denominator, then runs Bareiss over polynomials.
inline RatFunc determinant(const RMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  std::size_t n = a.rows();
  std::vector<std::vector<MultiPoly>> rows(n);
  RatFunc scale(1);
  for (std::size_t r = 0; r < n; ++r) {
    MultiPoly common(1);
    for (std::size_t c = 0; c < n; ++c) {
      const MultiPoly& d = a(r, c).den();
      if (!d.is_constant() && !MultiPoly::divide_exact(common, d)) common = common * d;
    }
    for (std::size_t c = 0; c < n; ++c) {
      const RatFunc& x = a(r, c);
      auto q = MultiPoly::divide_exact(common, x.den());
      rows[r].push_back(x.num() * *q);
    }
    scale *= RatFunc(common);
  }
  MultiPoly det = bareiss_determinant(std::move(rows), [](const MultiPoly& x, const MultiPoly& y) {
    auto q = MultiPoly::divide_exact(x, y);
    if (!q) throw Error("Bareiss: inexact polynomial division");
    return *q;
  });
  return RatFunc(det) / scale;
}

struct RrefResult {
  QMatrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  std::vector<QVector> kernel_basis;
};

/// Reduced row echelon form, rank and a kernel basis over Q(i).
inline RrefResult rref_rank_kernel(const QMatrix& a) {
  RrefResult out;
  QMatrix m = a;
  std::size_t rows = m.rows();
  std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    GaussianRational inv = m(r, c).inverse();
    for (std::size_t j = 0; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      GaussianRational f = m(i, c);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : out.pivot_columns) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols, GaussianRational(0));
    v[free] = GaussianRational(1);
    for (std::size_t i = 0; i < out.pivot_columns.size(); ++i) v[out.pivot_columns[i]] = -m(i, free);
    out.kernel_basis.push_back(std::move(v));
  }
  out.rref = std::move(m);
  return out;
}

inline QMatrix specialize(const RMatrix& a, const Assignment& point) {
  return a.map([&](const RatFunc& x) { return x.evaluate(point); });
}

inline RMatrix lift(const QMatrix& a) {
  return a.map([](const GaussianRational& x) { return RatFunc(x); });
}

/// Incrementally maintained echelon basis of a subspace of Q(i)^dim.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<QVector>& rows() const noexcept { return rows_; }

  /// Reduces v against the basis; returns the residue (zero iff v is in the span).
  QVector reduce(QVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const GaussianRational& coeff = v[pivots_[i]];
      if (coeff.is_zero()) continue;
      GaussianRational f = coeff;
      for (std::size_t j = pivots_[i]; j < dim_; ++j)
        if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
    }
    return v;
  }

  bool contains(const QVector& v) const {
    QVector r = reduce(v);
    for (const auto& x : r)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Adds v if independent; returns whether the rank grew.
  bool insert(const QVector& v) {
    QVector r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && r[p].is_zero()) ++p;
    if (p == dim_) return false;
    GaussianRational inv = r[p].inverse();
    for (auto& x : r) x *= inv;
    // Keep rows fully reduced so reduce() needs a single pass.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i][p].is_zero()) continue;
      GaussianRational f = rows_[i][p];
      for (std::size_t j = p; j < dim_; ++j) rows_[i][j] -= f * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<QVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace uvb
