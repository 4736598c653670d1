#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lagrangia/error.hpp"
#include "lagrangia/integer.hpp"

namespace lagrangia {

/// Dense row-major integer matrix with exact entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_)
        throw error(errc::dimension, "ragged matrix literal");
      for (long long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Integer> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    check_same_shape(a, b);
    IntMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
  }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    check_same_shape(a, b);
    IntMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }

  friend IntMatrix operator*(const Integer& s, const IntMatrix& a) {
    IntMatrix r = a;
    for (auto& v : r.data_) v *= s;
    return r;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
      throw error(errc::dimension, "matrix product shape mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  /// Matrix-vector product.
  std::vector<Integer> apply(std::span<const Integer> x) const {
    if (x.size() != cols_) throw error(errc::dimension, "vector length mismatch");
    std::vector<Integer> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  Integer trace() const {
    Integer t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ',';
        s += (*this)(i, j).str();
      }
      s += ']';
    }
    return s + ']';
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    return os << m.str();
  }

 private:
  static void check_same_shape(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw error(errc::dimension, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant. det of the 0x0 matrix is 1.
inline Integer determinant(IntMatrix m) {
  if (!m.square()) throw error(errc::dimension, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * m(n - 1, n - 1));
}

/// Coefficients (ascending powers of t) of det(A + t*B). The degree is at most
/// n, so the polynomial is recovered from its values at t = 0..n by Newton
/// interpolation; every divided difference of an integer polynomial at
/// consecutive integers is an integer, so the whole computation stays in Z.
inline std::vector<Integer> pencil_determinant(const IntMatrix& a, const IntMatrix& b) {
  if (!a.square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw error(errc::dimension, "pencil determinant needs equal square matrices");
  const std::size_t n = a.rows();
  std::vector<Integer> dd(n + 1);
  for (std::size_t k = 0; k <= n; ++k) dd[k] = determinant(a + Integer(k) * b);

  // In-place divided differences: dd[k] becomes f[0..k].
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t k = n; k >= level; --k)
      dd[k] = (dd[k] - dd[k - 1]) / Integer(level);

  // Horner in the Newton basis: p = dd0 + (t-0)(dd1 + (t-1)(dd2 + ...)).
  std::vector<Integer> coeffs{dd[n]};
  for (std::size_t k = n; k-- > 0;) {
    // coeffs <- coeffs * (t - k) + dd[k]
    std::vector<Integer> next(coeffs.size() + 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= Integer(k) * coeffs[i];
    }
    next[0] += dd[k];
    coeffs = std::move(next);
  }
  coeffs.resize(n + 1);
  return coeffs;
}

/// Characteristic polynomial det(tI - M), ascending coefficients.
inline std::vector<Integer> characteristic_polynomial(const IntMatrix& m) {
  if (!m.square()) throw error(errc::dimension, "characteristic polynomial of non-square matrix");
  return pencil_determinant(Integer(-1) * m, IntMatrix::identity(m.rows()));
}

/// Inverse of a matrix with determinant +-1 (the inverse is then integral).
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (!m.square()) throw error(errc::dimension, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  using boost::multiprecision::cpp_rational;
  std::vector<std::vector<cpp_rational>> aug(n, std::vector<cpp_rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = cpp_rational(m(i, j));
    aug[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && aug[p][col] == 0) ++p;
    if (p == n) throw error(errc::invalid_argument, "singular matrix");
    std::swap(aug[p], aug[col]);
    cpp_rational piv = aug[col][col];
    for (auto& v : aug[col]) v /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      cpp_rational f = aug[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& v = aug[i][n + j];
      if (boost::multiprecision::denominator(v) != 1)
        throw error(errc::invalid_argument, "inverse is not integral");
      inv(i, j) = boost::multiprecision::numerator(v);
    }
  return inv;
}

}  // namespace lagrangia
