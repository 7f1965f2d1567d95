// Copyright 2026 The realqm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REALQM_DENSE_HPP_
#define REALQM_DENSE_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace rqm {

using cx = std::complex<double>;

/// Default absolute entrywise tolerance for all equality checks.
/// Values in this library are O(1); doubles leave ample headroom.
inline constexpr double kTol = 1e-9;

/// Measurement outcomes with probability below this are treated as impossible.
inline constexpr double kProbFloor = 1e-12;

/// Dense vector, contiguous storage.
template <class T>
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : data_(n, T{}) {}
  Vector(std::initializer_list<T> xs) : data_(xs) {}
  explicit Vector(std::vector<T> xs) : data_(std::move(xs)) {}

  static Vector basis(std::size_t n, std::size_t k) {
    Vector v(n);
    v[k] = T{1};
    return v;
  }

  std::size_t size() const { return data_.size(); }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  Vector& operator+=(const Vector& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) data_[i] += o[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    check_same_size(o);
    for (std::size_t i = 0; i < size(); ++i) data_[i] -= o[i];
    return *this;
  }
  Vector& operator*=(T s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(T s, Vector a) { return a *= s; }
  friend Vector operator*(Vector a, T s) { return a *= s; }

  double squared_norm() const {
    double s = 0;
    for (const auto& x : data_) s += std::norm(cx(x));
    return s;
  }
  double norm() const { return std::sqrt(squared_norm()); }

 private:
  void check_same_size(const Vector& o) const {
    if (o.size() != size()) throw std::invalid_argument("vector size mismatch");
  }
  std::vector<T> data_;
};

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(T s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(T s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, T s) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Vector<T> operator*(const Matrix& m, const Vector<T>& v) {
    if (m.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector<T> out(m.rows_);
    for (std::size_t i = 0; i < m.rows_; ++i) {
      T s{};
      for (std::size_t j = 0; j < m.cols_; ++j) s += m(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  T trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    T s{};
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RealVector = Vector<double>;
using RealMatrix = Matrix<double>;
using ComplexVector = Vector<cx>;
using ComplexMatrix = Matrix<cx>;

// ---- scalar helpers --------------------------------------------------------

inline double abs_value(double x) { return std::abs(x); }
inline double abs_value(const cx& x) { return std::abs(x); }

// ---- inner products --------------------------------------------------------

inline double dot(const RealVector& a, const RealVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Sesquilinear inner product <a|b>, conjugating the first argument.
inline cx dot(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  cx s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

// ---- outer products --------------------------------------------------------

inline RealMatrix outer(const RealVector& u, const RealVector& v) {
  RealMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  return m;
}

/// |u><v|.
inline ComplexMatrix outer(const ComplexVector& u, const ComplexVector& v) {
  ComplexMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

// ---- real/imaginary decomposition ------------------------------------------

inline RealMatrix real_part(const ComplexMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) out.data()[i] = m.data()[i].real();
  return out;
}

inline RealMatrix imag_part(const ComplexMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) out.data()[i] = m.data()[i].imag();
  return out;
}

inline RealVector real_part(const ComplexVector& v) {
  RealVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].real();
  return out;
}

inline RealVector imag_part(const ComplexVector& v) {
  RealVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].imag();
  return out;
}

inline ComplexMatrix assemble(const RealMatrix& re, const RealMatrix& im) {
  if (re.rows() != im.rows() || re.cols() != im.cols())
    throw std::invalid_argument("assemble: block shape mismatch");
  ComplexMatrix out(re.rows(), re.cols());
  for (std::size_t i = 0; i < out.data().size(); ++i)
    out.data()[i] = cx(re.data()[i], im.data()[i]);
  return out;
}

inline ComplexVector assemble(const RealVector& re, const RealVector& im) {
  if (re.size() != im.size()) throw std::invalid_argument("assemble: part size mismatch");
  ComplexVector out(re.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = cx(re[i], im[i]);
  return out;
}

inline ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) out.data()[i] = m.data()[i];
  return out;
}

inline ComplexVector to_complex(const RealVector& v) {
  ComplexVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

inline ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

// ---- comparisons -----------------------------------------------------------

template <class T>
double max_abs_diff(const Vector<T>& a, const Vector<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: size mismatch");
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, abs_value(T(a[i] - b[i])));
  return m;
}

template <class T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, abs_value(T(a.data()[i] - b.data()[i])));
  return m;
}

template <class T>
double max_abs(const Matrix<T>& a) {
  double m = 0;
  for (const auto& x : a.data()) m = std::max(m, abs_value(x));
  return m;
}

template <class T>
bool approx_equal(const T& a, const T& b, double tol = kTol) {
  return max_abs_diff(a, b) <= tol;
}

}  // namespace rqm

#endif  // REALQM_DENSE_HPP_
