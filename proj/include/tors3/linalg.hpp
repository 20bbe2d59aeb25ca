#pragma once

#include <algorithm>
#include <complex>
#include <type_traits>
#include <cmath>
#include <utility>
#include <vector>

#include "tors3/error.hpp"
#include "tors3/rational.hpp"
#include "tors3/scalar.hpp"

namespace tors3 {

/// Dense row-major matrix; only what the Newton step and the lattice code
/// need.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  static Matrix identity(int n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;

/// Double-precision variant used in the tracking loop: same pivot rule,
/// compared on squared moduli, and the solution overwrites b.
inline void solve_linear_inplace(Matrix<Complex>& a, std::vector<Complex>& b, int digits) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n) throw InvariantError("solve_linear: shape mismatch");
  double scale = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::norm(a(i, j)));
  if (!(scale > 0) || !std::isfinite(scale)) throw SingularError();
  const double floor = scale * std::pow(10.0, -static_cast<double>(digits));
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::norm(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      double m = std::norm(a(r, col));
      if (m > best) {
        best = m;
        piv = r;
      }
    }
    if (!(best >= floor)) throw SingularError();
    if (piv != col) {
      for (int c = col; c < n; ++c) std::swap(a(piv, c), a(col, c));
      std::swap(b[piv], b[col]);
    }
    const Complex inv = 1.0 / a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const Complex f = a(r, col) * inv;
      if (f == 0.0) continue;
      for (int c = col + 1; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    Complex acc = b[r];
    for (int c = r + 1; c < n; ++c) acc -= a(r, c) * b[c];
    b[r] = acc / a(r, r);
  }
}

/// Solves A x = b by Gaussian elimination with partial pivoting.
///
/// A pivot smaller than 10^-(digits/2) relative to the largest entry of A
/// raises SingularError; the homotopy tracker relies on this to abandon a
/// path at a singular Jacobian.
template <class S>
std::vector<S> solve_linear(Matrix<S> a, std::vector<S> b, int digits) {
  using T = ScalarTraits<S>;
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n) throw InvariantError("solve_linear: shape mismatch");
  if constexpr (std::is_same_v<S, Complex>) {
    solve_linear_inplace(a, b, digits);
    return b;
  }

  double scale = -INFINITY;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, T::log10_abs(a(i, j)));
  if (!std::isfinite(scale)) throw SingularError();
  const double floor = scale - digits / 2.0;

  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = T::log10_abs(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      double m = T::log10_abs(a(r, col));
      if (m > best) {
        best = m;
        piv = r;
      }
    }
    if (!(best >= floor)) throw SingularError();
    if (piv != col) {
      for (int c = col; c < n; ++c) std::swap(a(piv, c), a(col, c));
      std::swap(b[piv], b[col]);
    }
    const S inv = T::one(digits) / a(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (T::log10_abs(a(r, col)) == -INFINITY) continue;
      const S f = a(r, col) * inv;
      for (int c = col + 1; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  std::vector<S> x(n, T::zero(digits));
  for (int r = n - 1; r >= 0; --r) {
    S acc = b[r];
    for (int c = r + 1; c < n; ++c) acc -= a(r, c) * x[c];
    x[r] = acc / a(r, r);
  }
  return x;
}

}  // namespace tors3
