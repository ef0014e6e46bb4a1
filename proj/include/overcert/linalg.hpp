#pragma once

// Small dense linear algebra over either scalar mode. Systems here have at
// most a handful of unknowns, so plain Gaussian elimination is enough.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "overcert/error.hpp"
#include "overcert/scalar.hpp"

namespace overcert {

template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, scalar_traits<S>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// ||A||_1 (max column sum), float mode only.
inline double one_norm(const Matrix<Complex>& a) {
  double best = 0.0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) s += std::abs(a(r, c));
    best = std::max(best, s);
  }
  return best;
}

/// LU factorization with row pivoting. Exact mode pivots on the first
/// nonzero entry; float mode pivots on the largest modulus and rejects
/// matrices whose reciprocal 1-norm condition number is below `rcond_min`.
template <class S>
class LuFactorization {
  using Traits = scalar_traits<S>;

 public:
  static LuFactorization factor(const Matrix<S>& a, double rcond_min = 1e-14) {
    if (a.rows() != a.cols()) fail(ErrorCode::NotSquare, "LU of a non-square matrix");
    LuFactorization f;
    f.n_ = a.rows();
    f.lu_ = a;
    f.perm_.resize(f.n_);
    for (std::size_t i = 0; i < f.n_; ++i) f.perm_[i] = i;
    const std::size_t n = f.n_;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t pivot = n;
      if constexpr (Traits::exact) {
        for (std::size_t r = k; r < n; ++r) {
          if (!Traits::is_zero(f.lu_(r, k))) {
            pivot = r;
            break;
          }
        }
      } else {
        double best = 0.0;
        for (std::size_t r = k; r < n; ++r) {
          double m = std::abs(f.lu_(r, k));
          if (m > best) {
            best = m;
            pivot = r;
          }
        }
      }
      if (pivot == n) fail(ErrorCode::SingularJacobian, "zero pivot in column " + std::to_string(k));
      if (pivot != k) {
        for (std::size_t c = 0; c < n; ++c) std::swap(f.lu_(k, c), f.lu_(pivot, c));
        std::swap(f.perm_[k], f.perm_[pivot]);
      }
      const S inv_pivot = Traits::one() / f.lu_(k, k);
      for (std::size_t r = k + 1; r < n; ++r) {
        if (Traits::is_zero(f.lu_(r, k))) continue;
        S factor = f.lu_(r, k) * inv_pivot;
        f.lu_(r, k) = factor;
        for (std::size_t c = k + 1; c < n; ++c) f.lu_(r, c) -= factor * f.lu_(k, c);
      }
    }
    if constexpr (!Traits::exact) {
      const double anorm = one_norm(a);
      const double inorm = one_norm(f.inverse());
      f.rcond_ = (anorm == 0.0 || !std::isfinite(inorm)) ? 0.0 : 1.0 / (anorm * inorm);
      if (!(f.rcond_ >= rcond_min)) {
        fail(ErrorCode::SingularJacobian,
             "reciprocal condition estimate " + std::to_string(f.rcond_) + " below cutoff");
      }
    }
    return f;
  }

  std::size_t size() const { return n_; }
  double rcond() const { return rcond_; }

  std::vector<S> solve(const std::vector<S>& b) const {
    require_dims(b.size(), n_, "LU solve");
    std::vector<S> x(n_);
    for (std::size_t i = 0; i < n_; ++i) x[i] = b[perm_[i]];
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!Traits::is_zero(lu_(i, j))) x[i] -= lu_(i, j) * x[j];
      }
    }
    for (std::size_t ii = n_; ii-- > 0;) {
      for (std::size_t j = ii + 1; j < n_; ++j) {
        if (!Traits::is_zero(lu_(ii, j))) x[ii] -= lu_(ii, j) * x[j];
      }
      x[ii] /= lu_(ii, ii);
    }
    return x;
  }

  Matrix<S> inverse() const {
    Matrix<S> inv(n_, n_);
    std::vector<S> e(n_, Traits::zero());
    for (std::size_t c = 0; c < n_; ++c) {
      std::fill(e.begin(), e.end(), Traits::zero());
      e[c] = Traits::one();
      auto col = solve(e);
      for (std::size_t r = 0; r < n_; ++r) inv(r, c) = col[r];
    }
    return inv;
  }

 private:
  std::size_t n_ = 0;
  Matrix<S> lu_;
  std::vector<std::size_t> perm_;
  double rcond_ = 1.0;
};

/// Rank by exact elimination; exact mode only.
inline std::size_t rank(Matrix<GaussianRational> a) {
  using T = scalar_traits<GaussianRational>;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t pivot = a.rows();
    for (std::size_t r = rank; r < a.rows(); ++r) {
      if (!T::is_zero(a(r, c))) {
        pivot = r;
        break;
      }
    }
    if (pivot == a.rows()) continue;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(rank, k), a(pivot, k));
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      if (T::is_zero(a(r, c))) continue;
      GaussianRational f = a(r, c) / a(rank, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(r, k) -= f * a(rank, k);
    }
    ++rank;
  }
  return rank;
}

}  // namespace overcert
