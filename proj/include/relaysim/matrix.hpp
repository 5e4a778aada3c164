// SPDX-License-Identifier: Apache-2.0
//
// Dense complex-matrix kernel. Partial-pivot LU for solves, one-sided Jacobi
// for the SVD. All matrices in this project are at most K x K with K <= ~8,
// so the implementations favor robustness at tiny sizes.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace relaysim {

using Complex = std::complex<double>;

class MatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public MatrixError {
 public:
  using MatrixError::MatrixError;
};

/// Coefficient matrix singular to working precision; carries the elimination
/// step at which the pivot fell below the relative threshold.
class SingularError : public MatrixError {
 public:
  SingularError(const std::string& what, std::size_t pivot_index)
      : MatrixError(what), pivot_index_(pivot_index) {}
  std::size_t pivot_index() const noexcept { return pivot_index_; }

 private:
  std::size_t pivot_index_;
};

class ConvergenceError : public MatrixError {
 public:
  using MatrixError::MatrixError;
};

class DomainError : public MatrixError {
 public:
  using MatrixError::MatrixError;
};

/// Row-major dense complex matrix with value semantics. Immutable in spirit:
/// the simulation code builds a matrix once and never mutates it afterwards,
/// so values can be shared freely across workers.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> init);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<Complex>& entries() const noexcept { return entries_; }

  ComplexMatrix col(std::size_t j) const;
  bool is_finite() const noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// a == u * diag(sigma) * adjoint(v), sigma non-increasing, u and v unitary.
struct SvdResult {
  ComplexMatrix u;
  std::vector<double> sigma;
  ComplexMatrix v;
};

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);

/// X with a*X = b. Partial-pivot Gaussian elimination; a pivot below
/// 1e-12 times the largest initial entry magnitude raises SingularError.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);

/// One-sided Jacobi on columns; ConvergenceError after 100 sweeps.
SvdResult svd(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);

/// Base-2 log-determinant of a Hermitian positive definite matrix.
double logdet_hermitian(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);

/// a + s*I for square a.
ComplexMatrix add_scaled_identity(const ComplexMatrix& a, double s);

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace relaysim
