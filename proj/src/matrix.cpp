// SPDX-License-Identifier: Apache-2.0

#include "relaysim/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace relaysim {

namespace {

constexpr double kPivotRelTol = 1e-12;
constexpr double kJacobiTol = 1e-14;
constexpr int kMaxJacobiSweeps = 100;

std::string shape_str(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

double max_abs_entry(const ComplexMatrix& m) {
  double best = 0.0;
  for (const Complex& e : m.entries()) best = std::max(best, std::abs(e));
  return best;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw ShapeError("matrix: " + std::to_string(entries_.size()) + " entries for shape " +
                     shape_str(*this));
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw ShapeError("matrix: ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::col(std::size_t j) const {
  if (j >= cols_) throw ShapeError("col: index " + std::to_string(j) + " in " + shape_str(*this));
  ComplexMatrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

bool ComplexMatrix::is_finite() const noexcept {
  for (const Complex& e : entries_)
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  return true;
}

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("mul: " + shape_str(a) + " times " + shape_str(b));
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols())
    throw ShapeError("solve: coefficient matrix " + shape_str(a) + " not square");
  if (b.rows() != a.rows())
    throw ShapeError("solve: rhs " + shape_str(b) + " against " + shape_str(a));
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  ComplexMatrix lu = a;
  ComplexMatrix x = b;
  const double pivot_floor = kPivotRelTol * max_abs_entry(a);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double cand = std::abs(lu(i, k));
      if (cand > best) {
        best = cand;
        piv = i;
      }
    }
    if (best <= pivot_floor)
      throw SingularError("solve: pivot " + std::to_string(best) + " at step " +
                              std::to_string(k) + " below threshold",
                          k);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      for (std::size_t j = 0; j < m; ++j) std::swap(x(k, j), x(piv, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) / lu(k, k);
      if (f == Complex{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      for (std::size_t j = 0; j < m; ++j) x(i, j) -= f * x(k, j);
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t j = 0; j < m; ++j) {
      Complex s = x(k, j);
      for (std::size_t i = k + 1; i < n; ++i) s -= lu(k, i) * x(i, j);
      x(k, j) = s / lu(k, k);
    }
  }
  return x;
}

SvdResult svd(const ComplexMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw ShapeError("svd: empty matrix");
  if (a.rows() < a.cols()) {
    // factor the adjoint and swap the orthogonal factors back
    SvdResult r = svd(adjoint(a));
    return {std::move(r.v), std::move(r.sigma), std::move(r.u)};
  }
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  ComplexMatrix b = a;
  ComplexMatrix v = ComplexMatrix::identity(n);

  int sweep = 0;
  for (; sweep < kMaxJacobiSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += std::norm(b(i, p));
          beta += std::norm(b(i, q));
          gamma += std::conj(b(i, p)) * b(i, q);
        }
        const double off = std::abs(gamma);
        if (off <= kJacobiTol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        // Unitary column rotation zeroing the (p,q) Gram entry.
        const Complex phase = gamma / off;
        const double zeta = (beta - alpha) / (2.0 * off);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const Complex phase_conj = std::conj(phase);
        for (std::size_t i = 0; i < m; ++i) {
          const Complex bp = b(i, p);
          const Complex bq = b(i, q);
          b(i, p) = c * bp - s * phase_conj * bq;
          b(i, q) = s * phase * bp + c * bq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const Complex vp = v(i, p);
          const Complex vq = v(i, q);
          v(i, p) = c * vp - s * phase_conj * vq;
          v(i, q) = s * phase * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }
  if (sweep == kMaxJacobiSweeps)
    throw ConvergenceError("svd: no convergence after " + std::to_string(kMaxJacobiSweeps) +
                           " sweeps");

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += std::norm(b(i, j));
    norms[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&norms](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  SvdResult result;
  result.sigma.resize(n);
  result.u = ComplexMatrix(m, n);
  result.v = ComplexMatrix(n, n);
  std::vector<std::size_t> null_cols;
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t j = order[r];
    result.sigma[r] = norms[j];
    for (std::size_t i = 0; i < n; ++i) result.v(i, r) = v(i, j);
    if (norms[j] > 0.0) {
      for (std::size_t i = 0; i < m; ++i) result.u(i, r) = b(i, j) / norms[j];
    } else {
      null_cols.push_back(r);
    }
  }
  // Exactly-zero singular values: complete u with an orthonormal basis.
  for (std::size_t r : null_cols) {
    for (std::size_t cand = 0; cand < m; ++cand) {
      ComplexMatrix e(m, 1);
      e(cand, 0) = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == r || (result.sigma[j] == 0.0 && j > r)) continue;
        Complex proj = 0.0;
        for (std::size_t i = 0; i < m; ++i) proj += std::conj(result.u(i, j)) * e(i, 0);
        for (std::size_t i = 0; i < m; ++i) e(i, 0) -= proj * result.u(i, j);
      }
      const double nrm = frobenius_norm(e);
      if (nrm > 0.5) {
        for (std::size_t i = 0; i < m; ++i) result.u(i, r) = e(i, 0) / nrm;
        break;
      }
    }
  }
  return result;
}

Complex trace(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("trace: matrix " + shape_str(a) + " not square");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

double logdet_hermitian(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("logdet: matrix " + shape_str(a) + " not square");
  const std::size_t n = a.rows();
  ComplexMatrix lu = a;
  Complex det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double cand = std::abs(lu(i, k));
      if (cand > best) {
        best = cand;
        piv = i;
      }
    }
    if (best == 0.0) {
      det = 0.0;
      break;
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) / lu(k, k);
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  const double d = det.real();  // Hermitian input: determinant real up to roundoff
  if (!std::isfinite(d) || !(d > 0.0))
    throw DomainError("logdet: determinant " + std::to_string(d) + " not positive");
  return std::log2(d);
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const Complex& e : a.entries()) s += std::norm(e);
  return std::sqrt(s);
}

ComplexMatrix add_scaled_identity(const ComplexMatrix& a, double s) {
  if (a.rows() != a.cols())
    throw ShapeError("add_scaled_identity: matrix " + shape_str(a) + " not square");
  ComplexMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i) r(i, i) += s;
  return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return mul(a, b); }

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix r = a;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) *= s;
  return r;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) { return Complex(s, 0.0) * a; }

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("add: " + shape_str(a) + " plus " + shape_str(b));
  ComplexMatrix r = a;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) += b(i, j);
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("sub: " + shape_str(a) + " minus " + shape_str(b));
  ComplexMatrix r = a;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) -= b(i, j);
  return r;
}

}  // namespace relaysim
