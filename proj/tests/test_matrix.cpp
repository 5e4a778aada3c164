// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "relaysim/matrix.hpp"
#include "relaysim/rng.hpp"
#include "testutil.hpp"

using namespace relaysim;
using testutil::conditioned_matrix;
using testutil::max_abs_diff;
using testutil::random_matrix;
using testutil::random_unitary;

namespace {

// Oracle: plain accumulate-in-place product, i-j-k order.
ComplexMatrix naive_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

// Oracle: eigenvalues of a Hermitian PSD matrix by power iteration with
// deflation, sorted non-increasing.
std::vector<double> psd_eigenvalues(const ComplexMatrix& h, Xoshiro256pp& rng) {
  const std::size_t n = h.rows();
  ComplexMatrix a = h;
  std::vector<double> eigs;
  for (std::size_t r = 0; r < n; ++r) {
    ComplexMatrix x = random_matrix(rng, n, 1);
    for (int iter = 0; iter < 3000; ++iter) {
      x = a * x;
      const double norm = frobenius_norm(x);
      if (norm == 0.0) break;
      x = (1.0 / norm) * x;
    }
    const double lambda = (adjoint(x) * (a * x))(0, 0).real();
    eigs.push_back(lambda);
    a = a - lambda * (x * adjoint(x));
  }
  std::sort(eigs.begin(), eigs.end(), std::greater<>());
  return eigs;
}

}  // namespace

TEST_CASE("mul identity and row swap") {
  Xoshiro256pp rng(11);
  const ComplexMatrix a = random_matrix(rng, 2, 3);
  CHECK(ComplexMatrix::identity(2) * a == a);

  const ComplexMatrix perm{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix m{{Complex(1, 2), Complex(3, -1)}, {Complex(-4, 0), Complex(0, 5)}};
  const ComplexMatrix swapped = perm * m;
  CHECK(swapped(0, 0) == m(1, 0));
  CHECK(swapped(0, 1) == m(1, 1));
  CHECK(swapped(1, 0) == m(0, 0));
  CHECK(swapped(1, 1) == m(0, 1));
}

TEST_CASE("mul matches naive triple loop") {
  Xoshiro256pp rng(12);
  const ComplexMatrix a = random_matrix(rng, 3, 4);
  const ComplexMatrix b = random_matrix(rng, 4, 2);
  CHECK(max_abs_diff(a * b, naive_mul(a, b)) <= 1e-13);
}

TEST_CASE("mul shape error") {
  const ComplexMatrix a(2, 3);
  const ComplexMatrix b(2, 3);
  CHECK_THROWS_AS((void)(a * b), ShapeError);
}

TEST_CASE("adjoint basics") {
  const ComplexMatrix sym{{1.0, 2.0}, {2.0, 5.0}};
  CHECK(adjoint(sym) == sym);

  const ComplexMatrix unit_im{{Complex(0, 1)}};
  CHECK(adjoint(unit_im)(0, 0) == Complex(0, -1));

  Xoshiro256pp rng(13);
  const ComplexMatrix a = random_matrix(rng, 3, 3);
  CHECK(adjoint(adjoint(a)) == a);
}

TEST_CASE("product adjoint identity (AB)' == B'A'") {
  Xoshiro256pp rng(14);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix a = random_matrix(rng, 3, 3);
    const ComplexMatrix b = random_matrix(rng, 3, 3);
    CHECK(max_abs_diff(adjoint(a * b), adjoint(b) * adjoint(a)) <= 1e-12);
  }
}

TEST_CASE("solve trivial systems") {
  Xoshiro256pp rng(15);
  const ComplexMatrix b = random_matrix(rng, 3, 2);
  CHECK(solve(ComplexMatrix::identity(3), b) == b);

  const ComplexMatrix two_i{{2.0, 0.0}, {0.0, 2.0}};
  const ComplexMatrix x = solve(two_i, ComplexMatrix::identity(2));
  CHECK(max_abs_diff(x, ComplexMatrix{{0.5, 0.0}, {0.0, 0.5}}) == 0.0);
}

TEST_CASE("solve recovers a known solution") {
  Xoshiro256pp rng(16);
  const ComplexMatrix a = conditioned_matrix(rng, 4, 0.5, 2.0);
  const ComplexMatrix x = random_matrix(rng, 4, 1);
  const ComplexMatrix recovered = solve(a, a * x);
  CHECK(max_abs_diff(recovered, x) <= 1e-12);
}

TEST_CASE("solve residual property on condition-bounded systems") {
  Xoshiro256pp rng(17);
  for (std::size_t k = 1; k <= 6; ++k) {
    for (int rep = 0; rep < 100; ++rep) {
      const ComplexMatrix a = conditioned_matrix(rng, k, 0.5, 2.0);
      const ComplexMatrix b = random_matrix(rng, k, k);
      const ComplexMatrix x = solve(a, b);
      CHECK(frobenius_norm(a * x - b) <= 1e-10 * frobenius_norm(b));
    }
  }
}

TEST_CASE("solve singularity carries the pivot step") {
  const ComplexMatrix a{{1.0, 2.0}, {2.0, 4.0}};
  const ComplexMatrix b = ComplexMatrix::identity(2);
  try {
    (void)solve(a, b);
    FAIL("expected SingularError");
  } catch (const SingularError& e) {
    CHECK(e.pivot_index() == 1);
  }
}

TEST_CASE("svd of identity and of a diagonal matrix") {
  const SvdResult id = svd(ComplexMatrix::identity(3));
  for (double s : id.sigma) CHECK(s == doctest::Approx(1.0).epsilon(1e-14));

  const ComplexMatrix d{{3.0, 0.0, 0.0}, {0.0, 2.0, 0.0}, {0.0, 0.0, 1.0}};
  const SvdResult r = svd(d);
  CHECK(r.sigma[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(r.sigma[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(r.sigma[2] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(max_abs_diff(r.u, ComplexMatrix::identity(3)) <= 1e-14);
  CHECK(max_abs_diff(r.v, ComplexMatrix::identity(3)) <= 1e-14);
}

TEST_CASE("svd singular values match power-iteration eigenvalues of A'A") {
  Xoshiro256pp rng(18);
  const ComplexMatrix a = random_matrix(rng, 4, 4);
  const SvdResult r = svd(a);
  const std::vector<double> eigs = psd_eigenvalues(adjoint(a) * a, rng);
  REQUIRE(eigs.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(r.sigma[i] == doctest::Approx(std::sqrt(std::max(eigs[i], 0.0))).epsilon(1e-5));
}

TEST_CASE("svd invariants over random square matrices") {
  Xoshiro256pp rng(19);
  for (std::size_t k = 1; k <= 6; ++k) {
    for (int rep = 0; rep < 100; ++rep) {
      const ComplexMatrix a = random_matrix(rng, k, k);
      const SvdResult r = svd(a);
      ComplexMatrix usv(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          Complex s = 0.0;
          for (std::size_t t = 0; t < k; ++t)
            s += r.u(i, t) * r.sigma[t] * std::conj(r.v(j, t));
          usv(i, j) = s;
        }
      CHECK(frobenius_norm(usv - a) <= 1e-9 * frobenius_norm(a));
      CHECK(max_abs_diff(adjoint(r.u) * r.u, ComplexMatrix::identity(k)) <= 1e-12);
      CHECK(max_abs_diff(adjoint(r.v) * r.v, ComplexMatrix::identity(k)) <= 1e-12);
      for (std::size_t i = 1; i < k; ++i) CHECK(r.sigma[i - 1] >= r.sigma[i]);
    }
  }
}

TEST_CASE("trace basics and cyclic property") {
  CHECK(trace(ComplexMatrix::identity(5)) == Complex(5.0, 0.0));

  const ComplexMatrix d{{Complex(1, 1), 0.0}, {0.0, Complex(1, -1)}};
  CHECK(trace(d) == Complex(2.0, 0.0));

  Xoshiro256pp rng(20);
  const ComplexMatrix a = random_matrix(rng, 3, 4);
  const ComplexMatrix b = random_matrix(rng, 4, 3);
  CHECK(std::abs(trace(a * b) - trace(b * a)) <= 1e-12);

  CHECK_THROWS_AS((void)trace(ComplexMatrix(2, 3)), ShapeError);
}

TEST_CASE("trace of a Gramian equals squared Frobenius norm") {
  Xoshiro256pp rng(21);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix a = random_matrix(rng, 4, 4);
    const Complex t = trace(a * adjoint(a));
    const double f2 = frobenius_norm(a) * frobenius_norm(a);
    CHECK(std::abs(t.real() - f2) <= 1e-12 * f2);
    CHECK(std::abs(t.imag()) <= 1e-12 * f2);
  }
}

TEST_CASE("logdet of simple Hermitian matrices") {
  CHECK(logdet_hermitian(ComplexMatrix::identity(2)) == doctest::Approx(0.0));
  const ComplexMatrix d{{2.0, 0.0}, {0.0, 4.0}};
  CHECK(logdet_hermitian(d) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("logdet matches the closed-form 2x2 determinant") {
  Xoshiro256pp rng(22);
  for (int rep = 0; rep < 20; ++rep) {
    // Hermitian PD: Gramian plus a diagonal shift
    const ComplexMatrix g = random_matrix(rng, 2, 2);
    const ComplexMatrix h = add_scaled_identity(g * adjoint(g), 0.3);
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double det = a * d - std::norm(h(0, 1));
    CHECK(logdet_hermitian(h) == doctest::Approx(std::log2(det)).epsilon(1e-12));
  }
}

TEST_CASE("logdet rejects non-positive determinants") {
  const ComplexMatrix d{{1.0, 0.0}, {0.0, -1.0}};
  CHECK_THROWS_AS((void)logdet_hermitian(d), DomainError);
}

TEST_CASE("solve round-trip through multiplication") {
  Xoshiro256pp rng(23);
  for (int rep = 0; rep < 50; ++rep) {
    const ComplexMatrix a = conditioned_matrix(rng, 5, 0.5, 2.0);
    const ComplexMatrix b = random_matrix(rng, 5, 3);
    CHECK(frobenius_norm(a * solve(a, b) - b) <= 1e-10 * frobenius_norm(b));
  }
}
