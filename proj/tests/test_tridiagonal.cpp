#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "dicke/errors.hpp"
#include "dicke/tridiagonal.hpp"

using namespace dicke;

namespace {

SymTridiagonal random_tridiagonal(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  SymTridiagonal t;
  for (std::size_t i = 0; i < n; ++i) t.diag.push_back(3.0 * g(rng));
  for (std::size_t i = 0; i + 1 < n; ++i) t.off.push_back(g(rng));
  return t;
}

Eigen::VectorXd dense_eigenvalues(const SymTridiagonal& t) {
  const auto n = static_cast<Eigen::Index>(t.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = t.diag[i];
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = t.off[i];
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
}

}  // namespace

TEST_CASE("Sturm bisection agrees with dense diagonalization") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 5u, 40u, 200u}) {
    const SymTridiagonal t = random_tridiagonal(rng, n);
    const Eigen::VectorXd ref = dense_eigenvalues(t);
    for (std::size_t k = 0; k < n; k += std::max<std::size_t>(1, n / 7)) {
      const EigenBracket b = bisect_eigenvalue(t, k);
      CHECK(b.lo <= b.hi);
      CHECK(std::abs(b.value() - ref[static_cast<Eigen::Index>(k)]) < 1e-12);
    }
    // count below the midpoint between consecutive eigenvalues
    for (Eigen::Index k = 0; k + 1 < ref.size(); ++k) {
      if (ref[k + 1] - ref[k] > 1e-9) {
        CHECK(sturm_count(t, 0.5 * (ref[k] + ref[k + 1])) ==
              static_cast<std::size_t>(k + 1));
      }
    }
  }
}

TEST_CASE("Sturm count handles zero off-diagonals and exact hits") {
  SymTridiagonal t{{3.0, 1.0, 2.0}, {0.0, 0.0}};
  CHECK(sturm_count(t, 0.5) == 0);
  CHECK(sturm_count(t, 1.5) == 1);
  CHECK(sturm_count(t, 10.0) == 3);
  CHECK(bisect_eigenvalue(t, 0).value() == doctest::Approx(1.0));
  CHECK(bisect_eigenvalue(t, 2).value() == doctest::Approx(3.0));
  CHECK_THROWS_AS(bisect_eigenvalue(t, 3), InvalidParameter);
}

TEST_CASE("inverse iteration returns the lowest eigenvector") {
  std::mt19937_64 rng(5);
  const SymTridiagonal t = random_tridiagonal(rng, 300);
  const EigenBracket b = bisect_eigenvalue(t, 0);
  const auto r = lowest_eigenvector(t, b.lo - 1e-10);
  CHECK(r.rayleigh == doctest::Approx(b.value()).epsilon(1e-12));
  CHECK(r.residual < 1e-10);
  double nrm = 0.0;
  for (double x : r.vector) nrm += x * x;
  CHECK(nrm == doctest::Approx(1.0));
}

TEST_CASE("inverse iteration reports an unsettled iterate") {
  // A shift far below the spectrum contracts the excited components by only
  // ~5e-6 per step, which a three-step budget cannot resolve to 1e-15.
  SymTridiagonal t{{0.0, 0.0, 5.0, 5.0}, {0.0, 0.0, 0.0}};
  CHECK_THROWS_AS(lowest_eigenvector(t, -1e6, 3, 1e-15), NumericalError);
}
