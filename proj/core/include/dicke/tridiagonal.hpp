#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dicke {

// Real symmetric tridiagonal matrix: diag has n entries, off has n - 1
// (off[i] couples rows i and i + 1).
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }
};

// Gershgorin enclosure of the spectrum.
struct Interval {
  double lo;
  double hi;
};
Interval gershgorin_bounds(const SymTridiagonal& t);

// Number of eigenvalues strictly less than x (Sturm sequence count).
std::size_t sturm_count(const SymTridiagonal& t, double x);

struct EigenBracket {
  double lo;  // sturm_count(lo) <= k
  double hi;  // sturm_count(hi) > k
  int iterations;

  double value() const { return 0.5 * (lo + hi); }
};

// Brackets the k-th smallest eigenvalue (0-based) by bisection until the
// interval shrinks to a few ulps.
EigenBracket bisect_eigenvalue(const SymTridiagonal& t, std::size_t k);

struct InverseIterationResult {
  std::vector<double> vector;  // unit 2-norm
  double rayleigh;             // Rayleigh quotient of vector
  double residual;             // ||T v - rayleigh v||_2
  int iterations;
};

// Inverse iteration for the eigenvector of the lowest eigenvalue. The shift
// must lie at or below the lowest eigenvalue so that T - shift I is positive
// semidefinite and elimination without pivoting is stable. Throws
// NumericalError if the iterate has not settled after max_iterations.
InverseIterationResult lowest_eigenvector(const SymTridiagonal& t,
                                          double shift, int max_iterations = 50,
                                          double tolerance = 1e-13);

// y = T x
void multiply(const SymTridiagonal& t, std::span<const double> x,
              std::span<double> y);

}  // namespace dicke
