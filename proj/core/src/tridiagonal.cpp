#include "dicke/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dicke/errors.hpp"

namespace dicke {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSafeMin = std::numeric_limits<double>::min();

double pivot_floor(const SymTridiagonal& t) {
  double emax = 1.0;
  for (double e : t.off) emax = std::max(emax, e * e);
  return kSafeMin * emax;
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

Interval gershgorin_bounds(const SymTridiagonal& t) {
  const std::size_t n = t.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.off[i - 1]);
    if (i + 1 < n) r += std::abs(t.off[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  return {lo, hi};
}

std::size_t sturm_count(const SymTridiagonal& t, double x) {
  const std::size_t n = t.size();
  if (n == 0) return 0;
  const double pivmin = pivot_floor(t);
  std::size_t count = 0;
  double d = t.diag[0] - x;
  if (std::abs(d) < pivmin) d = -pivmin;
  if (d < 0.0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    const double e = t.off[i - 1];
    d = (t.diag[i] - x) - e * e / d;
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0.0) ++count;
  }
  return count;
}

EigenBracket bisect_eigenvalue(const SymTridiagonal& t, std::size_t k) {
  const std::size_t n = t.size();
  if (k >= n) {
    throw InvalidParameter("eigenvalue index " + std::to_string(k) +
                           " out of range for size " + std::to_string(n));
  }
  const Interval g = gershgorin_bounds(t);
  const double widen = 2.0 * kEps * std::max(std::abs(g.lo), std::abs(g.hi)) +
                       2.0 * pivot_floor(t);
  double lo = g.lo - widen;
  double hi = g.hi + widen;
  int it = 0;
  constexpr int kMaxIterations = 2000;
  while (it < kMaxIterations) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi))) break;
    if (sturm_count(t, mid) <= k) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++it;
  }
  if (it == kMaxIterations) {
    throw NumericalError("bisection did not converge after " +
                         std::to_string(it) + " iterations");
  }
  return {lo, hi, it};
}

void multiply(const SymTridiagonal& t, std::span<const double> x,
              std::span<double> y) {
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    double s = t.diag[i] * x[i];
    if (i > 0) s += t.off[i - 1] * x[i - 1];
    if (i + 1 < n) s += t.off[i] * x[i + 1];
    y[i] = s;
  }
}

InverseIterationResult lowest_eigenvector(const SymTridiagonal& t,
                                          double shift, int max_iterations,
                                          double tolerance) {
  const std::size_t n = t.size();
  if (n == 0) throw InvalidParameter("empty matrix");
  const double pivmin = pivot_floor(t);

  // LDL^T of T - shift I, computed once.
  std::vector<double> pivot(n);
  std::vector<double> mult(n > 0 ? n - 1 : 0);
  pivot[0] = t.diag[0] - shift;
  if (std::abs(pivot[0]) < pivmin) pivot[0] = pivmin;
  for (std::size_t i = 1; i < n; ++i) {
    mult[i - 1] = t.off[i - 1] / pivot[i - 1];
    pivot[i] = (t.diag[i] - shift) - mult[i - 1] * t.off[i - 1];
    if (std::abs(pivot[i]) < pivmin) pivot[i] = pivmin;
  }

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  int it = 0;
  bool settled = false;
  while (it < max_iterations) {
    ++it;
    y[0] = x[0];
    for (std::size_t i = 1; i < n; ++i) y[i] = x[i] - mult[i - 1] * y[i - 1];
    y[n - 1] /= pivot[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
      y[i] = y[i] / pivot[i] - mult[i] * y[i + 1];
    }
    const double nrm = norm2(y);
    if (!(nrm > 0.0) || !std::isfinite(nrm)) {
      throw NumericalError("inverse iteration broke down at iteration " +
                           std::to_string(it));
    }
    double change = 0.0;
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += y[i] * x[i];
    const double sign = dot < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = sign * y[i] / nrm;
      change = std::max(change, std::abs(v - x[i]));
      x[i] = v;
    }
    if (change < tolerance && it >= 2) {
      settled = true;
      break;
    }
  }
  if (!settled) {
    throw NumericalError("inverse iteration did not settle after " +
                         std::to_string(it) + " iterations");
  }

  multiply(t, x, y);
  double rq = 0.0;
  for (std::size_t i = 0; i < n; ++i) rq += x[i] * y[i];
  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - rq * x[i];
    res += r * r;
  }
  return {std::move(x), rq, std::sqrt(res), it};
}

}  // namespace dicke
