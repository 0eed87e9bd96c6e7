#include "dicke/schroedinger1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "dicke/errors.hpp"
#include "dicke/tridiagonal.hpp"

namespace dicke {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_even(std::span<const double> v, double tol) {
  const std::size_t m = v.size();
  for (std::size_t i = 0; i < m / 2; ++i) {
    const double a = v[i];
    const double b = v[m - 1 - i];
    if (std::abs(a - b) > tol * (1.0 + std::max(std::abs(a), std::abs(b)))) {
      return false;
    }
  }
  return true;
}

double trapezoid_norm2(std::span<const double> psi, double h) {
  double s = 0.0;
  for (double x : psi) s += x * x;
  s -= 0.5 * (psi.front() * psi.front() + psi.back() * psi.back());
  return s * h;
}

// Shift slightly below the certified lower end of the ground bracket so the
// factorization in inverse iteration stays positive definite.
double safe_shift(const SymTridiagonal& t, const EigenBracket& b) {
  const Interval g = gershgorin_bounds(t);
  const double scale = std::max(std::abs(g.lo), std::abs(g.hi));
  return b.lo - 64.0 * kEps * scale;
}

// psi^T T psi / psi^T psi written with first differences; the second
// difference form loses about eps / h^2 to cancellation.
double rayleigh_quotient(std::span<const double> psi,
                         std::span<const double> potential, double vref,
                         double hop) {
  const std::size_t m = psi.size();
  double kin = psi.front() * psi.front() + psi.back() * psi.back();
  double pot = 0.0;
  double nrm = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (i + 1 < m) {
      const double d = psi[i + 1] - psi[i];
      kin += d * d;
    }
    pot += (potential[i] - vref) * psi[i] * psi[i];
    nrm += psi[i] * psi[i];
  }
  return (hop * kin + pot) / nrm + vref;
}

}  // namespace

QGrid::QGrid(double q_max, std::size_t m_points)
    : q_max_(q_max), m_points_(m_points) {
  if (!(q_max > 0.0) || !std::isfinite(q_max)) {
    throw InvalidParameter("grid half-width must be positive");
  }
  if (m_points < 3 || m_points % 2 == 0) {
    throw InvalidParameter("grid needs an odd node count >= 3, got " +
                           std::to_string(m_points));
  }
  spacing_ = 2.0 * q_max / static_cast<double>(m_points - 1);
}

double QGrid::node(std::size_t i) const {
  const auto k = static_cast<double>(static_cast<std::ptrdiff_t>(i) -
                                     static_cast<std::ptrdiff_t>(center()));
  return k * spacing_;
}

QGrid QGrid::refined() const { return QGrid(q_max_, 2 * (m_points_ - 1) + 1); }

QGrid QGrid::widened() const {
  return QGrid(2.0 * q_max_, 2 * (m_points_ - 1) + 1);
}

std::vector<double> QGrid::sample(
    const std::function<double(double)>& f) const {
  std::vector<double> out(m_points_);
  for (std::size_t i = 0; i < m_points_; ++i) out[i] = f(node(i));
  return out;
}

double ground_state_width(const ModelParams& p) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const double k2 = well_curvature(p);
  const double harmonic = k2 > 0.0 ? std::pow(k2, -0.25) : kInf;
  const double a = p.alpha();
  const double quartic =
      a > 0.0 ? std::pow(2.0 * p.n_qubits() * p.big_d() / (a * a), 1.0 / 6.0)
              : kInf;
  return std::min(harmonic, quartic);
}

QGrid build_grid(const ModelParams& p, const GridOptions& opts) {
  const double pad = opts.safety * std::max(1.0, ground_state_width(p));
  std::size_t m = std::max<std::size_t>(opts.initial_points, 3);
  if (m % 2 == 0) ++m;
  return QGrid(well_position(p) + pad, m);
}

SpectralResult solve_ground(std::span<const double> potential,
                            const QGrid& grid, const SolverOptions& opts) {
  const std::size_t m = grid.m_points();
  if (potential.size() != m) {
    throw InvalidParameter("potential has " + std::to_string(potential.size()) +
                           " samples for a grid of " + std::to_string(m));
  }
  if (!(opts.kinetic > 0.0)) {
    throw InvalidParameter("kinetic coefficient must be positive");
  }
  for (double v : potential) {
    if (!std::isfinite(v)) throw InvalidParameter("potential is not finite");
  }
  const auto vmin_it = std::min_element(potential.begin(), potential.end());
  const double vref = *vmin_it;
  if (std::min(potential.front(), potential.back()) <= vref) {
    throw NumericalError(
        "potential is not confining on the grid: boundary value does not "
        "exceed the interior minimum");
  }

  const double h = grid.spacing();
  const double hop = opts.kinetic / (h * h);
  const std::size_t c = grid.center();

  SpectralResult out{0.0, WaveFunction{grid, std::vector<double>(m, 0.0)}};
  std::vector<double>& psi = out.wavefunction.values;

  if (is_even(potential, opts.parity_tolerance)) {
    out.even_reduction = true;
    // Even sector on nodes c..m-1. Row 0 couples to psi(+h) and psi(-h),
    // symmetrized by scaling the centre unknown with 1/sqrt(2).
    SymTridiagonal even;
    even.diag.resize(c + 1);
    even.off.assign(c, -hop);
    for (std::size_t k = 0; k <= c; ++k) {
      even.diag[k] = 2.0 * hop + (potential[c + k] - vref);
    }
    even.off[0] = -std::numbers::sqrt2 * hop;

    const EigenBracket ground = bisect_eigenvalue(even, 0);
    const auto vec = lowest_eigenvector(even, safe_shift(even, ground));
    psi[c] = std::numbers::sqrt2 * vec.vector[0];
    for (std::size_t k = 1; k <= c; ++k) {
      psi[c + k] = vec.vector[k];
      psi[c - k] = vec.vector[k];
    }
    out.energy = rayleigh_quotient(psi, potential, vref, hop);

    // Odd sector: psi(0) = 0, nodes c+1..m-1.
    SymTridiagonal odd;
    odd.diag.assign(even.diag.begin() + 1, even.diag.end());
    odd.off.assign(c > 0 ? c - 1 : 0, -hop);
    const double first_odd = bisect_eigenvalue(odd, 0).value() + vref;
    out.gap = std::max(0.0, first_odd - out.energy);
  } else {
    SymTridiagonal full;
    full.diag.resize(m);
    full.off.assign(m - 1, -hop);
    for (std::size_t i = 0; i < m; ++i) {
      full.diag[i] = 2.0 * hop + (potential[i] - vref);
    }
    const EigenBracket ground = bisect_eigenvalue(full, 0);
    const EigenBracket second = bisect_eigenvalue(full, 1);
    const auto vec = lowest_eigenvector(full, safe_shift(full, ground));
    psi = vec.vector;
    out.energy = rayleigh_quotient(psi, potential, vref, hop);
    out.gap = std::max(0.0, second.value() + vref - out.energy);
  }

  const double nrm = std::sqrt(trapezoid_norm2(psi, h));
  const auto peak = std::max_element(
      psi.begin(), psi.end(),
      [](double a, double b) { return std::abs(a) < std::abs(b); });
  const double sign = *peak < 0.0 ? -1.0 : 1.0;
  for (double& x : psi) x *= sign / nrm;
  out.boundary_leak = std::max(std::abs(psi.front()), std::abs(psi.back()));
  return out;
}

double expectation(const std::function<double(double)>& f,
                   const WaveFunction& wf) {
  const std::size_t m = wf.values.size();
  double s = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double w = (i == 0 || i + 1 == m) ? 0.5 : 1.0;
    const double v = wf.values[i];
    s += w * f(wf.grid.node(i)) * v * v;
  }
  return s * wf.grid.spacing();
}

SpectralResult refine_until_converged(const PotentialFn& potential,
                                      const QGrid& grid,
                                      const RefineOptions& opts) {
  if (!(opts.tolerance > 0.0)) {
    throw InvalidParameter("refinement tolerance must be positive");
  }
  QGrid g = grid;
  std::optional<double> previous;
  int steps = 0;
  while (true) {
    const auto samples = g.sample(potential);
    SpectralResult res = solve_ground(samples, g, opts.solver);
    res.refinement_steps = steps;

    const bool leaking = res.boundary_leak > opts.tail_tolerance;
    if (!leaking && previous &&
        std::abs(res.energy - *previous) <=
            opts.tolerance * std::max(1.0, std::abs(res.energy))) {
      return res;
    }

    QGrid next = leaking ? g.widened() : g.refined();
    if (leaking) {
      previous.reset();
    } else {
      previous = res.energy;
    }
    ++steps;
    if (next.m_points() > opts.max_points || steps > opts.max_steps) {
      throw RefinementError(
          "grid refinement exhausted after " + std::to_string(steps) +
              " steps at " + std::to_string(g.m_points()) + " points (" +
              (leaking ? "boundary leak " + std::to_string(res.boundary_leak)
                       : "energy not converged") +
              ")",
          std::move(res));
    }
    g = next;
  }
}

}  // namespace dicke
