#include "dicke/oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "dicke/errors.hpp"

namespace dicke {
namespace {

using Complex = std::complex<double>;

void fix_sign(Eigen::VectorXd& v) {
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  if (v[imax] < 0.0) v = -v;
}

GroundState dense_ground(const Eigen::SparseMatrix<double>& h) {
  const Eigen::MatrixXd dense(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
  if (es.info() != Eigen::Success) {
    throw NumericalError("dense eigensolver failed");
  }
  Eigen::VectorXd v = es.eigenvectors().col(0);
  fix_sign(v);
  const double e0 = es.eigenvalues()[0];
  const double gap = h.rows() > 1 ? es.eigenvalues()[1] - e0 : 0.0;
  return {e0, v, gap, (h * v - e0 * v).norm()};
}

// Lanczos with full reorthogonalization, restarted from the current Ritz
// vector until the residual drops below tolerance.
GroundState lanczos_ground(const Eigen::SparseMatrix<double>& h,
                           double tolerance) {
  const Eigen::Index n = h.rows();
  const Eigen::Index krylov = std::min<Eigen::Index>(n, 200);
  constexpr int kMaxRestarts = 50;

  Eigen::VectorXd start(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    start[i] = 1.0 + 0.01 * std::sin(static_cast<double>(i) + 1.0);
  }
  start.normalize();

  double residual = 0.0;
  for (int restart = 0; restart < kMaxRestarts; ++restart) {
    Eigen::MatrixXd basis(n, krylov);
    Eigen::VectorXd alpha(krylov), beta(krylov);
    basis.col(0) = start;
    Eigen::Index m = krylov;
    for (Eigen::Index j = 0; j < krylov; ++j) {
      Eigen::VectorXd w = h * basis.col(j);
      alpha[j] = basis.col(j).dot(w);
      w -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).transpose() * w);
      w -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).transpose() * w);
      beta[j] = w.norm();
      if (j + 1 == krylov) break;
      if (beta[j] < 1e-14) {
        m = j + 1;
        break;
      }
      basis.col(j + 1) = w / beta[j];
    }
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
      t(j, j) = alpha[j];
      if (j + 1 < m) t(j, j + 1) = t(j + 1, j) = beta[j];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    Eigen::VectorXd v = basis.leftCols(m) * es.eigenvectors().col(0);
    v.normalize();
    const double e0 = v.dot(h * v);
    residual = (h * v - e0 * v).norm();
    if (residual < tolerance) {
      fix_sign(v);
      const double gap = m > 1 ? es.eigenvalues()[1] - es.eigenvalues()[0] : 0.0;
      return {e0, v, gap, residual};
    }
    start = v;
  }
  throw NumericalError("Lanczos did not converge; residual " +
                       std::to_string(residual));
}

}  // namespace

FockSpinBasis::FockSpinBasis(int n_max, int n_qubits)
    : n_max_(n_max), n_qubits_(n_qubits) {
  if (n_max < 0) throw InvalidParameter("boson cutoff must be >= 0");
  if (n_qubits < 1) throw InvalidParameter("n_qubits must be >= 1");
}

Eigen::MatrixXd spin_jx(int n_qubits) {
  const int dim = n_qubits + 1;
  const double j = 0.5 * n_qubits;
  Eigen::MatrixXd jx = Eigen::MatrixXd::Zero(dim, dim);
  for (int k = 0; k + 1 < dim; ++k) {
    const double m = -j + k;
    const double c = 0.5 * std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    jx(k, k + 1) = c;
    jx(k + 1, k) = c;
  }
  return jx;
}

Eigen::SparseMatrix<double> build_hamiltonian(const ModelParams& p,
                                              const FockSpinBasis& basis,
                                              std::size_t max_dimension) {
  const std::size_t dim = basis.dimension();
  if (dim > max_dimension) {
    throw InvalidParameter("basis dimension " + std::to_string(dim) +
                           " exceeds limit " + std::to_string(max_dimension));
  }
  const int nq = basis.n_qubits();
  const int ns = nq + 1;
  const double j = 0.5 * nq;
  const double delta = p.delta();
  const double g = p.lam() / std::sqrt(static_cast<double>(nq));
  const Eigen::MatrixXd jx = spin_jx(nq);

  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(dim * 5);
  for (int n = 0; n <= basis.n_max(); ++n) {
    for (int k = 0; k < ns; ++k) {
      const auto row = static_cast<Eigen::Index>(basis.index(n, k));
      entries.emplace_back(row, row, static_cast<double>(n));
      // Delta S_x, S_x = 2 J_x
      if (k + 1 < ns) {
        const double v = 2.0 * delta * jx(k, k + 1);
        const auto col = static_cast<Eigen::Index>(basis.index(n, k + 1));
        entries.emplace_back(row, col, v);
        entries.emplace_back(col, row, v);
      }
      // g (a^+ + a) S_z, S_z = 2 m
      if (n < basis.n_max()) {
        const double m = -j + k;
        const double v = g * std::sqrt(n + 1.0) * 2.0 * m;
        if (v != 0.0) {
          const auto col = static_cast<Eigen::Index>(basis.index(n + 1, k));
          entries.emplace_back(row, col, v);
          entries.emplace_back(col, row, v);
        }
      }
    }
  }
  Eigen::SparseMatrix<double> h(static_cast<Eigen::Index>(dim),
                                static_cast<Eigen::Index>(dim));
  h.setFromTriplets(entries.begin(), entries.end());
  return h;
}

GroundState ground_state(const Eigen::SparseMatrix<double>& h,
                         const GroundStateOptions& opts) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw InvalidParameter("ground_state needs a non-empty square matrix");
  }
  GroundState gs = (!opts.force_lanczos &&
                    static_cast<std::size_t>(h.rows()) <= opts.dense_limit)
                       ? dense_ground(h)
                       : lanczos_ground(h, opts.residual_tolerance);
  if (!(gs.residual < opts.residual_tolerance)) {
    throw NumericalError("ground state residual " +
                         std::to_string(gs.residual) + " above tolerance");
  }
  return gs;
}

double exact_sx(const Eigen::VectorXd& state, const FockSpinBasis& basis) {
  const int ns = static_cast<int>(basis.spin_dimension());
  const Eigen::MatrixXd sx = 2.0 * spin_jx(basis.n_qubits());
  // Row-major boson x spin view of the state.
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>
      psi(state.data(), basis.n_max() + 1, ns);
  return (psi * sx).cwiseProduct(psi).sum();
}

double top_fock_weight(const Eigen::VectorXd& state,
                       const FockSpinBasis& basis) {
  const auto ns = static_cast<Eigen::Index>(basis.spin_dimension());
  return state
      .segment(static_cast<Eigen::Index>(basis.index(basis.n_max(), 0)), ns)
      .squaredNorm();
}

Eigen::MatrixXcd spin_rotation(int n_qubits, double phi) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(spin_jx(n_qubits));
  const Eigen::MatrixXd& v = es.eigenvectors();
  Eigen::VectorXcd phases(v.cols());
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    phases[k] = std::polar(1.0, -phi * es.eigenvalues()[k]);
  }
  return v.cast<Complex>() * phases.asDiagonal() * v.transpose().cast<Complex>();
}

std::vector<Eigen::VectorXcd> rotated_loop(const Eigen::VectorXd& psi0,
                                           const FockSpinBasis& basis,
                                           int steps) {
  if (steps < 1) throw InvalidParameter("loop needs at least one step");
  const int ns = static_cast<int>(basis.spin_dimension());
  const int nb = basis.n_max() + 1;
  using RowMajorC =
      Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                       Eigen::RowMajor>>
      psi(psi0.data(), nb, ns);

  // J_x = V diag(mu) V^T; rotating is a phase per J_x eigencomponent.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(spin_jx(basis.n_qubits()));
  const Eigen::MatrixXd& v = es.eigenvectors();
  const Eigen::MatrixXcd in_jx = (psi * v).cast<Complex>();
  const Eigen::MatrixXcd back = v.transpose().cast<Complex>();

  std::vector<Eigen::VectorXcd> loop;
  loop.reserve(steps);
  for (int k = 0; k < steps; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / steps;
    Eigen::VectorXcd phases(ns);
    for (int s = 0; s < ns; ++s) {
      phases[s] = std::polar(1.0, -phi * es.eigenvalues()[s]);
    }
    // (psi U^T) in row-major layout equals (1 (x) U) psi.
    RowMajorC rotated = in_jx * phases.asDiagonal() * back;
    loop.emplace_back(Eigen::Map<Eigen::VectorXcd>(rotated.data(), nb * ns));
  }
  return loop;
}

double overlap_berry_phase(std::span<const Eigen::VectorXcd> loop) {
  if (loop.size() < 2) throw InvalidParameter("loop needs at least two states");
  Complex product = 1.0;
  for (std::size_t k = 0; k < loop.size(); ++k) {
    const Eigen::VectorXcd& next = loop[(k + 1) % loop.size()];
    const Complex ov = loop[k].dot(next);  // conjugates loop[k]
    if (std::abs(ov) == 0.0) {
      throw NumericalError("vanishing overlap along the loop at step " +
                           std::to_string(k));
    }
    product *= ov / std::abs(ov);
  }
  double gamma = -std::arg(product);
  if (gamma < 0.0) gamma += 2.0 * std::numbers::pi;
  if (gamma >= 2.0 * std::numbers::pi) gamma -= 2.0 * std::numbers::pi;
  return gamma;
}

DiscreteBerry discrete_berry(const ModelParams& p, const FockSpinBasis& basis,
                             int steps, const DiscreteBerryOptions& opts) {
  if (steps < 100) {
    throw InvalidParameter("discrete loop needs at least 100 steps, got " +
                           std::to_string(steps));
  }
  if (p.n_qubits() != basis.n_qubits()) {
    throw InvalidParameter("basis and parameters disagree on N");
  }
  const Eigen::SparseMatrix<double> h =
      build_hamiltonian(p, basis, opts.max_dimension);
  const GroundState gs = ground_state(h);
  if (gs.gap < opts.min_gap) {
    throw NumericalError("ground state is quasi-degenerate (gap " +
                         std::to_string(gs.gap) +
                         "); the loop phase is not defined");
  }
  const double sx = exact_sx(gs.state, basis);

  if (opts.mode == LoopMode::kRotate) {
    const auto loop = rotated_loop(gs.state, basis, steps);
    return {overlap_berry_phase(loop), gs.gap, sx};
  }

  const Eigen::MatrixXd dense(h);
  const Eigen::Index nb = basis.n_max() + 1;
  const auto ns = static_cast<Eigen::Index>(basis.spin_dimension());
  std::vector<Eigen::VectorXcd> loop;
  loop.reserve(steps);
  for (int k = 0; k < steps; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / steps;
    const Eigen::MatrixXcd u = spin_rotation(p.n_qubits(), phi);
    // (1 (x) U) H (1 (x) U)^+ block by block in the boson index.
    Eigen::MatrixXcd hk(dense.rows(), dense.cols());
    for (Eigen::Index a = 0; a < nb; ++a) {
      for (Eigen::Index b = 0; b < nb; ++b) {
        hk.block(a * ns, b * ns, ns, ns) =
            u * dense.block(a * ns, b * ns, ns, ns).cast<Complex>() *
            u.adjoint();
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hk);
    if (es.info() != Eigen::Success) {
      throw NumericalError("complex eigensolver failed at loop step " +
                           std::to_string(k));
    }
    loop.emplace_back(es.eigenvectors().col(0));
  }
  return {overlap_berry_phase(loop), gs.gap, sx};
}

FockConvergence fock_convergence(const ModelParams& p, int start_n_max,
                                 std::size_t max_dimension,
                                 double energy_tolerance,
                                 double weight_tolerance) {
  if (start_n_max < 1) throw InvalidParameter("start cutoff must be >= 1");
  FockSpinBasis basis(start_n_max, p.n_qubits());
  GroundState gs = ground_state(build_hamiltonian(p, basis, max_dimension));
  int doublings = 0;
  while (true) {
    FockSpinBasis bigger(2 * basis.n_max(), p.n_qubits());
    GroundState next = ground_state(build_hamiltonian(p, bigger, max_dimension));
    if (std::abs(next.energy - gs.energy) < energy_tolerance &&
        top_fock_weight(gs.state, basis) < weight_tolerance) {
      return {basis, gs.energy, doublings};
    }
    basis = bigger;
    gs = std::move(next);
    ++doublings;
  }
}

}  // namespace dicke
