#include "dicke/sweep.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <tuple>

#include "dicke/errors.hpp"
#include "dicke/oracle.hpp"

namespace dicke {

double wrap_two_pi(double x) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

SweepRecord compute_record(const ModelParams& p, const BerryOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const BerryResult b = berry_phase(p, opts);
  const auto t1 = std::chrono::steady_clock::now();
  SweepRecord r;
  r.n_qubits = p.n_qubits();
  r.big_d = p.big_d();
  r.alpha = p.alpha();
  r.gamma_per_n = b.gamma_per_n;
  r.sx_per_n = b.sx_per_n;
  r.epsilon0 = b.spectral.energy;
  r.q_max = b.spectral.wavefunction.grid.q_max();
  r.m_points = static_cast<long long>(b.spectral.wavefunction.grid.m_points());
  r.refinement_steps = b.spectral.refinement_steps;
  r.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

SweepRecord limit_record(double big_d, double alpha) {
  SweepRecord r;
  r.n_qubits = 0;
  r.big_d = big_d;
  r.alpha = alpha;
  r.gamma_per_n = thermo_berry(alpha);
  r.sx_per_n = thermo_sx(alpha);
  return r;
}

std::vector<SweepRecord> sweep_alpha(const SweepConfig& config) {
  if (config.n_list.empty()) throw UsageError("sweep needs at least one N");
  if (config.alphas.empty()) throw UsageError("sweep needs at least one alpha");
  for (int n : config.n_list) {
    if (n < 1) throw UsageError("N values must be >= 1");
  }
  // Validate every point before spawning work.
  std::vector<ModelParams> points;
  for (int n : config.n_list) {
    for (double a : config.alphas) points.emplace_back(n, config.big_d, a);
  }
  std::vector<SweepRecord> records = parallel_map<SweepRecord>(
      points.size(), config.workers,
      [&](std::size_t i) { return compute_record(points[i], config.berry); });
  for (double a : config.alphas) {
    records.push_back(limit_record(config.big_d, a));
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const SweepRecord& x, const SweepRecord& y) {
                     return std::tie(x.n_qubits, x.alpha) <
                            std::tie(y.n_qubits, y.alpha);
                   });
  return records;
}

std::vector<DerivativeRow> derivative_table(
    const std::vector<SweepRecord>& records) {
  std::map<int, std::vector<SweepRecord>> groups;
  for (const SweepRecord& r : records) groups[r.n_qubits].push_back(r);
  std::vector<DerivativeRow> out;
  for (auto& [n, group] : groups) {
    std::stable_sort(group.begin(), group.end(),
                     [](const SweepRecord& x, const SweepRecord& y) {
                       return x.alpha < y.alpha;
                     });
    const std::vector<double> d = berry_derivative(group);
    for (std::size_t i = 0; i < group.size(); ++i) {
      out.push_back({n, group[i].alpha, group[i].gamma_per_n, d[i]});
    }
  }
  return out;
}

void write_derivative_csv(std::ostream& out,
                          const std::vector<DerivativeRow>& rows) {
  out << "n_qubits,alpha,gamma_per_n,dgamma_dalpha\n";
  for (const auto& r : rows) {
    out << r.n_qubits << ',' << format_number(r.alpha) << ','
        << format_number(r.gamma_per_n) << ',' << format_number(r.dgamma_dalpha)
        << '\n';
  }
}

ScalingReport scaling_run(const ScalingConfig& config) {
  if (config.n_list.empty()) throw UsageError("scaling run needs at least one N");
  std::vector<ModelParams> points;
  for (int n : config.n_list) {
    if (n < 1) throw UsageError("N values must be >= 1");
    points.emplace_back(n, config.big_d, config.alpha);
  }
  ScalingReport report;
  report.constants = quartic_constants(config.quartic);
  const auto records = parallel_map<SweepRecord>(
      points.size(), config.workers,
      [&](std::size_t i) { return compute_record(points[i], config.berry); });
  std::vector<std::pair<double, double>> fit_points;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const BerryPrediction pred =
        finite_size_berry_prediction(points[i], report.constants);
    report.rows.push_back({records[i], pred.leading, pred.two_term});
    fit_points.emplace_back(records[i].n_qubits, records[i].gamma_per_n);
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ScalingRow& x, const ScalingRow& y) {
                     return x.record.n_qubits < y.record.n_qubits;
                   });
  if (fit_points.size() >= 3) {
    report.fit = fit_critical_exponent(fit_points);
  } else {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    report.fit = {nan, nan, nan};
  }
  return report;
}

void write_scaling_csv(std::ostream& out, const ScalingReport& report) {
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << ",prediction_leading,prediction_two_term\n";
  for (const ScalingRow& row : report.rows) {
    std::ostringstream line;
    write_csv(line, {row.record});
    std::string text = line.str();
    text = text.substr(text.find('\n') + 1);
    text.pop_back();
    out << text << ',' << format_number(row.prediction_leading) << ','
        << format_number(row.prediction_two_term) << '\n';
  }
}

std::string fit_summary(const ScalingReport& report) {
  std::ostringstream s;
  s << "c0 = " << format_number(report.constants.c0)
    << "\nc1 = " << format_number(report.constants.c1)
    << "\nslope = " << format_number(report.fit.slope)
    << "\nintercept = " << format_number(report.fit.intercept)
    << "\nresidual = " << format_number(report.fit.residual) << '\n';
  return s.str();
}

std::vector<OracleRow> oracle_compare(const OracleConfig& config) {
  if (config.n_list.empty() || config.d_list.empty() || config.alphas.empty()) {
    throw UsageError("oracle comparison needs N, D and alpha values");
  }
  std::vector<ModelParams> points;
  for (int n : config.n_list) {
    if (n < 1 || n > 8) {
      throw UsageError("oracle comparison is limited to 1 <= N <= 8");
    }
    for (double d : config.d_list) {
      for (double a : config.alphas) points.emplace_back(n, d, a);
    }
  }
  return parallel_map<OracleRow>(
      points.size(), config.workers, [&](std::size_t i) {
        const ModelParams& p = points[i];
        const BerryResult bo = berry_phase(p, config.berry);
        const FockConvergence fc = fock_convergence(p, config.start_n_max);
        const GroundState gs =
            ground_state(build_hamiltonian(p, fc.basis));
        const double sx = exact_sx(gs.state, fc.basis);
        double disc = std::numeric_limits<double>::quiet_NaN();
        try {
          disc = discrete_berry(p, fc.basis, config.loop_steps).gamma;
        } catch (const NumericalError&) {
          // quasi-degenerate: reported through the gap column
        }
        const double n = p.n_qubits();
        return OracleRow{p.n_qubits(),
                         p.big_d(),
                         p.alpha(),
                         fc.basis.n_max(),
                         bo.sx_per_n,
                         sx / n,
                         wrap_two_pi(bo.gamma),
                         wrap_two_pi(n * std::numbers::pi + std::numbers::pi * sx),
                         disc,
                         gs.gap,
                         bo.spectral.energy,
                         gs.energy};
      });
}

void write_oracle_csv(std::ostream& out, const std::vector<OracleRow>& rows) {
  out << "n_qubits,big_d,alpha,n_max,sx_per_n_bo,sx_per_n_exact,gamma_bo_mod,"
         "gamma_exact_mod,gamma_discrete,gap,epsilon0_bo,e0_exact\n";
  for (const auto& r : rows) {
    out << r.n_qubits << ',' << format_number(r.big_d) << ','
        << format_number(r.alpha) << ',' << r.n_max << ','
        << format_number(r.sx_per_n_bo) << ',' << format_number(r.sx_per_n_exact)
        << ',' << format_number(r.gamma_bo_mod) << ','
        << format_number(r.gamma_exact_mod) << ','
        << format_number(r.gamma_discrete) << ',' << format_number(r.gap) << ','
        << format_number(r.epsilon0_bo) << ',' << format_number(r.e0_exact)
        << '\n';
  }
}

}  // namespace dicke
