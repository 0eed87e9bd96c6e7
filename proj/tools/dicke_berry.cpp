// dicke_berry: parameter sweeps of the adiabatic Dicke model Berry phase.
//
// Exit codes: 0 success, 2 usage, 3 I/O, 4 numerical failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "dicke/berryphase.hpp"
#include "dicke/config.hpp"
#include "dicke/errors.hpp"
#include "dicke/plot.hpp"
#include "dicke/record.hpp"
#include "dicke/scaling.hpp"
#include "dicke/sweep.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumerical = 4;

struct Flags {
  std::optional<std::string> big_d;
  std::optional<std::string> n_list;
  std::optional<std::string> alpha;
  std::optional<std::string> out;
  std::optional<std::string> svg;
  std::optional<std::string> workers;
  std::optional<std::string> tol;
  std::optional<std::string> steps;
  std::optional<std::string> input;
  std::string config;

  // Values given on the command line win over the config file.
  void merge_config() {
    if (config.empty()) return;
    const auto kv = dicke::load_config_file(config);
    const std::map<std::string, std::optional<std::string>*> slots = {
        {"D", &big_d},     {"N", &n_list}, {"alpha", &alpha},
        {"out", &out},     {"svg", &svg},  {"workers", &workers},
        {"tol", &tol},     {"steps", &steps}, {"in", &input}};
    for (const auto& [key, value] : kv) {
      const auto it = slots.find(key);
      if (it == slots.end()) {
        throw dicke::UsageError("unknown config key '" + key + "'");
      }
      if (!*it->second) *it->second = value;
    }
  }

  double single_d() const {
    const auto ds = dicke::parse_double_list(big_d.value_or("10"));
    if (ds.size() != 1) throw dicke::UsageError("--D takes one value here");
    return ds.front();
  }

  std::vector<int> ns(const std::string& fallback) const {
    const std::string s = n_list.value_or(fallback);
    if (s.empty()) throw dicke::UsageError("--N list is empty");
    return dicke::parse_int_list(s);
  }

  unsigned worker_count() const {
    int w = 0;
    if (workers) {
      const auto v = dicke::parse_int_list(*workers);
      if (v.size() != 1 || v.front() < 1) {
        throw dicke::UsageError("--workers must be a positive integer");
      }
      w = v.front();
    }
    return dicke::resolve_workers(w);
  }

  dicke::BerryOptions berry() const {
    dicke::BerryOptions o;
    if (tol) {
      const auto v = dicke::parse_double_list(*tol);
      if (v.size() != 1 || !(v.front() > 0.0)) {
        throw dicke::UsageError("--tol must be a positive number");
      }
      o.refine.tolerance = v.front();
    }
    return o;
  }
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--D", f.big_d, "D = 2 Delta / omega (comma list for oracle-compare)");
  cmd->add_option("--N", f.n_list, "comma-separated qubit numbers");
  cmd->add_option("--alpha", f.alpha, "start:stop:step or comma list");
  cmd->add_option("--out", f.out, "CSV output path (stdout if omitted)");
  cmd->add_option("--svg", f.svg, "SVG plot path");
  cmd->add_option("--workers", f.workers, "worker threads (env DICKE_BERRY_WORKERS)");
  cmd->add_option("--tol", f.tol, "grid refinement tolerance on epsilon0");
  cmd->add_option("--config", f.config, "key = value config file");
}

template <typename Writer>
void write_output(const std::optional<std::string>& path, Writer&& writer) {
  if (!path) {
    writer(std::cout);
    return;
  }
  std::ofstream f(*path, std::ios::binary | std::ios::trunc);
  if (!f) throw dicke::IoError("cannot open '" + *path + "' for writing");
  writer(f);
  f.flush();
  if (!f) throw dicke::IoError("write to '" + *path + "' failed");
}

int run_sweep(const Flags& f) {
  dicke::SweepConfig cfg;
  cfg.big_d = f.single_d();
  cfg.n_list = f.ns("1,4,16,64");
  cfg.alphas = dicke::parse_alpha_spec(f.alpha.value_or("0:3:0.05"));
  cfg.workers = f.worker_count();
  cfg.berry = f.berry();
  const auto records = dicke::sweep_alpha(cfg);
  write_output(f.out, [&](std::ostream& os) { dicke::write_csv(os, records); });
  if (f.out) dicke::emit_timing(records, *f.out + ".timing.csv");
  if (f.svg) {
    dicke::emit_svg(dicke::alpha_series(records),
                    {"Scaled Berry phase, D = " + dicke::format_number(cfg.big_d),
                     "alpha", "gamma / N"},
                    *f.svg);
  }
  return 0;
}

int run_derivative(const Flags& f) {
  std::vector<dicke::SweepRecord> records;
  if (f.input) {
    records = dicke::load_csv(*f.input);
  } else {
    dicke::SweepConfig cfg;
    cfg.big_d = f.single_d();
    cfg.n_list = f.ns("1,4,16,64");
    cfg.alphas = dicke::parse_alpha_spec(f.alpha.value_or("0:3:0.05"));
    cfg.workers = f.worker_count();
    cfg.berry = f.berry();
    records = dicke::sweep_alpha(cfg);
  }
  const auto rows = dicke::derivative_table(records);
  write_output(f.out,
               [&](std::ostream& os) { dicke::write_derivative_csv(os, rows); });
  if (f.svg) {
    std::map<int, dicke::Series> by_n;
    for (const auto& r : rows) by_n[r.n_qubits].points.emplace_back(r.alpha, r.dgamma_dalpha);
    std::vector<dicke::Series> series;
    for (auto& [n, s] : by_n) {
      s.label = n == 0 ? "N = inf" : "N = " + std::to_string(n);
      s.dashed = n == 0;
      series.push_back(std::move(s));
    }
    dicke::emit_svg(series, {"d(gamma/N)/d alpha", "alpha", "d(gamma/N)/d alpha"},
                    *f.svg);
  }
  return 0;
}

int run_scaling(const Flags& f) {
  dicke::ScalingConfig cfg;
  cfg.big_d = f.single_d();
  cfg.n_list = f.ns("4,8,16,32,64,128,256,512,1024,2048,4096,8192");
  if (f.alpha) {
    const auto a = dicke::parse_alpha_spec(*f.alpha);
    if (a.size() != 1) throw dicke::UsageError("scaling takes one alpha");
    cfg.alpha = a.front();
  }
  cfg.workers = f.worker_count();
  cfg.berry = f.berry();
  const auto report = dicke::scaling_run(cfg);
  write_output(f.out,
               [&](std::ostream& os) { dicke::write_scaling_csv(os, report); });
  std::cerr << dicke::fit_summary(report);
  if (f.svg) {
    dicke::Series numeric{"numerical", {}};
    dicke::Series two{"two-term prediction", {}, true};
    dicke::Series lead{"leading N^(-2/3)", {}, true};
    for (const auto& row : report.rows) {
      const double n = row.record.n_qubits;
      numeric.points.emplace_back(n, row.record.gamma_per_n);
      two.points.emplace_back(n, row.prediction_two_term);
      lead.points.emplace_back(n, row.prediction_leading);
    }
    dicke::PlotSpec spec{"gamma/N at alpha = " + dicke::format_number(cfg.alpha),
                         "N", "gamma / N"};
    spec.log_x = spec.log_y = true;
    dicke::emit_svg({numeric, two, lead}, spec, *f.svg);
  }
  return 0;
}

int run_quartic(const Flags& f) {
  dicke::QuarticOptions opts;
  if (f.tol) opts.tolerance = f.berry().refine.tolerance;
  const auto qc = dicke::quartic_constants(opts);
  write_output(f.out, [&](std::ostream& os) {
    os << "c0,c1\n"
       << dicke::format_number(qc.c0) << ',' << dicke::format_number(qc.c1)
       << '\n';
  });
  return 0;
}

int run_oracle(const Flags& f) {
  dicke::OracleConfig cfg;
  cfg.n_list = f.ns("2,3,4");
  cfg.d_list = dicke::parse_double_list(f.big_d.value_or("5,10,20,40"));
  cfg.alphas = dicke::parse_alpha_spec(f.alpha.value_or("0.25,0.5"));
  if (f.steps) {
    const auto s = dicke::parse_int_list(*f.steps);
    if (s.size() != 1) throw dicke::UsageError("--steps takes one value");
    cfg.loop_steps = s.front();
  }
  cfg.workers = f.worker_count();
  cfg.berry = f.berry();
  const auto rows = dicke::oracle_compare(cfg);
  write_output(f.out,
               [&](std::ostream& os) { dicke::write_oracle_csv(os, rows); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berry phase of the adiabatic Dicke model"};
  app.require_subcommand(1);

  Flags flags;
  auto* sweep = app.add_subcommand("sweep-alpha", "gamma/N against alpha for several N");
  auto* scaling = app.add_subcommand("scaling", "finite-size scaling at fixed alpha");
  auto* quartic = app.add_subcommand("quartic", "quartic oscillator constants c0, c1");
  auto* oracle = app.add_subcommand("oracle-compare", "compare with exact diagonalization");
  auto* deriv = app.add_subcommand("derivative", "d(gamma/N)/d alpha of a sweep");
  for (auto* cmd : {sweep, scaling, quartic, oracle, deriv}) add_common(cmd, flags);
  oracle->add_option("--steps", flags.steps, "loop discretization steps (default 2000)");
  deriv->add_option("--in", flags.input, "existing sweep CSV instead of recomputing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    flags.merge_config();
    if (*sweep) return run_sweep(flags);
    if (*scaling) return run_scaling(flags);
    if (*quartic) return run_quartic(flags);
    if (*oracle) return run_oracle(flags);
    if (*deriv) return run_derivative(flags);
  } catch (const dicke::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const dicke::InvalidParameter& e) {
    std::cerr << "invalid parameter: " << e.what() << '\n';
    return kExitUsage;
  } catch (const dicke::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const dicke::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
