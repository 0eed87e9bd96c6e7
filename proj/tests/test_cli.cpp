#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "dicke/config.hpp"
#include "dicke/errors.hpp"
#include "dicke/plot.hpp"
#include "dicke/record.hpp"
#include "dicke/sweep.hpp"

using namespace dicke;
namespace fs = std::filesystem;

namespace {

int count(const std::string& text, const std::string& needle) {
  int c = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++c;
  }
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(DICKE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "dicke_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("config text") {
  std::istringstream in("# comment\nD = 12.5\n  N=4,16  # trailing\n\nD=7\n");
  const auto cfg = parse_config_text(in);
  CHECK(cfg.at("D") == "7");
  CHECK(cfg.at("N") == "4,16");
  std::istringstream bad("D 12\n");
  CHECK_THROWS_AS(parse_config_text(bad), UsageError);
  std::istringstream empty_key(" = 3\n");
  CHECK_THROWS_AS(parse_config_text(empty_key), UsageError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/dicke.cfg"), IoError);
}

TEST_CASE("alpha specs") {
  const auto r = parse_alpha_spec("0:3:0.05");
  CHECK(r.size() == 61);
  CHECK(r.front() == 0.0);
  CHECK(r.back() == doctest::Approx(3.0));
  CHECK(parse_alpha_spec("0:1:0.3").size() == 4);
  const auto l = parse_alpha_spec("0.5,1,2");
  REQUIRE(l.size() == 3);
  CHECK(l[1] == 1.0);
  CHECK_THROWS_AS(parse_alpha_spec("0:1:0"), UsageError);
  CHECK_THROWS_AS(parse_alpha_spec("1:0:0.1"), UsageError);
  CHECK_THROWS_AS(parse_alpha_spec("a,b"), UsageError);
  CHECK(parse_int_list("1,4,16") == std::vector<int>{1, 4, 16});
  CHECK_THROWS_AS(parse_int_list("1,x"), UsageError);
}

TEST_CASE("worker resolution") {
  CHECK(resolve_workers(3) == 3);
  setenv("DICKE_BERRY_WORKERS", "5", 1);
  CHECK(resolve_workers(0) == 5);
  unsetenv("DICKE_BERRY_WORKERS");
  CHECK(resolve_workers(0) >= 1);
}

TEST_CASE("csv round trip") {
  std::vector<SweepRecord> recs(2);
  recs[0] = {4, 10.0, 0.5, 0.0264312345678901, -0.99158, -19.8, 9.5, 2001, 3, 1.5};
  recs[1] = {0, 10.0, 2.0, 1.5707963267949, -0.5, 0.0, 0.0, 0, 0, 0.0};
  std::ostringstream out;
  write_csv(out, recs);
  const std::string text = out.str();
  CHECK(text.rfind("n_qubits,big_d,alpha,gamma_per_n,sx_per_n,epsilon0,q_max,"
                   "m_points,refinement_steps\n",
                   0) == 0);
  CHECK(text.find("wall_time") == std::string::npos);
  std::istringstream in(text);
  const auto back = read_csv(in);
  REQUIRE(back.size() == 2);
  CHECK(back[0].gamma_per_n == doctest::Approx(0.0264312345678901).epsilon(1e-11));
  CHECK(back[0].m_points == 2001);
  CHECK(back[1].n_qubits == 0);

  std::ostringstream header_only;
  write_csv(header_only, {});
  CHECK(count(header_only.str(), "\n") == 1);
  CHECK(format_number(-0.0) == "0");
  CHECK_THROWS_AS(emit_csv(recs, "/nonexistent/dir/out.csv"), IoError);
}

TEST_CASE("svg output") {
  std::vector<SweepRecord> recs;
  for (int n : {0, 4, 16}) {
    for (double a : {0.0, 1.0, 2.0}) {
      SweepRecord r;
      r.n_qubits = n;
      r.alpha = a;
      r.gamma_per_n = a;
      recs.push_back(r);
    }
  }
  const auto series = alpha_series(recs);
  REQUIRE(series.size() == 3);
  std::ostringstream out;
  write_svg(out, series, {"gamma <& N", "alpha", "gamma/N"});
  const std::string svg = out.str();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count(svg, "<polyline") == 3);
  CHECK(count(svg, "stroke-dasharray") >= 1);
  CHECK(svg.find("&lt;&amp;") != std::string::npos);
  CHECK(svg.find("N = inf") != std::string::npos);
}

TEST_CASE("parallel_map keeps index order and propagates errors") {
  for (unsigned w : {1u, 3u, 8u}) {
    const auto r = parallel_map<std::size_t>(
        50, w, [](std::size_t i) { return i * i; });
    REQUIRE(r.size() == 50);
    for (std::size_t i = 0; i < r.size(); ++i) CHECK(r[i] == i * i);
  }
  CHECK_THROWS_AS(parallel_map<int>(10, 4,
                                    [](std::size_t i) -> int {
                                      if (i == 7) throw NumericalError("x");
                                      return 0;
                                    }),
                  NumericalError);
}

TEST_CASE("sweep row count and ordering") {
  SweepConfig c;
  c.n_list = {1, 4};
  c.alphas = parse_alpha_spec("0:1:0.25");
  const auto recs = sweep_alpha(c);
  // 2 x 5 finite-N rows plus 5 limit rows
  CHECK(recs.size() == 15);
  CHECK(recs.front().n_qubits == 0);
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const bool ordered = recs[i - 1].n_qubits < recs[i].n_qubits ||
                         (recs[i - 1].n_qubits == recs[i].n_qubits &&
                          recs[i - 1].alpha < recs[i].alpha);
    CHECK(ordered);
  }
  c.n_list.clear();
  CHECK_THROWS_AS(sweep_alpha(c), UsageError);
}

TEST_CASE("derivative table groups by N") {
  SweepConfig c;
  c.n_list = {4};
  c.alphas = parse_alpha_spec("0:2:0.5");
  const auto rows = derivative_table(sweep_alpha(c));
  CHECK(rows.size() == 10);
}

TEST_CASE("cli exit codes and outputs") {
  const fs::path csv = scratch("sweep.csv");
  const fs::path svg = scratch("sweep.svg");
  fs::remove(csv);
  CHECK(run_cli("sweep-alpha --N 2 --alpha 0:1:0.5 --out " + csv.string() +
                " --svg " + svg.string()) == 0);
  const std::string text = slurp(csv);
  CHECK(count(text, "\n") == 1 + 3 + 3);
  CHECK(fs::exists(fs::path(csv.string() + ".timing.csv")));
  CHECK(slurp(svg).find("</svg>") != std::string::npos);

  CHECK(run_cli("derivative --in " + csv.string() + " --out " +
                scratch("deriv.csv").string()) == 0);
  CHECK(run_cli("") == 2);
  CHECK(run_cli("sweep-alpha --bogus") == 2);
  CHECK(run_cli("sweep-alpha --N 2 --alpha 1:0:0.5") == 2);
  CHECK(run_cli("sweep-alpha --N -3 --alpha 0.5") == 2);
  CHECK(run_cli("sweep-alpha --N 2 --alpha 0.5 --out /nonexistent/dir/x.csv") == 3);
  CHECK(run_cli("derivative --in /nonexistent/x.csv") == 3);
  CHECK(run_cli("sweep-alpha --config /nonexistent/x.cfg") == 3);

  const fs::path cfg = scratch("run.cfg");
  std::ofstream(cfg) << "N = 2\nalpha = 0.5,1.5\nD = 8\n";
  CHECK(run_cli("sweep-alpha --config " + cfg.string() + " --out " +
                csv.string()) == 0);
  const auto recs = load_csv(csv.string());
  REQUIRE(recs.size() == 4);
  CHECK(recs.back().big_d == 8.0);
}
