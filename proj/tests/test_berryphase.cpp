#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "dicke/berryphase.hpp"
#include "dicke/errors.hpp"

using namespace dicke;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// Lowest eigenvector of G.sigma written from the Bloch angles.
std::array<cd, 2> spinor(const QubitBlochState& s) {
  return {cd(std::sin(0.5 * s.beta), 0.0),
          -std::cos(0.5 * s.beta) * std::polar(1.0, s.zeta_qubit)};
}

// Adaptive Simpson, independent of the periodic trapezoid in the library.
template <typename F>
double simpson(F f, double a, double b, double tol, int depth = 40) {
  const double c = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fc = f(c);
  const double whole = (b - a) / 6.0 * (fa + 4 * fc + fb);
  auto rec = [&](auto&& self, double lo, double hi, double flo, double fmid,
                 double fhi, double est, int d) -> double {
    const double mid = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
    const double flm = f(lm), frm = f(rm);
    const double left = (mid - lo) / 6.0 * (flo + 4 * flm + fmid);
    const double right = (hi - mid) / 6.0 * (fmid + 4 * frm + fhi);
    if (d <= 0 || std::abs(left + right - est) < 15 * tol) {
      return left + right + (left + right - est) / 15.0;
    }
    return self(self, lo, mid, flo, flm, fmid, left, d - 1) +
           self(self, mid, hi, fmid, frm, fhi, right, d - 1);
  };
  return rec(rec, a, b, fa, fc, fb, whole, depth);
}

SweepRecord record(int n, double alpha, double gpn) {
  SweepRecord r;
  r.n_qubits = n;
  r.alpha = alpha;
  r.gamma_per_n = gpn;
  return r;
}

}  // namespace

TEST_CASE("Bloch angles describe the lowest eigenvector of G.sigma") {
  const ModelParams p(3, 6.0, 1.4);
  for (double q : {-2.0, 0.0, 0.7, 5.0}) {
    for (double phi : {0.0, 0.4, 2.0, 4.5}) {
      const double a = p.big_l() * q / std::sqrt(3.0);
      const double gx = p.big_d(), gy = a * std::sin(phi), gz = a * std::cos(phi);
      const auto s = qubit_state(p, q, phi);
      CHECK(std::cos(s.beta) ==
            doctest::Approx(gz / adiabatic_energy(p, q)).epsilon(1e-12));
      CHECK(std::abs(s.zeta_qubit) < kPi / 2);
      const auto chi = spinor(s);
      // G.sigma = [[gz, gx - i gy], [gx + i gy, -gz]]
      const cd r0 = gz * chi[0] + cd(gx, -gy) * chi[1];
      const cd r1 = cd(gx, gy) * chi[0] - gz * chi[1];
      const double e = adiabatic_energy(p, q);
      CHECK(std::abs(r0 + e * chi[0]) < 1e-12 * e);
      CHECK(std::abs(r1 + e * chi[1]) < 1e-12 * e);
    }
  }
}

TEST_CASE("connection closed form") {
  const ModelParams p(1, 10.0, 1.0);
  CHECK(connection(p, 0.0, 1.3) == 0.0);
  CHECK(std::abs(connection(p, 2.0, kPi / 2)) < 1e-15);
  // E = sqrt(120), a = sqrt(20)
  const double e = std::sqrt(120.0), a = std::sqrt(20.0);
  CHECK(connection(p, 1.0, 0.0) == doctest::Approx(-(10.0 / (2 * e)) * a / (e - a)));
  CHECK(connection(p, 1.0, 0.0) == doctest::Approx(-0.314893890667507));
}

TEST_CASE("connection equals i<chi|d chi/d phi> summed over qubits") {
  const ModelParams p(5, 10.0, 2.3);
  const double h = 1e-5;
  for (double q : {0.4, 3.0, 8.0}) {
    for (double phi : {0.1, 1.0, 2.5, 3.9, 5.5}) {
      const auto chi = spinor(qubit_state(p, q, phi));
      const auto plus = spinor(qubit_state(p, q, phi + h));
      const auto minus = spinor(qubit_state(p, q, phi - h));
      cd overlap = 0.0;
      for (int k = 0; k < 2; ++k) {
        overlap += std::conj(chi[k]) * (plus[k] - minus[k]) / (2 * h);
      }
      const double single = std::real(cd(0.0, 1.0) * overlap);
      CHECK(p.n_qubits() * single ==
            doctest::Approx(connection(p, q, phi)).epsilon(1e-7));
      // -N dzeta/dphi cos^2(beta/2)
      const auto s = qubit_state(p, q, phi);
      const double dz = (qubit_state(p, q, phi + h).zeta_qubit -
                         qubit_state(p, q, phi - h).zeta_qubit) /
                        (2 * h);
      CHECK(-p.n_qubits() * dz * std::pow(std::cos(0.5 * s.beta), 2) ==
            doctest::Approx(connection(p, q, phi)).epsilon(1e-7));
    }
  }
}

TEST_CASE("phi loop integral") {
  const ModelParams p(1, 10.0, 1.0);
  CHECK(phi_loop_integral(p, 0.0) == 0.0);
  CHECK(std::abs(phi_loop_integral(ModelParams(4, 10.0, 0.0), 3.0)) < 1e-15);

  const double closed = kPi * (1.0 - 10.0 / std::sqrt(120.0));
  CHECK(closed == doctest::Approx(0.273724048817055));
  CHECK(std::abs(phi_loop_integral(p, 1.0)) ==
        doctest::Approx(closed).epsilon(1e-12));

  // Sign fixed once: the loop integral is -N pi (1 - D/E(q)).
  for (int n : {1, 7, 300}) {
    for (double a : {0.3, 1.0, 2.5}) {
      const ModelParams pp(n, 10.0, a);
      for (double q : {-20.0, -1.0, 0.5, 4.0, 35.0}) {
        const double expected = -n * kPi * (1.0 - 10.0 / adiabatic_energy(pp, q));
        const double got = phi_loop_integral(pp, q);
        CHECK(std::abs(got - expected) < 1e-10 * std::max(1.0, std::abs(expected)));
        const double ref = simpson(
            [&](double phi) { return connection(pp, q, phi); }, 0.0, 2 * kPi,
            1e-13);
        CHECK(std::abs(got - ref) < 1e-8 * std::max(1.0, std::abs(ref)));
      }
    }
  }
}

TEST_CASE("sx_mean and berry_phase at zero coupling") {
  const ModelParams p(4, 10.0, 0.0);
  const BerryResult b = berry_phase(p);
  CHECK(b.sx_per_n == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(std::abs(b.gamma) < 1e-12);
  CHECK(std::abs(berry_phase_direct(p, b.spectral.wavefunction)) < 1e-12);
}

TEST_CASE("berry_phase definitional identity and bounds") {
  for (int n : {1, 4, 16}) {
    for (double a : {0.25, 1.0, 1.75, 3.0}) {
      const ModelParams p(n, 10.0, a);
      const BerryResult b = berry_phase(p);
      CHECK(std::abs(b.gamma - n * kPi * (1.0 + b.sx_per_n)) < 1e-13 * n);
      CHECK(b.gamma_per_n >= 0.0);
      CHECK(b.gamma_per_n < kPi);
      CHECK(b.sx_per_n >= -1.0);
      CHECK(b.sx_per_n < 0.0);
    }
  }
}

TEST_CASE("berry_phase against frozen independent solves") {
  // Reference values from an independent dense-grid solve (h = 0.002,
  // LAPACK tridiagonal eigensolver).
  const BerryResult crit = berry_phase(ModelParams(10, 10.0, 1.0));
  CHECK(std::abs(crit.sx_per_n - (-0.979732)) < 2e-6);
  CHECK(std::abs(crit.gamma_per_n - 0.063675) < 5e-6);
  CHECK(std::abs(crit.spectral.energy - (-49.91182)) < 1e-5);

  const BerryResult big = berry_phase(ModelParams(4096, 10.0, 2.0));
  CHECK(std::abs(big.gamma_per_n - kPi / 2) < 1e-3);
  CHECK(std::abs(big.sx_per_n - (-0.5)) < 2e-4);
}

TEST_CASE("direct quadrature route agrees with the reduced formula") {
  for (auto [n, a] : {std::pair{10, 1.0}, std::pair{64, 2.0}, std::pair{4, 0.5}}) {
    const ModelParams p(n, 10.0, a);
    const BerryResult b = berry_phase(p);
    const double direct = berry_phase_direct(p, b.spectral.wavefunction);
    CHECK(std::abs(direct - b.gamma) <= 1e-6 * n);
  }
}

TEST_CASE("gamma/N is non-decreasing in alpha") {
  double prev = -1.0;
  for (int i = 0; i <= 60; ++i) {
    const double a = 0.05 * i;
    const double g = berry_phase(ModelParams(4, 10.0, a)).gamma_per_n;
    CHECK(g >= prev - 1e-9);
    prev = g;
  }
}

TEST_CASE("finite-size deviation shrinks with N") {
  for (double a : {0.5, 2.0}) {
    double prev = 1e9;
    for (int n : {64, 256, 1024}) {
      const double dev =
          std::abs(berry_phase(ModelParams(n, 10.0, a)).gamma_per_n - thermo_berry(a));
      CHECK(dev < prev);
      prev = dev;
    }
  }
}

TEST_CASE("berry_derivative") {
  SUBCASE("constant input") {
    std::vector<SweepRecord> s;
    for (int i = 0; i < 5; ++i) s.push_back(record(4, 0.1 * i, 0.7));
    for (double d : berry_derivative(s)) CHECK(d == doctest::Approx(0.0));
  }
  SUBCASE("thermodynamic curve jumps from 0 to pi at alpha = 1") {
    std::vector<SweepRecord> s;
    const double step = 1e-4;
    for (int i = -3; i <= 3; ++i) {
      const double a = 1.0 + step * i;
      s.push_back(record(0, a, thermo_berry(a)));
    }
    const auto d = berry_derivative(s);
    CHECK(d[1] == doctest::Approx(0.0));
    CHECK(d[5] == doctest::Approx(kPi / std::pow(1.0 + 2 * step, 2)).epsilon(1e-6));
  }
  SUBCASE("small-alpha slope is about pi / (2 N D)") {
    std::vector<SweepRecord> s;
    for (int i = 0; i <= 4; ++i) {
      const double a = 0.02 * i;
      const BerryResult b = berry_phase(ModelParams(64, 10.0, a));
      s.push_back(record(64, a, b.gamma_per_n));
    }
    const auto d = berry_derivative(s);
    const double slope = kPi / (2.0 * 64 * 10.0);
    CHECK(d[0] > 0.0);
    CHECK(d[2] == doctest::Approx(slope).epsilon(0.05));
  }
  SUBCASE("error paths") {
    std::vector<SweepRecord> s = {record(4, 0.0, 0.0), record(4, 0.1, 0.0),
                                  record(4, 0.3, 0.0)};
    CHECK_THROWS_AS(berry_derivative(s), InvalidParameter);
    s = {record(4, 0.0, 0.0), record(8, 0.1, 0.0)};
    CHECK_THROWS_AS(berry_derivative(s), InvalidParameter);
    s = {record(4, 0.0, 0.0)};
    CHECK_THROWS_AS(berry_derivative(s), InvalidParameter);
  }
}
