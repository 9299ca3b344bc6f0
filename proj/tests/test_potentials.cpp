#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <tuple>
#include <vector>

#include "dwell/errors.hpp"
#include "dwell/potential.hpp"

using namespace dwell;

namespace {

// independent bisection on V' for the well-location oracle
double bisect_stationary(const Potential& p, double lo, double hi) {
  double flo = p.derivative(lo);
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (lo + hi);
    const double fm = p.derivative(m);
    if ((fm > 0) == (flo > 0)) {
      lo = m;
      flo = fm;
    } else {
      hi = m;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("quartic: closed-form geometry at alpha = 0") {
  auto p = Potential::quartic(0.0);
  const double a = 2.0 * std::sqrt(3.0);
  CHECK(p(a) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p(-a) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p(0.0) == doctest::Approx(1.5).epsilon(1e-12)); // barrier height 3/2
  CHECK(p.quartic_offset() == doctest::Approx(1.5).epsilon(1e-10));

  auto w = analyze_wells(p);
  CHECK(w.right_min == doctest::Approx(a).epsilon(1e-10));
  CHECK(w.left_min == doctest::Approx(-a).epsilon(1e-10));
  CHECK(std::abs(w.barrier_top) < 1e-9);
  CHECK(w.omega_left == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(w.omega_right == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(w.epsilon) < 1e-10);
  CHECK(w.barrier_over_right == doctest::Approx(1.5).epsilon(1e-10));
  CHECK(std::abs(p.derivative(w.right_min)) <= 1e-10);
  CHECK(std::abs(p.derivative(w.left_min)) <= 1e-10);
}

TEST_CASE("quartic: minimum is pinned to zero across the alpha range") {
  for (double alpha = 0.0; alpha <= 1.2 + 1e-12; alpha += 0.1) {
    auto p = Potential::quartic(alpha);
    auto w = analyze_wells(p);
    const double vmin = std::min(p(w.left_min), p(w.right_min));
    CHECK(std::abs(vmin) <= 1e-10);
    CHECK(w.epsilon >= 0.0); // right bottom is the lifted one
  }
}

TEST_CASE("quartic: alpha0 = 0.985 well geometry against the bisection oracle") {
  auto p = Potential::quartic(0.985);
  auto w = analyze_wells(p);
  const double a_o = bisect_stationary(p, 1.0, 6.0);
  const double b_o = bisect_stationary(p, -6.0, -1.0);
  const double c_o = bisect_stationary(p, -1.0, 1.0);
  CHECK(w.right_min == doctest::Approx(a_o).epsilon(1e-10));
  CHECK(w.left_min == doctest::Approx(b_o).epsilon(1e-10));
  CHECK(w.barrier_top == doctest::Approx(c_o).epsilon(1e-10));
  // frozen regression values (independent high-precision root-finding)
  CHECK(w.right_min == doctest::Approx(3.3120666029693).epsilon(1e-9));
  CHECK(w.left_min == doctest::Approx(-3.59836723598756).epsilon(1e-9));
  CHECK(w.barrier_top == doctest::Approx(0.286300633018264).epsilon(1e-8));
  CHECK(w.epsilon * w.omega_right == doctest::Approx(0.984162958674602).epsilon(1e-8));
  CHECK(w.omega_left == doctest::Approx(1.05760618645533).epsilon(1e-9));
  CHECK(w.omega_right == doctest::Approx(0.933393351065387).epsilon(1e-9));
}

TEST_CASE("analyze_wells: curvature refit property for closed forms") {
  // refit a parabola around each minimum; omega from the fit should match the
  // analytic curvature
  for (auto p : {Potential::quartic(0.3), Potential::lattice(10.0, 0.5, 0.1)}) {
    auto w = analyze_wells(p);
    const double kappa = p.units().kinetic_coefficient;
    for (auto [x0, omega, l] :
         {std::tuple{w.left_min, w.omega_left, w.length_left()},
          std::tuple{w.right_min, w.omega_right, w.length_right()}}) {
      const double d = 0.1 * l;
      const double v2b = (-p(x0 + 2 * d) + 16 * p(x0 + d) - 30 * p(x0) + 16 * p(x0 - d) -
                          p(x0 - 2 * d)) /
                         (12 * d * d);
      CHECK(std::sqrt(2.0 * kappa * v2b) == doctest::Approx(omega).epsilon(1e-6));
    }
  }
}

TEST_CASE("lattice: untilted cell is symmetric about the inner barrier") {
  auto p = Potential::lattice(10.0, 0.5, 0.0);
  auto w = analyze_wells(p);
  const double pi = 3.14159265358979323846;
  CHECK(w.barrier_top == doctest::Approx(pi).epsilon(1e-10));
  for (double d = 0.1; d < 1.4; d += 0.1)
    CHECK(p(w.barrier_top + d) == doctest::Approx(p(w.barrier_top - d)).epsilon(1e-12));
  // minima at cos u = -xi/4 with V = 0 (the cell constant zeroes the bottoms)
  CHECK(p(w.left_min) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p(w.right_min) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(w.left_min == doctest::Approx(std::acos(-0.125)).epsilon(1e-10));
}

TEST_CASE("double oscillator: value continuity and slope kink at x = 0") {
  for (double eps : {0.0, 0.3, 0.5}) {
    for (double a : {0.5, 2.0, 4.0}) {
      if (eps == 0.0 && a == 0.0) continue;
      auto p = Potential::double_oscillator(eps, a);
      const double bp = p.dosc_left_center();
      // value continuity: V(0) = b'^2/2 = a^2/2 + eps from both sides
      CHECK(p(0.0) == doctest::Approx(0.5 * a * a + eps).epsilon(1e-12));
      CHECK(p(-1e-12) == doctest::Approx(p(1e-12)).epsilon(1e-9));
      // one-sided slopes (the kink is intrinsic to the glued parabolas)
      CHECK(p.derivative(-1e-9) == doctest::Approx(bp).epsilon(1e-6));
      CHECK(p.derivative(+1e-9) == doctest::Approx(-a).epsilon(1e-6));
      CHECK(p(-bp) == doctest::Approx(0.0));
      CHECK(p(a) == doctest::Approx(eps).epsilon(1e-12));
    }
  }
  // eps = 0.5, a = 0 gives V(0) = eps
  auto p0 = Potential::double_oscillator(0.5, 0.0);
  CHECK(p0(0.0) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("double oscillator: analyzed geometry") {
  auto p = Potential::double_oscillator(0.3, 3.0);
  auto w = analyze_wells(p);
  CHECK(w.right_min == doctest::Approx(3.0));
  CHECK(w.left_min == doctest::Approx(-std::sqrt(9.0 + 0.6)).epsilon(1e-12));
  CHECK(w.barrier_top == 0.0);
  CHECK(w.omega_left == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(w.omega_right == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(w.epsilon == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("tabulated: round-trips a closed form and enforces structure") {
  auto q = Potential::quartic(0.4);
  std::vector<double> xs, vs;
  const int n = 600;
  for (int i = 0; i < n; ++i) {
    const double x = -8.0 + 16.0 * i / (n - 1);
    xs.push_back(x);
    vs.push_back(q(x));
  }
  auto t = Potential::tabulated(xs, vs);
  for (double x = -7.0; x <= 7.0; x += 0.37)
    CHECK(t(x) == doctest::Approx(q(x)).epsilon(1e-7));
  auto wq = analyze_wells(q);
  auto wt = analyze_wells(t);
  CHECK(wt.right_min == doctest::Approx(wq.right_min).epsilon(1e-5));
  CHECK(wt.omega_right == doctest::Approx(wq.omega_right).epsilon(1e-4));
  CHECK(wt.epsilon == doctest::Approx(wq.epsilon).epsilon(1e-3));

  // too few samples is a structure error
  std::vector<double> fx(xs.begin(), xs.begin() + 100), fv(vs.begin(), vs.begin() + 100);
  CHECK_THROWS_AS(Potential::tabulated(fx, fv), Error);
  // non-monotone grid
  auto bad_x = xs;
  std::swap(bad_x[10], bad_x[11]);
  CHECK_THROWS_AS(Potential::tabulated(bad_x, vs), Error);
}

TEST_CASE("structure errors: wrong minima count") {
  // strongly tilted lattice merges the wells
  auto p = Potential::lattice(10.0, 0.5, 40.0);
  CHECK_THROWS_AS(analyze_wells(p), Error);
  // single harmonic well
  CHECK_THROWS_AS(analyze_wells(Potential::double_oscillator(0.0, 0.0)), Error);
}

TEST_CASE("domain enforcement") {
  auto p = Potential::lattice(10.0, 0.5, 0.0);
  CHECK_THROWS_AS(p(-1.0), Error);
  CHECK_THROWS_AS(p(7.0), Error);
}

TEST_CASE("gravity tilt ratio: cesium and scaling") {
  const double u = 1.66053906660e-27;
  const double ratio = gravity_tilt_ratio(132.905 * u, 811e-9, 9.80);
  CHECK(ratio == doctest::Approx(0.580).epsilon(0.002 / 0.580));
  CHECK(ratio == doctest::Approx(0.5799057493).epsilon(1e-9)); // frozen
  // m -> 2m at fixed lambda, g: ratio scales by 4 (E_R ~ 1/m, numerator ~ m)
  const double r2 = gravity_tilt_ratio(2.0 * 132.905 * u, 811e-9, 9.80);
  CHECK(r2 == doctest::Approx(4.0 * ratio).epsilon(1e-12));
  // rubidium-87 regression value (direct arithmetic from constants)
  const double rb = gravity_tilt_ratio(86.909180531 * u, 811e-9, 9.80);
  CHECK(rb == doctest::Approx(0.247973964196).epsilon(1e-9));
  CHECK_THROWS_AS(gravity_tilt_ratio(-1.0, 811e-9, 9.8), Error);
}
