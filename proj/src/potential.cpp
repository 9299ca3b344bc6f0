#include "dwell/potential.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dwell/errors.hpp"
#include "dwell/numerics.hpp"

namespace dwell {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kQuarticSlope = 0.14433756729740644823; // 1/(4 sqrt 3)
constexpr double kHbar = 1.054571817e-34;

double quartic_raw(double alpha, double x) {
  return -x * x / 4.0 + x * x * x * x / 96.0 + alpha * x * kQuarticSlope;
}

} // namespace

Potential Potential::quartic(double alpha) {
  Potential p;
  p.kind_ = PotentialKind::quartic;
  p.alpha_ = alpha;
  p.units_ = {0.5, "hbar_omega", "l_ho"};
  p.domain_ = {-8.0, 8.0};
  p.fixed_domain_ = false;
  // C(alpha): lift the deeper minimum to zero; minima sit near +-2*sqrt(3)
  auto raw = [alpha](double x) { return quartic_raw(alpha, x); };
  const double m1 = num::find_min(raw, -7.0, -0.5).second;
  const double m2 = num::find_min(raw, 0.5, 7.0).second;
  p.c_alpha_ = -std::min(m1, m2);
  return p;
}

Potential Potential::lattice(double depth, double xi, double tilt) {
  Potential p;
  p.kind_ = PotentialKind::lattice;
  p.depth_ = depth;
  p.xi_ = xi;
  p.tilt_ = tilt;
  p.units_ = {1.0, "E_R", "1/k"};
  p.domain_ = {0.0, kTwoPi};
  p.fixed_domain_ = true;
  return p;
}

Potential Potential::double_oscillator(double eps, double separation) {
  if (eps < 0.0 || separation < 0.0)
    fail(errc::domain_error, "double_oscillator: eps and separation must be >= 0");
  Potential p;
  p.kind_ = PotentialKind::double_oscillator;
  p.eps_ = eps;
  p.sep_ = separation;
  p.b_prime_ = std::sqrt(separation * separation + 2.0 * eps);
  p.units_ = {0.5, "hbar_omega", "l_ho"};
  p.domain_ = {-p.b_prime_ - 9.0, separation + 9.0};
  p.fixed_domain_ = false;
  return p;
}

Potential Potential::tabulated(std::vector<double> x, std::vector<double> v,
                               NaturalUnits units) {
  if (x.size() != v.size())
    fail(errc::config_error, "tabulated: x and v lengths differ");
  if (x.size() < 200)
    fail(errc::structure_error, "tabulated: need at least 200 samples");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] > x[i - 1]))
      fail(errc::structure_error, "tabulated: x grid must be strictly increasing");
  Potential p;
  p.kind_ = PotentialKind::tabulated;
  p.units_ = units;
  p.domain_ = {x.front(), x.back()};
  p.fixed_domain_ = true;
  // natural cubic spline second derivatives
  const std::size_t n = x.size();
  std::vector<double> u(n, 0.0), y2(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double sig = (x[i] - x[i - 1]) / (x[i + 1] - x[i - 1]);
    const double pdenom = sig * y2[i - 1] + 2.0;
    y2[i] = (sig - 1.0) / pdenom;
    const double slope =
        (v[i + 1] - v[i]) / (x[i + 1] - x[i]) - (v[i] - v[i - 1]) / (x[i] - x[i - 1]);
    u[i] = (6.0 * slope / (x[i + 1] - x[i - 1]) - sig * u[i - 1]) / pdenom;
  }
  for (std::size_t ii = n - 1; ii-- > 0;) y2[ii] = y2[ii] * y2[ii + 1] + u[ii];
  p.tx_ = std::move(x);
  p.tv_ = std::move(v);
  p.tv2_ = std::move(y2);
  return p;
}

void Potential::check_domain(double x) const {
  if (x < domain_.first - 1e-12 || x > domain_.second + 1e-12)
    fail(errc::domain_error, "potential evaluated outside its domain at x = " +
                                 std::to_string(x));
}

double Potential::operator()(double x) const {
  check_domain(x);
  switch (kind_) {
  case PotentialKind::quartic:
    return quartic_raw(alpha_, x) + c_alpha_;
  case PotentialKind::lattice: {
    const double c = std::cos(x) + 0.25 * xi_;
    return depth_ * c * c + tilt_ * x;
  }
  case PotentialKind::double_oscillator: {
    if (x < 0.0) {
      const double u = (x + b_prime_) / std::sqrt(2.0);
      return u * u;
    }
    const double u = (x - sep_) / std::sqrt(2.0);
    return u * u + eps_;
  }
  case PotentialKind::tabulated: {
    const auto it = std::upper_bound(tx_.begin(), tx_.end(), x);
    std::size_t hi = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - tx_.begin(), 1),
                                           tx_.size() - 1);
    const std::size_t lo = hi - 1;
    const double h = tx_[hi] - tx_[lo];
    const double a = (tx_[hi] - x) / h;
    const double b = (x - tx_[lo]) / h;
    return a * tv_[lo] + b * tv_[hi] +
           ((a * a * a - a) * tv2_[lo] + (b * b * b - b) * tv2_[hi]) * h * h / 6.0;
  }
  }
  return 0.0;
}

double Potential::derivative(double x) const {
  check_domain(x);
  switch (kind_) {
  case PotentialKind::quartic:
    return -x / 2.0 + x * x * x / 24.0 + alpha_ * kQuarticSlope;
  case PotentialKind::lattice:
    return -2.0 * depth_ * (std::cos(x) + 0.25 * xi_) * std::sin(x) + tilt_;
  case PotentialKind::double_oscillator:
    return (x < 0.0) ? (x + b_prime_) : (x - sep_);
  case PotentialKind::tabulated: {
    const auto it = std::upper_bound(tx_.begin(), tx_.end(), x);
    std::size_t hi = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - tx_.begin(), 1),
                                           tx_.size() - 1);
    const std::size_t lo = hi - 1;
    const double h = tx_[hi] - tx_[lo];
    const double a = (tx_[hi] - x) / h;
    const double b = (x - tx_[lo]) / h;
    return (tv_[hi] - tv_[lo]) / h -
           (3.0 * a * a - 1.0) / 6.0 * h * tv2_[lo] +
           (3.0 * b * b - 1.0) / 6.0 * h * tv2_[hi];
  }
  }
  return 0.0;
}

double Potential::second_derivative(double x) const {
  check_domain(x);
  switch (kind_) {
  case PotentialKind::quartic:
    return -0.5 + x * x / 8.0;
  case PotentialKind::lattice:
    return -2.0 * depth_ * (std::cos(2.0 * x) + 0.25 * xi_ * std::cos(x));
  case PotentialKind::double_oscillator:
    return 1.0; // both branches; undefined exactly at the x = 0 kink
  case PotentialKind::tabulated: {
    const auto it = std::upper_bound(tx_.begin(), tx_.end(), x);
    std::size_t hi = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - tx_.begin(), 1),
                                           tx_.size() - 1);
    const std::size_t lo = hi - 1;
    const double h = tx_[hi] - tx_[lo];
    const double a = (tx_[hi] - x) / h;
    const double b = (x - tx_[lo]) / h;
    return a * tv2_[lo] + b * tv2_[hi];
  }
  }
  return 0.0;
}

double WellAnalysis::length_left() const {
  return std::sqrt(2.0 * kinetic_coefficient / omega_left);
}

double WellAnalysis::length_right() const {
  return std::sqrt(2.0 * kinetic_coefficient / omega_right);
}

namespace {

// Refine a stationary point inside [lo, hi] where V' changes sign.
double stationary_point(const Potential& p, double lo, double hi) {
  auto dv = [&p](double x) { return p.derivative(x); };
  if (p.kind() == PotentialKind::quartic || p.kind() == PotentialKind::lattice) {
    auto d2v = [&p](double x) { return p.second_derivative(x); };
    return num::newton_bracketed(dv, d2v, lo, hi, 1e-10 * 1e-2, 1e-15);
  }
  return num::find_root(dv, lo, hi, 1e-14);
}

// Scan [lo, hi] for sign changes of V'; returns stationary points in order.
std::vector<double> scan_stationary(const Potential& p, double lo, double hi, int samples) {
  std::vector<double> roots;
  double xp = lo, fp = p.derivative(lo);
  for (int i = 1; i <= samples; ++i) {
    const double x = lo + (hi - lo) * i / samples;
    const double f = p.derivative(x);
    if (fp == 0.0) roots.push_back(xp);
    else if ((fp > 0) != (f > 0)) roots.push_back(stationary_point(p, xp, x));
    xp = x;
    fp = f;
  }
  return roots;
}

} // namespace

WellAnalysis analyze_wells(const Potential& p) {
  WellAnalysis w;
  w.kinetic_coefficient = p.units().kinetic_coefficient;

  if (p.kind() == PotentialKind::double_oscillator) {
    // closed form: minima at -b' and a, kink-top at 0
    if (p.dosc_separation() == 0.0 && p.dosc_epsilon() == 0.0)
      fail(errc::structure_error, "analyze_wells: single harmonic well (a = eps = 0)");
    w.left_min = -p.dosc_left_center();
    w.right_min = p.dosc_separation();
    w.barrier_top = 0.0;
    const double kappa = p.units().kinetic_coefficient;
    w.omega_left = std::sqrt(2.0 * kappa * 1.0);
    w.omega_right = w.omega_left;
    w.epsilon = p.dosc_epsilon() / w.omega_right;
    w.barrier_over_left = p(0.0);
    w.barrier_over_right = p(0.0) - p.dosc_epsilon();
    if (!(w.barrier_over_right > 0.0))
      fail(errc::structure_error, "analyze_wells: barrier does not rise above right well");
    return w;
  }

  const auto [lo, hi] = p.domain();
  const double margin = (hi - lo) * 1e-6;
  const auto pts = scan_stationary(p, lo + margin, hi - margin, 2400);
  std::vector<double> minima, maxima;
  for (double x : pts) {
    const double v2 = p.second_derivative(x);
    if (v2 > 0.0)
      minima.push_back(x);
    else if (v2 < 0.0)
      maxima.push_back(x);
  }
  // keep only the maximum between the two minima
  if (minima.size() != 2)
    fail(errc::structure_error, "analyze_wells: expected exactly 2 minima, found " +
                                    std::to_string(minima.size()));
  std::vector<double> inner;
  for (double x : maxima)
    if (x > minima[0] && x < minima[1]) inner.push_back(x);
  if (inner.size() != 1)
    fail(errc::structure_error, "analyze_wells: expected exactly 1 interior maximum, found " +
                                    std::to_string(inner.size()));

  const double kappa = p.units().kinetic_coefficient;
  w.left_min = minima[0];
  w.right_min = minima[1];
  w.barrier_top = inner[0];
  w.omega_left = std::sqrt(2.0 * kappa * p.second_derivative(w.left_min));
  w.omega_right = std::sqrt(2.0 * kappa * p.second_derivative(w.right_min));
  w.epsilon = (p(w.right_min) - p(w.left_min)) / w.omega_right;
  w.barrier_over_left = p(w.barrier_top) - p(w.left_min);
  w.barrier_over_right = p(w.barrier_top) - p(w.right_min);
  return w;
}

double gravity_tilt_ratio(double mass_kg, double wavelength_m, double g_accel) {
  if (mass_kg <= 0.0 || wavelength_m <= 0.0 || g_accel <= 0.0)
    fail(errc::domain_error, "gravity_tilt_ratio: inputs must be positive");
  const double k = kTwoPi / wavelength_m;
  const double recoil = (kHbar * k) * (kHbar * k) / (2.0 * mass_kg);
  return mass_kg * g_accel * wavelength_m / 2.0 / recoil;
}

double lattice_tilt_parameter(double mass_kg, double wavelength_m, double g_accel) {
  return gravity_tilt_ratio(mass_kg, wavelength_m, g_accel) / (0.5 * kTwoPi);
}

} // namespace dwell
