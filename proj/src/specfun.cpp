#include "dwell/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "dwell/errors.hpp"

namespace dwell::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;

bool is_nonneg_integer(double x) { return x >= 0.0 && x == std::floor(x); }

// Lanczos, g = 7, 9 coefficients.
double lanczos_gamma_pos(double x) {
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,     676.5203681218851,    -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,  12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  // x >= 0.5
  const double z = x - 1.0;
  double a = c[0];
  for (int i = 1; i < 9; ++i) a += c[i] / (z + i);
  const double t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

} // namespace

double sinpi(double x) {
  const double r = x - std::round(x);
  const double s = std::sin(kPi * r);
  return (static_cast<long long>(std::llround(x - r)) % 2 != 0) ? -s : s;
}

double cospi(double x) {
  const double r = x - std::round(x);
  const double c = std::cos(kPi * r);
  return (static_cast<long long>(std::llround(x - r)) % 2 != 0) ? -c : c;
}

double gamma(double x) {
  if (x <= 0.0 && x == std::floor(x))
    fail(errc::pole_error, "gamma: pole at x = " + std::to_string(x));
  if (x >= 0.5) return lanczos_gamma_pos(x);
  // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x))
  return kPi / (sinpi(x) * lanczos_gamma_pos(1.0 - x));
}

double reciprocal_gamma(double x) {
  if (x >= 0.5) return 1.0 / lanczos_gamma_pos(x);
  return sinpi(x) * lanczos_gamma_pos(1.0 - x) / kPi;
}

double hermite(int n, double x) {
  double a = 1.0, b = 2.0 * x;
  if (n == 0) return a;
  for (int k = 1; k < n; ++k) {
    const double c = 2.0 * x * b - 2.0 * k * a;
    a = b;
    b = c;
  }
  return b;
}

double hermite_e(int n, double x) {
  double a = 1.0, b = x;
  if (n == 0) return a;
  for (int k = 1; k < n; ++k) {
    const double c = x * b - k * a;
    a = b;
    b = c;
  }
  return b;
}

double OscillatorEigenfunction::operator()(double x) const {
  return oscillator_eval(*this, x);
}

double oscillator_eval(const OscillatorEigenfunction& f, double x) {
  const double y = (x - f.center) / f.length;
  const double gauss = std::exp(-0.5 * y * y);
  // normalized Hermite-function recurrence: stable for k <= 30
  double h0 = std::pow(kPi, -0.25) * gauss;
  if (f.index == 0) return h0 / std::sqrt(f.length);
  double h1 = std::sqrt(2.0) * y * h0;
  for (int k = 1; k < f.index; ++k) {
    const double h2 = std::sqrt(2.0 / (k + 1.0)) * y * h1 - std::sqrt(k / (k + 1.0)) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1 / std::sqrt(f.length);
}

// ---------------------------------------------------------------------------
// Parabolic cylinder function machinery.
//
// Regions (validated against an mpmath reference over |nu|<=20, |z|<=40):
//  - exact non-negative integer nu: Hermite closed form
//  - nu <= -1, z >= 0: Gamma integral representation (series cancellation is
//    catastrophic there)
//  - |z| <= zs(nu): Taylor series about 0, zs shrinking with nu to bound the
//    oscillatory-series roundoff
//  - z > zs: scaled ODE continuation inward from an asymptotic start
//  - z < -zs: exact connection D_nu(-Z) = cos(nu pi) D_nu(Z) + G(Z) with the
//    growing solution G integrated outward from closed-form initial data
// ---------------------------------------------------------------------------

namespace {

double series_radius(double nu) {
  return std::min(4.5, 9.5 / std::sqrt(std::max(nu, 0.0) + 1.5));
}

double d_at_zero(double nu) { // D_nu(0)
  return std::pow(2.0, 0.5 * nu) * kSqrtPi * reciprocal_gamma(0.5 * (1.0 - nu));
}

double dprime_at_zero(double nu) { // D_nu'(0)
  return -std::pow(2.0, 0.5 * (nu + 1.0)) * kSqrtPi * reciprocal_gamma(-0.5 * nu);
}

// Taylor expansion of the Weber equation D'' = (z^2/4 - nu - 1/2) D about 0,
// for the solution with D(0)=c0, D'(0)=c1, evaluated at z together with D'.
void weber_series_one(double nu, double z, double c0, double c1, double& s, double& ds) {
  constexpr int kMax = 400;
  std::array<double, kMax + 2> c{};
  c[0] = c0;
  c[1] = c1;
  s = c0 + c1 * z;
  ds = c1;
  double zk = z; // z^(k+1)
  int consecutive_small = 0;
  for (int k = 0; k < kMax; ++k) {
    const double cm2 = (k >= 2) ? c[k - 2] : 0.0;
    const double ck2 = (0.25 * cm2 - (nu + 0.5) * c[k]) / ((k + 2.0) * (k + 1.0));
    c[k + 2] = ck2;
    zk *= z; // z^(k+2)
    const double term = ck2 * zk;
    s += term;
    ds += (k + 2.0) * ck2 * (z != 0.0 ? zk / z : (k + 1 == 0 ? 1.0 : 0.0));
    const double floor = 1e-18 * std::max(1e-300, std::abs(s));
    if (std::abs(term) < floor)
      ++consecutive_small;
    else
      consecutive_small = 0;
    if (k > 10 && consecutive_small >= 4) break;
  }
}

void weber_series(double nu, double z, double& d, double& dp) {
  double s1, ds1, s2, ds2;
  weber_series_one(nu, z, 1.0, 0.0, s1, ds1);
  weber_series_one(nu, z, 0.0, 1.0, s2, ds2);
  const double a = d_at_zero(nu), b = dprime_at_zero(nu);
  d = a * s1 + b * s2;
  dp = a * ds1 + b * ds2;
}

// One Taylor step for u'' = alpha z u' + delta u, expanded about z0.
void taylor_step(double& u, double& du, double z0, double h, double alpha, double delta) {
  constexpr int K = 30;
  std::array<double, K + 2> c{};
  c[0] = u;
  c[1] = du;
  for (int k = 0; k < K; ++k) {
    c[k + 2] = (alpha * (z0 * (k + 1.0) * c[k + 1] + k * c[k]) + delta * c[k]) /
               ((k + 2.0) * (k + 1.0));
  }
  double s = 0.0, ds = 0.0;
  for (int k = K + 1; k >= 1; --k) {
    s = s * h + c[k];
    ds = ds * h + k * c[k];
  }
  s = s * h + c[0];
  u = s;
  du = ds;
}

// Integrate u'' = alpha z u' + delta u from z0 to z1.
void ode_integrate(double& u, double& du, double z0, double z1, double alpha, double delta) {
  const double freq = std::sqrt(std::abs(delta)) + 2.0;
  double z = z0;
  const double sgn = (z1 >= z0) ? 1.0 : -1.0;
  while (std::abs(z1 - z) > 1e-14) {
    const double h = sgn * std::min(std::abs(z1 - z), 3.2 / std::max(freq, std::abs(z)));
    taylor_step(u, du, z, h, alpha, delta);
    z += h;
    if (!std::isfinite(u))
      fail(errc::overflow_error, "pcf_d: scaled ODE continuation overflowed");
  }
}

// Asymptotic series S1 of D_nu(z) ~ e^{-z^2/4} z^nu S1 for large z > 0; fills
// the scaled pair w = z^nu S1, w' (w = D e^{+z^2/4}).
void asym_scaled_pair(double nu, double z, double& w, double& dw) {
  double c = 1.0, s = 1.0, sp = 0.0;
  for (int k = 0; k < 60; ++k) {
    const double c2 = -c * (nu - 2.0 * k) * (nu - 2.0 * k - 1.0) / (2.0 * (k + 1.0));
    const double term = c2 * std::pow(z, -2.0 * (k + 1.0));
    if (k > 3 && std::abs(term) > std::abs(c * std::pow(z, -2.0 * k))) break; // divergent tail
    s += term;
    sp += -2.0 * (k + 1.0) * c2 * std::pow(z, -2.0 * (k + 1.0) - 1.0);
    c = c2;
    if (std::abs(term) < 1e-18 * std::abs(s)) break;
  }
  const double zn = std::pow(z, nu);
  w = zn * s;
  dw = nu * std::pow(z, nu - 1.0) * s + zn * sp;
}

// Gamma integral representation for nu <= -1, z >= 0:
//   D_nu(z) = e^{-z^2/4}/Gamma(-nu) * Int_0^inf t^beta e^{-t^2/2 - z t} dt,
// beta = -nu-1 >= 0. Positive integrand, no cancellation.
double integral_rep_core(double beta, double z);

PcfPair integral_rep_pair(double nu, double z) {
  const double beta = -nu - 1.0;
  // Raise the endpoint exponent with the exact ladder
  //   I(b) = [I(b+2) + z I(b+1)] / (b+1)
  // so the quadrature only ever sees a smooth integrand (b >= 4).
  int lift = 0;
  while (beta + lift < 4.0) ++lift;
  std::vector<double> ladder(lift + 2);
  ladder[lift] = integral_rep_core(beta + lift, z);
  ladder[lift + 1] = integral_rep_core(beta + lift + 1.0, z);
  for (int j = lift - 1; j >= 0; --j) {
    const double b = beta + j;
    const double next2 = (j + 2 <= lift + 1) ? ladder[j + 2]
                                             : integral_rep_core(b + 2.0, z);
    ladder[j] = (next2 + z * ladder[j + 1]) / (b + 1.0);
  }
  const double i0 = ladder[0];
  const double i1 = (lift >= 1) ? ladder[1] : integral_rep_core(beta + 1.0, z);
  const double e = std::exp(-0.25 * z * z);
  const double d = e * reciprocal_gamma(-nu) * i0;
  const double dm1 = e * reciprocal_gamma(-nu + 1.0) * i1;
  // D'_nu(z) = -(z/2) D_nu(z) + nu D_{nu-1}(z)
  return {d, -0.5 * z * d + nu * dm1};
}

double integral_rep_core(double beta, double z) {
  // Composite adaptive Simpson over a window around the integrand peak.
  const double tstar = (beta > 0.0) ? 0.5 * (-z + std::sqrt(z * z + 4.0 * beta)) : 0.0;
  const double width = 14.0 * std::sqrt(1.0 + tstar) + 14.0;
  const double hi = tstar + width;
  auto f = [&](double t) {
    if (t <= 0.0) return (beta == 0.0 && t == 0.0) ? 1.0 : 0.0;
    return std::exp(beta * std::log(t) - 0.5 * t * t - z * t);
  };
  // simple fixed-refinement Simpson; integrand is smooth and single-peaked
  int n = 4000;
  double prev = 0.0;
  for (int pass = 0; pass < 6; ++pass, n *= 2) {
    const double h = hi / n;
    double acc = f(0.0) + f(hi);
    for (int i = 1; i < n; ++i) acc += f(i * h) * (i % 2 ? 4.0 : 2.0);
    const double val = acc * h / 3.0;
    if (pass > 0 && std::abs(val - prev) <= 1e-13 * std::abs(val)) return val;
    prev = val;
  }
  return prev;
}

PcfPair pcf_positive(double nu, double z) {
  // z >= 0, nu not an exact non-negative integer
  if (nu <= -1.0) return integral_rep_pair(nu, z);
  const double zs = series_radius(nu);
  if (z <= zs) {
    PcfPair r;
    weber_series(nu, z, r.value, r.derivative);
    return r;
  }
  const double za = std::max(z, 1.5 * std::abs(nu) + 12.0);
  double w, dw;
  asym_scaled_pair(nu, za, w, dw);
  ode_integrate(w, dw, za, z, 1.0, -nu); // w'' = z w' - nu w
  const double e = std::exp(-0.25 * z * z);
  return {e * w, e * (dw - 0.5 * z * w)};
}

} // namespace

PcfPair pcf_d_pair(double nu, double z) {
  if (!std::isfinite(nu) || !std::isfinite(z))
    fail(errc::domain_error, "pcf_d: non-finite argument");
  if (std::abs(nu) > 20.0 || std::abs(z) > 40.0)
    fail(errc::domain_error, "pcf_d: outside supported envelope |nu|<=20, |z|<=40");
  if (is_nonneg_integer(nu)) {
    const int n = static_cast<int>(nu);
    const double e = std::exp(-0.25 * z * z);
    const double h = hermite_e(n, z);
    const double dh = (n > 0) ? n * hermite_e(n - 1, z) : 0.0;
    return {e * h, e * (dh - 0.5 * z * h)};
  }
  if (z >= 0.0) return pcf_positive(nu, z);
  const double zcut = (nu > -1.0) ? series_radius(nu) : 0.0;
  if (-z <= zcut) {
    PcfPair r;
    weber_series(nu, z, r.value, r.derivative);
    return r;
  }
  // connection through the growing solution
  const double Z = -z;
  const double a0 = d_at_zero(nu), b0 = dprime_at_zero(nu);
  const double sh = sinpi(0.5 * nu), ch = cospi(0.5 * nu);
  double g = 2.0 * sh * sh * a0;   // G(0)
  double dg = -2.0 * ch * ch * b0; // G'(0)
  ode_integrate(g, dg, 0.0, Z, -1.0, -(nu + 1.0)); // g = G e^{-z^2/4}
  const double eZ = std::exp(0.25 * Z * Z);
  const double G = g * eZ;
  const double Gp = (dg + 0.5 * Z * g) * eZ;
  if (!std::isfinite(G) || !std::isfinite(Gp))
    fail(errc::overflow_error, "pcf_d: growing branch overflowed");
  const PcfPair pos = pcf_positive(nu, Z);
  const double c = cospi(nu);
  return {c * pos.value + G, -(c * pos.derivative + Gp)};
}

double pcf_d(double nu, double z) { return pcf_d_pair(nu, z).value; }

AsymptoticTerms pcf_d_asymptotic_negative(double eta, double z) {
  if (!(z < 0.0) || z * z < 25.0 * std::max(1.0, eta * eta))
    fail(errc::domain_error,
         "pcf_d_asymptotic_negative: validity gate z<0, z^2 >= 25*max(1,eta^2)");
  const double az = -z;
  // decaying piece: cos(eta pi) e^{-z^2/4} |z|^eta S1
  double c = 1.0, s1 = 1.0;
  for (int k = 0; k < 60; ++k) {
    const double c2 = -c * (eta - 2.0 * k) * (eta - 2.0 * k - 1.0) / (2.0 * (k + 1.0));
    const double term = c2 * std::pow(az, -2.0 * (k + 1.0));
    if (std::abs(term) > std::abs(c * std::pow(az, -2.0 * k))) break;
    s1 += term;
    c = c2;
    if (std::abs(term) < 1e-18 * std::abs(s1)) break;
  }
  // growing piece: sqrt(2 pi)/Gamma(-eta) e^{+z^2/4} |z|^{-eta-1} S2
  double d = 1.0, s2 = 1.0;
  for (int k = 0; k < 60; ++k) {
    const double d2 = d * (eta + 2.0 * k + 1.0) * (eta + 2.0 * k + 2.0) / (2.0 * (k + 1.0));
    const double term = d2 * std::pow(az, -2.0 * (k + 1.0));
    if (std::abs(term) > std::abs(d * std::pow(az, -2.0 * k))) break;
    s2 += term;
    d = d2;
    if (std::abs(term) < 1e-18 * std::abs(s2)) break;
  }
  AsymptoticTerms out;
  out.decaying = cospi(eta) * std::exp(-0.25 * z * z) * std::pow(az, eta) * s1;
  out.growing = std::sqrt(2.0 * kPi) * reciprocal_gamma(-eta) * std::exp(0.25 * z * z) *
                std::pow(az, -eta - 1.0) * s2;
  if (!std::isfinite(out.growing))
    fail(errc::overflow_error, "pcf_d_asymptotic_negative: growing term overflowed");
  return out;
}

} // namespace dwell::specfun
