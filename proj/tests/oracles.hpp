#pragma once

// Test-side oracles, deliberately independent of the library implementation
// paths they are used to check.

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

// --- Weber equation oracle --------------------------------------------------
// D'' + (nu + 1/2 - z^2/4) D = 0 integrated by classic RK4 with step halving,
// from initial data at z = 0 built with std::tgamma (not the library gamma).

inline void weber_rhs(double nu, double z, double y0, double y1, double& d0, double& d1) {
  d0 = y1;
  d1 = (0.25 * z * z - nu - 0.5) * y0;
}

inline void rk4_weber(double nu, double z0, double z1, int steps, double& y0, double& y1) {
  const double h = (z1 - z0) / steps;
  double z = z0;
  for (int i = 0; i < steps; ++i) {
    double k10, k11, k20, k21, k30, k31, k40, k41;
    weber_rhs(nu, z, y0, y1, k10, k11);
    weber_rhs(nu, z + 0.5 * h, y0 + 0.5 * h * k10, y1 + 0.5 * h * k11, k20, k21);
    weber_rhs(nu, z + 0.5 * h, y0 + 0.5 * h * k20, y1 + 0.5 * h * k21, k30, k31);
    weber_rhs(nu, z + h, y0 + h * k30, y1 + h * k31, k40, k41);
    y0 += h / 6.0 * (k10 + 2.0 * k20 + 2.0 * k30 + k40);
    y1 += h / 6.0 * (k11 + 2.0 * k21 + 2.0 * k31 + k41);
    z += h;
  }
}

inline double pcfd_ode(double nu, double z) {
  const double pi = 3.14159265358979323846;
  auto rg = [&](double x) { // 1/Gamma via std::tgamma with reflection
    if (x > 0.5) return 1.0 / std::tgamma(x);
    return std::sin(pi * x) * std::tgamma(1.0 - x) / pi;
  };
  double y0 = std::pow(2.0, 0.5 * nu) * std::sqrt(pi) * rg(0.5 * (1.0 - nu));
  double y1 = -std::pow(2.0, 0.5 * (nu + 1.0)) * std::sqrt(pi) * rg(-0.5 * nu);
  if (z == 0.0) return y0;
  // step-halving until two refinements agree
  int steps = static_cast<int>(std::abs(z) * 400) + 100;
  double a0 = y0, a1 = y1;
  rk4_weber(nu, 0.0, z, steps, a0, a1);
  for (int pass = 0; pass < 6; ++pass) {
    double b0 = y0, b1 = y1;
    rk4_weber(nu, 0.0, z, steps * 2, b0, b1);
    if (std::abs(b0 - a0) <= 1e-11 * std::max(1e-300, std::abs(b0))) return b0;
    a0 = b0;
    steps *= 2;
  }
  return a0;
}

// --- tanh-sinh quadrature ---------------------------------------------------
// Double-exponential rule on (a, b); handles integrable endpoint
// singularities without an explicit substitution.

inline double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-11) {
  const double pi_half = 1.57079632679489661923;
  const double c = 0.5 * (b - a), m = 0.5 * (b + a);
  double prev = 0.0;
  for (int level = 3; level <= 9; ++level) {
    const double h = 1.0 / (1 << level);
    double sum = 0.0;
    const int nmax = static_cast<int>(4.0 / h);
    for (int k = -nmax; k <= nmax; ++k) {
      const double t = k * h;
      const double sh = pi_half * std::sinh(t);
      const double x = std::tanh(sh);
      const double w = pi_half * std::cosh(t) / (std::cosh(sh) * std::cosh(sh));
      const double xx = m + c * x;
      if (xx <= a || xx >= b) continue;
      const double fx = f(xx);
      if (std::isfinite(fx)) sum += w * fx;
    }
    const double val = sum * h * c;
    if (level > 3 && std::abs(val - prev) <= rel_tol * std::abs(val)) return val;
    prev = val;
  }
  return prev;
}

// --- dense symmetric eigensolver (Jacobi) ------------------------------------

inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-24) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cs = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * cs;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = cs * akp - sn * akq;
          a[k][q] = sn * akp + cs * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = cs * apk - sn * aqk;
          a[q][k] = sn * apk + cs * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Sine-basis spectral eigenvalues of -kappa psi'' + V psi on [lo, hi] with
// Dirichlet walls: H_mn = kappa (n pi / L)^2 delta_mn + <m|V|n>.
inline std::vector<double> sine_spectral_eigenvalues(const std::function<double(double)>& V,
                                                     double kappa, double lo, double hi,
                                                     int basis, int quad_points = 4000) {
  const double pi = 3.14159265358979323846;
  const double L = hi - lo;
  std::vector<std::vector<double>> H(basis, std::vector<double>(basis, 0.0));
  const double h = L / quad_points;
  for (int q = 0; q <= quad_points; ++q) {
    const double x = lo + q * h;
    const double w = (q == 0 || q == quad_points) ? 0.5 * h : h;
    const double vx = V(x);
    std::vector<double> s(basis);
    for (int n = 0; n < basis; ++n)
      s[n] = std::sqrt(2.0 / L) * std::sin((n + 1) * pi * (x - lo) / L);
    for (int m = 0; m < basis; ++m)
      for (int n = m; n < basis; ++n) H[m][n] += w * vx * s[m] * s[n];
  }
  for (int m = 0; m < basis; ++m) {
    for (int n = m; n < basis; ++n) H[n][m] = H[m][n];
    const double kn = (m + 1) * pi / L;
    H[m][m] += kappa * kn * kn;
  }
  return jacobi_eigenvalues(std::move(H));
}

} // namespace oracle
