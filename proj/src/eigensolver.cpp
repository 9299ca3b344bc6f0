#include "dwell/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dwell/errors.hpp"
#include "dwell/numerics.hpp"

namespace dwell {

namespace {

struct GridEigen {
  std::vector<double> x;
  double dx;
  std::vector<double> energies;
  std::vector<std::vector<double>> vectors; // Euclidean-normalized
};

GridEigen diagonalize(const Potential& p, double lo, double hi, int n_interior, int states,
                      bool vectors) {
  GridEigen g;
  const double h = (hi - lo) / (n_interior + 1);
  g.dx = h;
  g.x.resize(n_interior);
  std::vector<double> diag(n_interior);
  const double kappa = p.units().kinetic_coefficient;
  const double t = kappa / (h * h);
  for (int i = 0; i < n_interior; ++i) {
    g.x[i] = lo + (i + 1) * h;
    diag[i] = 2.0 * t + p(g.x[i]);
  }
  std::vector<double> off(n_interior - 1, -t);
  g.energies = num::lowest_eigenvalues(diag, off, states);
  if (vectors) {
    for (int j = 0; j < states; ++j) {
      // orthogonalize only against nearly degenerate neighbours
      std::vector<std::vector<double>> cluster;
      for (int i = 0; i < j; ++i)
        if (std::abs(g.energies[i] - g.energies[j]) < 1e-4 * (1.0 + std::abs(g.energies[j])))
          cluster.push_back(g.vectors[i]);
      g.vectors.push_back(num::inverse_iteration(diag, off, g.energies[j], cluster));
    }
  }
  return g;
}

void fix_sign(std::vector<double>& v) {
  double mx = 0.0;
  for (double a : v) mx = std::max(mx, std::abs(a));
  if (mx == 0.0) return;
  // first interior extremum from the left: first local max of |v| above noise
  const double gate = 1e-3 * mx;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > gate && a >= std::abs(v[i - 1]) && a >= std::abs(v[i + 1])) {
      if (v[i] < 0.0)
        for (double& val : v) val = -val;
      return;
    }
  }
  if (v[v.size() / 2] < 0.0)
    for (double& val : v) val = -val;
}

std::pair<double, double> auto_domain(const Potential& p, const SpectrumOptions& opt) {
  if (opt.domain) return *opt.domain;
  if (p.fixed_domain()) return p.domain();
  // start from a window around the global minimum and extend until the
  // boundary-amplitude gate passes for all requested states
  const auto [dlo, dhi] = p.domain();
  double lo = dlo, hi = dhi;
  for (int pass = 0; pass < 14; ++pass) {
    GridEigen g = diagonalize(p, lo, hi, 900, opt.states, true);
    bool left_ok = true, right_ok = true;
    for (const auto& v : g.vectors) {
      double mx = 0.0;
      for (double a : v) mx = std::max(mx, std::abs(a));
      if (std::abs(v.front()) > opt.boundary_gate * mx) left_ok = false;
      if (std::abs(v.back()) > opt.boundary_gate * mx) right_ok = false;
    }
    if (left_ok && right_ok) return {lo, hi};
    const double w = hi - lo;
    if (!left_ok) lo -= 0.3 * w;
    if (!right_ok) hi += 0.3 * w;
  }
  fail(errc::domain_error, "solve_spectrum: domain extension did not satisfy the boundary gate");
}

} // namespace

Spectrum solve_spectrum(const Potential& p, const SpectrumOptions& opt) {
  if (opt.states < 1 || opt.states > 12)
    fail(errc::config_error, "solve_spectrum: states must be in 1..12");
  if (opt.grid_points < 500)
    fail(errc::config_error, "solve_spectrum: need at least 500 grid points");

  auto [lo, hi] = auto_domain(p, opt);
  int n_fine = opt.grid_points;
  if (n_fine % 2 == 0) ++n_fine; // keep the coarse grid an exact 2x coarsening
  // Align a node with the x = 0 slope kink of the double oscillator on both
  // Richardson grids: choose endpoints as even multiples of the fine step.
  if (p.kind() == PotentialKind::double_oscillator) {
    const double h0 = (hi - lo) / (n_fine + 1);
    long m = static_cast<long>(std::ceil(-lo / h0 - 1e-9));
    long k = static_cast<long>(std::ceil(hi / h0 - 1e-9));
    m += m % 2;
    k += k % 2;
    lo = -static_cast<double>(m) * h0;
    hi = static_cast<double>(k) * h0;
    n_fine = static_cast<int>(m + k - 1);
  }
  const int n_coarse = (n_fine - 1) / 2;
  GridEigen fine = diagonalize(p, lo, hi, n_fine, opt.states, opt.eigenvectors);

  Spectrum s;
  s.x = std::move(fine.x);
  s.dx = fine.dx;
  s.interval = {lo, hi};
  s.energies = fine.energies;
  s.energy_errors.assign(opt.states, 0.0);

  if (opt.richardson) {
    GridEigen coarse = diagonalize(p, lo, hi, n_coarse, opt.states, false);
    for (int j = 0; j < opt.states; ++j) {
      const double extrap = (4.0 * fine.energies[j] - coarse.energies[j]) / 3.0;
      s.energy_errors[j] = std::abs(fine.energies[j] - coarse.energies[j]) / 3.0;
      s.energies[j] = extrap;
      if (s.energy_errors[j] > opt.convergence_tol)
        fail(errc::convergence_error,
             "solve_spectrum: Richardson estimate " + std::to_string(s.energy_errors[j]) +
                 " exceeds tolerance for state " + std::to_string(j));
    }
  }

  if (opt.eigenvectors) {
    s.states = std::move(fine.vectors);
    const double inv = 1.0 / std::sqrt(s.dx);
    for (auto& v : s.states) {
      for (double& a : v) a *= inv; // Euclidean -> L2 normalization
      fix_sign(v);
    }
  }
  // strict ordering sanity (1D Dirichlet spectra are simple)
  for (int j = 1; j < opt.states; ++j)
    if (!(s.energies[j] > s.energies[j - 1] - 1e-12))
      fail(errc::convergence_error, "solve_spectrum: eigenvalue ordering violated");
  return s;
}

double overlap(const Spectrum& s, std::span<const double> a, std::span<const double> b) {
  if (a.size() != s.x.size() || b.size() != s.x.size())
    fail(errc::grid_mismatch, "overlap: vectors not on the spectrum grid");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc * s.dx; // boundary values vanish (Dirichlet)
}

int count_sign_changes(std::span<const double> v, double threshold_fraction) {
  double mx = 0.0;
  for (double a : v) mx = std::max(mx, std::abs(a));
  const double gate = threshold_fraction * mx;
  int changes = 0;
  double prev = 0.0;
  for (double a : v) {
    if (std::abs(a) <= gate) continue;
    if (prev != 0.0 && (a > 0) != (prev > 0)) ++changes;
    prev = a;
  }
  return changes;
}

namespace {

double identity_estimate(const Potential& p, const Spectrum& s, double omega, double center,
                         double length, int i, int n) {
  if (i < 0 || i >= s.size() || s.states.empty())
    fail(errc::config_error, "energy_identity_check: state index out of range");
  specfun::OscillatorEigenfunction ho{center, length, n};
  double num = 0.0, den = 0.0;
  const auto& phi = s.states[i];
  for (std::size_t k = 0; k < s.x.size(); ++k) {
    const double x = s.x[k];
    const double psi = ho(x);
    const double u = (x - center) / length;
    const double vho = 0.5 * omega * u * u;
    num += (p(x) - vho) * phi[k] * psi;
    den += phi[k] * psi;
  }
  num *= s.dx;
  den *= s.dx;
  if (std::abs(den) < 1e-6)
    fail(errc::degenerate_overlap, "energy_identity_check: projection overlap below gate");
  return omega * (n + 0.5) + num / den;
}

} // namespace

double energy_identity_check(const Potential& p, const Spectrum& s, const WellAnalysis& w,
                             int i, int n) {
  return identity_estimate(p, s, w.omega_right, w.right_min, w.length_right(), i, n);
}

double energy_identity_check_left(const Potential& p, const Spectrum& s,
                                  const WellAnalysis& w, int i, int m) {
  return identity_estimate(p, s, w.omega_left, w.left_min, w.length_left(), i, m);
}

} // namespace dwell
