#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dwell/potential.hpp"
#include "dwell/specfun.hpp"

namespace dwell {

struct SpectrumOptions {
  int states = 4;
  int grid_points = 4001;     // interior nodes of the fine grid
  bool richardson = true;     // extrapolate eigenvalues over (N, 2N+1) grids
  bool eigenvectors = true;
  double boundary_gate = 1e-6;    // |phi| at the edge relative to max (auto-domain kinds)
  double convergence_tol = 1e-5;  // gate on the Richardson error estimate
  std::optional<std::pair<double, double>> domain; // override
};

// Exact-diagonalization reference spectrum on a uniform grid with Dirichlet
// boundaries. Eigenfunctions are L2-normalized, signed so that the first
// interior extremum from the left is positive.
struct Spectrum {
  std::vector<double> x; // interior nodes
  double dx = 0.0;
  std::pair<double, double> interval{0.0, 0.0};
  std::vector<double> energies;
  std::vector<double> energy_errors; // Richardson estimates (0 when disabled)
  std::vector<std::vector<double>> states;

  int size() const { return static_cast<int>(energies.size()); }
};

Spectrum solve_spectrum(const Potential& p, const SpectrumOptions& opt = {});

// Trapezoid inner product of two grid vectors sharing the spectrum's grid.
double overlap(const Spectrum& s, std::span<const double> a, std::span<const double> b);

// Number of sign changes of a grid vector (Sturm oscillation count).
int count_sign_changes(std::span<const double> v, double threshold_fraction = 1e-6);

// Energy estimate from the harmonic-projection identity
//   E = hbar w_r (n + 1/2) + <(V - V_r^ho) phi_i psi_n> / <phi_i psi_n>,
// V_r^ho(x) = (hbar w_r / 2) ((x - a)/l_r)^2. Exact for exact eigenfunctions.
// Throws degenerate_overlap when |<phi_i psi_n>| < 1e-6.
double energy_identity_check(const Potential& p, const Spectrum& s, const WellAnalysis& w,
                             int i, int n);

// Left-well variant of the identity (projects on psi_m^ho(-b; l_l)).
double energy_identity_check_left(const Potential& p, const Spectrum& s,
                                  const WellAnalysis& w, int i, int m);

} // namespace dwell
