#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace dwell::num {

// Adaptive Gauss-Kronrod 7/15 quadrature on [a, b].
// Throws convergence_error when the interval budget is exhausted.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, double abs_tol = 0.0, int max_intervals = 4000);

// Root of f on a sign-bracketing interval [lo, hi] (Brent). xtol is absolute.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double xtol = 1e-14);

// Safeguarded Newton for f(x)=0 given f and f'; falls back to bisection on the
// bracket when a step escapes it. Converges to |f| <= ftol or step < xtol.
double newton_bracketed(const std::function<double(double)>& f,
                        const std::function<double(double)>& df, double lo, double hi,
                        double ftol = 1e-10, double xtol = 1e-15);

// Minimum of f on [lo, hi] by golden-section + parabolic refinement.
// Returns (x_min, f(x_min)).
std::pair<double, double> find_min(const std::function<double(double)>& f, double lo,
                                   double hi, double xtol = 1e-12);

// --- symmetric tridiagonal eigenproblem -----------------------------------
//
// Lowest eigenpairs of the matrix with diagonal d and off-diagonal e
// (dimension n = d.size(), e.size() = n-1), via Sturm-sequence bisection for
// the eigenvalues and inverse iteration for the vectors.

// Number of eigenvalues strictly below x.
int sturm_count(std::span<const double> d, std::span<const double> e, double x);

// k lowest eigenvalues, each bisected to near machine precision.
std::vector<double> lowest_eigenvalues(std::span<const double> d, std::span<const double> e,
                                       int k);

// Eigenvector for an isolated-or-clustered eigenvalue lambda; orthogonalized
// against the vectors in prev (used for near-degenerate doublets). The result
// has unit Euclidean norm.
std::vector<double> inverse_iteration(std::span<const double> d, std::span<const double> e,
                                      double lambda,
                                      const std::vector<std::vector<double>>& prev);

} // namespace dwell::num
