#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dwell {

// Natural-unit record. kinetic_coefficient is hbar^2/2m expressed in the
// potential's own (energy, length) units: 1/2 for (hbar*omega, l_ho) systems,
// 1 for the lattice in (E_R, 1/k).
struct NaturalUnits {
  double kinetic_coefficient = 0.5;
  std::string energy = "hbar_omega";
  std::string length = "l_ho";
};

enum class PotentialKind { quartic, lattice, double_oscillator, tabulated };

class Potential {
public:
  // V/hw = -x^2/4 + x^4/96 + alpha x/(4 sqrt3) + C(alpha), x in l_ho.
  static Potential quartic(double alpha);
  // V/E_R = depth*(cos u + xi/4)^2 + tilt*u on one period cell u = kx in [0, 2pi].
  static Potential lattice(double depth, double xi, double tilt);
  // Two glued parabolas: V/hw = ((x+b')/sqrt2)^2 for x<0, ((x-a)/sqrt2)^2 + eps
  // for x>=0, b' = sqrt(a^2 + 2 eps), x in l_ho.
  static Potential double_oscillator(double eps, double separation);
  // Cubic-spline interpolated samples (>= 200, strictly increasing x).
  static Potential tabulated(std::vector<double> x, std::vector<double> v,
                             NaturalUnits units = {});

  double operator()(double x) const;
  double derivative(double x) const;
  double second_derivative(double x) const;

  PotentialKind kind() const { return kind_; }
  const NaturalUnits& units() const { return units_; }
  std::pair<double, double> domain() const { return domain_; }
  // fixed-domain potentials (lattice cell, tabulated range) must not be
  // extended by the eigensolver
  bool fixed_domain() const { return fixed_domain_; }

  double quartic_alpha() const { return alpha_; }
  double quartic_offset() const { return c_alpha_; } // C(alpha)
  double lattice_depth() const { return depth_; }
  double lattice_xi() const { return xi_; }
  double lattice_tilt() const { return tilt_; }
  double dosc_epsilon() const { return eps_; }
  double dosc_separation() const { return sep_; }
  double dosc_left_center() const { return b_prime_; } // b'

private:
  Potential() = default;
  void check_domain(double x) const;

  PotentialKind kind_ = PotentialKind::quartic;
  NaturalUnits units_;
  std::pair<double, double> domain_{0.0, 0.0};
  bool fixed_domain_ = false;
  double alpha_ = 0.0, c_alpha_ = 0.0;
  double depth_ = 0.0, xi_ = 0.0, tilt_ = 0.0;
  double eps_ = 0.0, sep_ = 0.0, b_prime_ = 0.0;
  std::vector<double> tx_, tv_, tv2_; // spline knots, values, second derivatives
};

// Extracted double-well geometry. Positions are in the potential's length
// unit, frequencies in its energy unit (hbar = 1).
struct WellAnalysis {
  double left_min = 0.0;   // -b
  double right_min = 0.0;  // a
  double barrier_top = 0.0; // x_c
  double omega_left = 0.0;
  double omega_right = 0.0;
  double epsilon = 0.0; // (V(a) - V(-b)) / (hbar omega_r)
  double barrier_over_left = 0.0;
  double barrier_over_right = 0.0;
  double kinetic_coefficient = 0.5;

  double length_left() const;  // l_l = sqrt(hbar / m omega_l)
  double length_right() const; // l_r
};

// Locates the two minima and the barrier top (|V'| <= 1e-10 by safeguarded
// Newton from sign-bracketed seeds), extracts curvature frequencies and the
// asymmetry. Throws structure_error when the (2 minima, 1 maximum) pattern is
// not present.
WellAnalysis analyze_wells(const Potential& p);

// (m g lambda / 2) / E_R for a species of the given mass in an optical lattice
// of wavelength lambda under acceleration g. SI inputs.
double gravity_tilt_ratio(double mass_kg, double wavelength_m, double g_accel);

// Dimensionless tilt coefficient G = m g / (k E_R) for Potential::lattice.
double lattice_tilt_parameter(double mass_kg, double wavelength_m, double g_accel);

} // namespace dwell
