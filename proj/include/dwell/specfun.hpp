#pragma once

namespace dwell::specfun {

// Euler gamma function for real x. Lanczos approximation with reflection for
// x < 1/2; relative error <= 1e-12 for |x| <= 50. Throws pole_error at
// non-positive integers.
double gamma(double x);

// 1/Gamma(x), entire in x (0 at non-positive integers).
double reciprocal_gamma(double x);

// sin(pi x), cos(pi x) with argument reduction (exact at integers and
// half-integers; needed for near-integer order parameters).
double sinpi(double x);
double cospi(double x);

// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x);
// Probabilists' Hermite polynomial He_n(x).
double hermite_e(int n, double x);

struct PcfPair {
  double value;
  double derivative; // d/dz
};

// Weber parabolic cylinder function D_nu(z) with its z-derivative.
// Supported envelope |nu| <= 20, |z| <= 40; relative error <= 1e-8 inside it.
PcfPair pcf_d_pair(double nu, double z);
double pcf_d(double nu, double z);

struct AsymptoticTerms {
  double growing;  // Gamma(-eta)-weighted piece, ~ e^{+z^2/4}
  double decaying; // cos(eta pi)-weighted piece, ~ e^{-z^2/4}
};

// The two pieces of the large-|z| expansion of D_eta(z) on the negative real
// axis, each summed to optimal truncation. Validity gate: z < 0 and
// z^2 >= 25*max(1, eta^2); throws domain_error otherwise.
AsymptoticTerms pcf_d_asymptotic_negative(double eta, double z);

// Normalized harmonic oscillator eigenfunction
//   psi_k(c; l; x) = H_k((x-c)/l) exp(-(x-c)^2/2l^2) / sqrt(sqrt(pi) l 2^k k!).
struct OscillatorEigenfunction {
  double center = 0.0;
  double length = 1.0; // l
  int index = 0;       // k, 0..30

  double operator()(double x) const;
};

double oscillator_eval(const OscillatorEigenfunction& f, double x);

} // namespace dwell::specfun
