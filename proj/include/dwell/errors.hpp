#pragma once

#include <stdexcept>
#include <string>

namespace dwell {

// Failure categories surfaced by the library. Each maps onto the error
// conditions named in the per-operation contracts.
enum class errc {
  domain_error,       // argument outside the supported interval / envelope
  pole_error,         // gamma pole at a non-positive integer
  overflow_error,     // intermediate scale not representable
  structure_error,    // potential does not have the (2 minima, 1 maximum) shape
  convergence_error,  // iteration or extrapolation failed its tolerance
  regime_error,       // operation used outside its validity regime
  grid_mismatch,      // vectors defined on different grids
  degenerate_overlap, // denominator overlap below its gate
  degenerate_pair,    // two-state evolution with a vanishing gap
  support_error,      // wave packet leaks past the grid boundary
  config_error        // bad run configuration / input file
};

class Error : public std::runtime_error {
public:
  Error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const noexcept { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace dwell
