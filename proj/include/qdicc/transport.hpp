// Steady-state energy, particle and heat currents per reservoir.
// Sign convention: positive means flow from the reservoir into the dots.
#pragma once

#include <array>

#include "qdicc/steadystate.hpp"

namespace qdicc {

struct CurrentSet {
  std::array<double, 3> J_E{};
  std::array<double, 3> J_N{};
  std::array<double, 3> J_Q{};
  /// Reservoir tunnelling rates differ, so values are in raw rate units
  /// rather than hbar*gamma^2.
  bool unscaled = false;

  double E(Lead l) const { return J_E[index(l)]; }
  double N(Lead l) const { return J_N[index(l)]; }
  double Q(Lead l) const { return J_Q[index(l)]; }
};

/// Currents from the excitation-direction net rates Gamma^{lambda+}.
CurrentSet currents(const RateConstants& rc, const PopulationVector& rho);
inline CurrentSet currents(const RateConstants& rc, const SteadyState& ss) {
  return currents(rc, ss.rho);
}

struct ConservationReport {
  double sum_JE;  // J_E^l + J_E^r + J_E^u
  double sum_JN;  // J_N^l + J_N^r + J_N^u
  double JN_u;    // the upper dot never exchanges particles with l or r
};

ConservationReport conservation_report(const CurrentSet& cs);

}  // namespace qdicc
