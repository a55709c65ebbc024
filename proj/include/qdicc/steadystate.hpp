// Steady state of the four-state network and the clockwise cycle flux.
#pragma once

#include "qdicc/kinetics.hpp"

namespace qdicc {

struct SteadyState {
  PopulationVector rho;
  /// Net rate around A -> B -> D -> C -> A, read off the (A,B) leg summed
  /// over the l and r reservoirs. Positive means clockwise.
  double gamma_cw;
};

/// The four clockwise legs of the cycle evaluated at a population vector.
/// At steady state all four coincide.
struct CycleLegs {
  double ab_lr_plus;   // A -> B through l and r
  double bd_u_plus;    // B -> D through u
  double dc_lr_minus;  // D -> C through l and r
  double ca_u_minus;   // C -> A through u
  double max_deviation() const;
};

CycleLegs cycle_legs(const RateConstants& rc, const PopulationVector& rho);

/// Solves W rho = 0 with the last equation replaced by sum(rho) = 1, using
/// partial pivoting in 113-bit floating point so that cycle fluxes many
/// orders below the individual rates survive the cancellation in
/// k_AB rho_A - k_BA rho_B. Throws NumericalError if the 1-norm condition
/// number of the bordered matrix exceeds kSingularThreshold.
SteadyState steady_state(const Generator& W);

/// Convenience overload that also evaluates the cycle flux from the rate
/// constants in extended precision.
SteadyState steady_state(const RateConstants& rc);

/// Threshold on the condition estimate. It corresponds to a 1e12 bound in
/// double precision, scaled by the ratio of machine epsilons.
inline constexpr double kSingularThreshold = 1e30;

/// Closed-form cycle flux for equal tunnelling rates gamma. Uses
///   a = f_l+(w_AB) + f_r+(w_AB),  c = f_l+(w_CD) + f_r+(w_CD),
///   p = f_u+(w_AC),               q = f_u+(w_BD).
/// Throws PhysicsError if the three gamma differ.
double cycle_flux_closed_form(const SystemParams& sys, const BathConfig& baths);

}  // namespace qdicc
