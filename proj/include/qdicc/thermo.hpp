// Entropy production in reservoir (macroscopic) and rate-log (Schnakenberg)
// form, the entropic forces and the M/N rate factors. k_B = 1.
#pragma once

#include <array>
#include <vector>

#include "qdicc/transport.hpp"

namespace qdicc {

/// Entropic biases conjugate to J_E^u, J_E^r and J_N^r.
struct ForceSet {
  double F_E_u = 0.0;
  double F_E_r = 0.0;
  double F_N_r = 0.0;
};

/// F_E^u = beta_l - beta_u, F_E^r = beta_l - beta_r,
/// F_N^r = beta_r mu_r - beta_l mu_l.
ForceSet forces_macro(const BathConfig& baths);

/// The same forces from logarithms of rate-constant products. Throws
/// PhysicsError when kappa = 0 and NumericalError on a zero rate.
ForceSet forces_micro(const RateConstants& rc);

/// F_N^r = ln M - eps_b F_E^r, the alternate micro form.
double particle_force_alt(const RateConstants& rc);

struct MNFactors {
  double M;  // k_AB^{r+} k_BA^{l-} / (k_BA^{r-} k_AB^{l+})
  double N;  // k_CD^{r+} k_DC^{l-} / (k_DC^{r-} k_CD^{l+})
};

MNFactors mn_factors(const RateConstants& rc);

struct MacroEntropy {
  double sigma_dot;                     // -sum_lambda beta_lambda J_Q^lambda
  std::array<double, 3> decomposition;  // J_E^u F_E^u, J_E^r F_E^r, J_N^r F_N^r
  double decomposition_sum() const {
    return decomposition[0] + decomposition[1] + decomposition[2];
  }
};

MacroEntropy entropy_production_macro(const CurrentSet& cs, const BathConfig& baths,
                                      const ForceSet& fs);

/// Schnakenberg channels in the order AB^l, AB^r, BD^u, DC^l, DC^r, CA^u,
/// each oriented along the clockwise cycle.
struct MicroEntropy {
  double sigma_dot;              // sum of (a - b) ln(a/b)
  double phi_dot;                // -sum of Gamma ln(k_fwd/k_bwd)
  std::array<double, 6> terms;   // the individual (a - b) ln(a/b)
};

/// Throws NumericalError if a population is below 1e-300.
MicroEntropy entropy_production_micro(const RateConstants& rc, const PopulationVector& rho);

struct EntropyReport {
  MacroEntropy macro;
  MicroEntropy micro;
};

struct BalanceSample {
  double t;
  double dS_dt;      // central difference of the Shannon entropy
  double sigma_dot;
  double phi_dot;
  double residual() const { return dS_dt - (sigma_dot + phi_dot); }
};

/// Entropy balance dS/dt = sigma + phi along a trajectory from evolve. The
/// derivative is a central difference, so the first and last samples are
/// skipped; samples must be equally spaced.
std::vector<BalanceSample> entropy_balance_transient(const std::vector<Sample>& trajectory,
                                                     const RateConstants& rc);

}  // namespace qdicc
