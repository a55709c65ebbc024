// Inverse-current analysis: two-force setups, force inversion for sweeps,
// the X/Y rate variables, the PQ^-1 sign rule, regime classification and the
// refrigerator / engine figures of merit.
#pragma once

#include <optional>
#include <string_view>

#include "qdicc/thermo.hpp"

namespace qdicc {

enum class Regime {
  Equilibrium,
  Normal,
  CrossEffectEnergy,
  CrossEffectParticle,
  PseudoIccEnergy,
  PseudoIccParticle,
  IccEnergy,
  IccParticle,
};

std::string_view name(Regime r);
bool is_icc(Regime r);
bool is_pseudo_icc(Regime r);

/// beta_l = beta_u = beta; F_E^u vanishes identically.
BathConfig icc_reduction(double beta, double beta_r, double mu_l, double mu_r, double mu_u,
                         double gamma = 1.0);

/// beta_l = beta_r = beta; F_E^r vanishes identically.
BathConfig thermoelectric_reduction(double beta, double beta_u, double mu_l, double mu_r,
                                    double mu_u, double gamma = 1.0);

struct InvertedForces {
  double beta;  // common inverse temperature of l and u
  double mu_l;
};

/// Reservoir parameters of the ICC setup that produce F_E^r = F_E and
/// F_N^r = F_N. Throws PhysicsError unless beta_r + F_E > 0.
InvertedForces invert_forces(double F_E, double F_N, double beta_r, double mu_r);

struct InvertedThermoelectric {
  double beta_u;
  double mu_l;
};

/// Thermoelectric counterpart: F_E^u = F_E and F_N^r = F_N at common beta of
/// l and r. Throws PhysicsError unless beta - F_E > 0.
InvertedThermoelectric invert_forces_thermoelectric(double F_E, double F_N, double beta,
                                                    double mu_r);

struct XY {
  double X;  // Gamma_AB^{r+} - Gamma_AB^{l+}
  double Y;  // Gamma_CD^{r+} - Gamma_CD^{l+}
};

XY xy_variables(const RateConstants& rc, const SteadyState& ss);

/// P Q^-1 with P = (1 + k_AB^{r+}/k_AB^{l+}) / (1 + k_BA^{r-}/k_BA^{l-}) and Q
/// the (C,D) analogue. Only meaningful when F_E^u = 0; throws PhysicsError if
/// |F_E^u| > 1e-10. Under that condition the cycle affinity equals ln(PQ^-1),
/// so the cycle flux runs clockwise exactly when PQ^-1 > 1.
double pq_ratio(const RateConstants& rc);

/// Sign of the cycle flux implied by a PQ^-1 value: +1, -1 or 0 inside tol.
int predicted_cycle_sign(double pq, double tol = 1e-10);

/// One force/flux pair per axis of the force plane.
struct ForcePlanePoint {
  double F_E;
  double F_N;
  double J_E;
  double J_N;
};

/// The (F_E^r, F_N^r, J_E^r, J_N^r) pair of an ICC-reduced point.
ForcePlanePoint r_pair(const ForceSet& fs, const CurrentSet& cs);

struct ClassifyTolerances {
  double tol_sign = 1e-10;   // current magnitudes below this count as zero
  double tol_force = 1e-12;  // force magnitudes below this count as zero
};

/// Regime of a force-plane point. The third quadrant is mapped onto the first
/// by reversing every sign; the second and fourth quadrants are the cross
/// effect quadrants. Throws NumericalError if both genuine ICC conditions
/// hold at once, which would violate the second law.
Regime classify(const ForcePlanePoint& pt, ClassifyTolerances tol = {});

/// Reversible limits from the two distinct temperatures of the r pair.
/// cop_R = T_cold / (T_hot - T_cold), eta_C = 1 - T_cold / T_hot.
std::optional<double> cop_reversible(const BathConfig& baths);
std::optional<double> carnot_efficiency(const BathConfig& baths);

/// Refrigerator coefficient of performance -J_E^r beta_r / (J_N^r F_N^r) in
/// the first quadrant, mirrored for the third. Absent outside IccEnergy.
std::optional<double> cop(const CurrentSet& cs, const BathConfig& baths, const ForceSet& fs,
                          ClassifyTolerances tol = {});

/// Engine efficiency -J_N^r F_N^r / (beta_cold |J_E^r|). Absent outside
/// IccParticle.
std::optional<double> efficiency(const CurrentSet& cs, const BathConfig& baths,
                                 const ForceSet& fs, ClassifyTolerances tol = {});

}  // namespace qdicc
