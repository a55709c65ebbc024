// Full pipeline for one parameter point: rates, steady state, currents,
// entropy production, X/Y, PQ^-1, regime and figures of merit.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdicc/icc.hpp"

namespace qdicc {

enum class Setup { Icc, Thermoelectric, Raw };

std::string_view name(Setup s);

/// Everything held fixed while the two forces vary.
struct FixedParams {
  Setup setup = Setup::Icc;
  SystemParams sys = SystemParams::from_kappa(1.0, 2.5, -1.5);
  double beta_r = 1.0;
  double mu_r = 1.0;
  double mu_u = 1.0;
  double gamma = 1.0;
  // Raw setup only: the remaining reservoir parameters.
  double beta_l = 1.0;
  double mu_l = 1.0;
  double beta_u = 1.0;
};

struct ResolvedBaths {
  BathConfig baths;
  double beta;  // beta_l
  double mu_l;
};

/// Reservoirs realising forces (F_E, F_N) in the chosen setup. In the ICC
/// setup F_E = F_E^r; in the thermoelectric setup F_E = F_E^u and beta_r is
/// the common inverse temperature of l and r. Raw ignores the forces.
ResolvedBaths resolve_baths(const FixedParams& fp, double F_E, double F_N);

enum class PointStatus { Ok, Flagged, PhysicsError, NumericalError };

std::string_view name(PointStatus s);

struct PointRecord {
  // inputs
  double F_E = 0.0;
  double F_N = 0.0;
  double beta = 0.0;
  double mu_l = 0.0;
  // outputs
  CurrentSet currents;
  double gamma_cw = 0.0;
  double X = 0.0;
  double Y = 0.0;
  double M = 0.0;
  double N = 0.0;
  std::optional<double> PQ;
  double sigma_macro = 0.0;
  double sigma_micro = 0.0;
  double phi_micro = 0.0;
  ForceSet forces;
  std::optional<Regime> regime;  // absent when the setup has no force plane
  std::optional<double> cop;
  std::optional<double> eta;
  // diagnostics
  double res_JE = 0.0;
  double res_JN = 0.0;
  double JN_u = 0.0;
  double cycle_deviation = 0.0;
  PointStatus status = PointStatus::Ok;
  std::string message;
  std::vector<std::string> warnings;
};

/// Evaluates one point; throws qdicc::Error on any failure.
PointRecord solve_point(const FixedParams& fp, double F_E, double F_N,
                        ClassifyTolerances tol = {});

/// As solve_point, but failures land in the record's status and message.
PointRecord solve_point_recorded(const FixedParams& fp, double F_E, double F_N,
                                 ClassifyTolerances tol = {}) noexcept;

/// Diagnostic thresholds, in units of the l-reservoir gamma.
inline constexpr double kConservationTol = 1e-12;
inline constexpr double kSigmaAgreementTol = 1e-10;
inline constexpr double kSecondLawTol = 1e-12;

}  // namespace qdicc
