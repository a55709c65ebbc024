#include "qdicc/point.hpp"

#include <cmath>
#include <limits>

#include "qdicc/error.hpp"

namespace qdicc {

std::string_view name(Setup s) {
  switch (s) {
    case Setup::Icc: return "icc";
    case Setup::Thermoelectric: return "thermoelectric";
    case Setup::Raw: return "raw";
  }
  return "?";
}

std::string_view name(PointStatus s) {
  switch (s) {
    case PointStatus::Ok: return "ok";
    case PointStatus::Flagged: return "flagged";
    case PointStatus::PhysicsError: return "physics_error";
    case PointStatus::NumericalError: return "numerical_error";
  }
  return "?";
}

ResolvedBaths resolve_baths(const FixedParams& fp, double F_E, double F_N) {
  switch (fp.setup) {
    case Setup::Icc: {
      const InvertedForces inv = invert_forces(F_E, F_N, fp.beta_r, fp.mu_r);
      return {icc_reduction(inv.beta, fp.beta_r, inv.mu_l, fp.mu_r, fp.mu_u, fp.gamma), inv.beta,
              inv.mu_l};
    }
    case Setup::Thermoelectric: {
      const InvertedThermoelectric inv =
          invert_forces_thermoelectric(F_E, F_N, fp.beta_r, fp.mu_r);
      return {thermoelectric_reduction(fp.beta_r, inv.beta_u, inv.mu_l, fp.mu_r, fp.mu_u,
                                       fp.gamma),
              fp.beta_r, inv.mu_l};
    }
    case Setup::Raw:
      break;
  }
  return {BathConfig(Reservoir(Lead::L, fp.beta_l, fp.mu_l, fp.gamma),
                     Reservoir(Lead::R, fp.beta_r, fp.mu_r, fp.gamma),
                     Reservoir(Lead::U, fp.beta_u, fp.mu_u, fp.gamma)),
          fp.beta_l, fp.mu_l};
}

PointRecord solve_point(const FixedParams& fp, double F_E, double F_N, ClassifyTolerances tol) {
  PointRecord rec;
  const ResolvedBaths rb = resolve_baths(fp, F_E, F_N);
  const BathConfig& baths = rb.baths;
  rec.forces = forces_macro(baths);
  if (fp.setup == Setup::Raw) {
    rec.F_E = rec.forces.F_E_r;
    rec.F_N = rec.forces.F_N_r;
  } else {
    rec.F_E = F_E;
    rec.F_N = F_N;
  }
  rec.beta = rb.beta;
  rec.mu_l = rb.mu_l;
  if (fp.sys.degenerate_transition())
    rec.warnings.emplace_back("omega_CD = 0: secular approximation is questionable here");

  const RateConstants rc(fp.sys, baths);
  const SteadyState ss = steady_state(rc);
  rec.currents = currents(rc, ss);
  rec.gamma_cw = ss.gamma_cw;
  rec.cycle_deviation = cycle_legs(rc, ss.rho).max_deviation();

  const XY xy = xy_variables(rc, ss);
  rec.X = xy.X;
  rec.Y = xy.Y;
  const MNFactors mn = mn_factors(rc);
  rec.M = mn.M;
  rec.N = mn.N;
  if (std::abs(rec.forces.F_E_u) <= 1e-10) rec.PQ = pq_ratio(rc);

  rec.sigma_macro = entropy_production_macro(rec.currents, baths, rec.forces).sigma_dot;
  const MicroEntropy micro = entropy_production_micro(rc, ss.rho);
  rec.sigma_micro = micro.sigma_dot;
  rec.phi_micro = micro.phi_dot;

  switch (fp.setup) {
    case Setup::Icc:
      rec.regime = classify(r_pair(rec.forces, rec.currents), tol);
      break;
    case Setup::Thermoelectric:
      rec.regime = classify({rec.forces.F_E_u, rec.forces.F_N_r, rec.currents.E(Lead::U),
                             rec.currents.N(Lead::R)},
                            tol);
      break;
    case Setup::Raw:
      if (std::abs(rec.forces.F_E_u) <= tol.tol_force)
        rec.regime = classify(r_pair(rec.forces, rec.currents), tol);
      break;
  }
  if (fp.setup != Setup::Thermoelectric) {
    rec.cop = cop(rec.currents, baths, rec.forces, tol);
    rec.eta = efficiency(rec.currents, baths, rec.forces, tol);
  }

  const ConservationReport cr = conservation_report(rec.currents);
  rec.res_JE = cr.sum_JE;
  rec.res_JN = cr.sum_JN;
  rec.JN_u = cr.JN_u;

  const double g = baths.l().gamma;
  const double flux_scale = g * g;
  std::string why;
  if (std::abs(cr.sum_JE) > kConservationTol * flux_scale) why += "energy not conserved; ";
  if (std::abs(cr.sum_JN) > kConservationTol * flux_scale) why += "particles not conserved; ";
  if (std::abs(cr.JN_u) > kConservationTol * flux_scale) why += "J_N^u nonzero; ";
  if (rec.cycle_deviation > kConservationTol * g) why += "cycle legs disagree; ";
  if (std::abs(rec.sigma_macro - rec.sigma_micro) > kSigmaAgreementTol * g)
    why += "macro and micro entropy production disagree; ";
  if (rec.sigma_micro < -kSecondLawTol * g) why += "negative entropy production; ";
  if (!why.empty()) {
    rec.status = PointStatus::Flagged;
    rec.message = why.substr(0, why.size() - 2);
  }
  return rec;
}

namespace {

PointRecord failed_point(double F_E, double F_N, PointStatus status, const char* what) {
  PointRecord rec;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  rec.F_E = F_E;
  rec.F_N = F_N;
  rec.beta = rec.mu_l = nan;
  rec.currents.J_E.fill(nan);
  rec.currents.J_N.fill(nan);
  rec.currents.J_Q.fill(nan);
  rec.gamma_cw = rec.X = rec.Y = rec.M = rec.N = nan;
  rec.sigma_macro = rec.sigma_micro = rec.phi_micro = nan;
  rec.forces = {nan, nan, nan};
  rec.res_JE = rec.res_JN = rec.JN_u = rec.cycle_deviation = nan;
  rec.status = status;
  rec.message = what;
  return rec;
}

}  // namespace

PointRecord solve_point_recorded(const FixedParams& fp, double F_E, double F_N,
                                 ClassifyTolerances tol) noexcept {
  try {
    return solve_point(fp, F_E, F_N, tol);
  } catch (const Error& e) {
    return failed_point(F_E, F_N,
                        e.kind() == ErrorKind::Numerical ? PointStatus::NumericalError
                                                         : PointStatus::PhysicsError,
                        e.what());
  } catch (const std::exception& e) {
    return failed_point(F_E, F_N, PointStatus::NumericalError, e.what());
  }
}

}  // namespace qdicc
