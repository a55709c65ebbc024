#include "qdicc/icc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qdicc/error.hpp"

namespace qdicc {

namespace {

constexpr double kPqForceTol = 1e-10;

int sign_of(double x, double tol) { return x > tol ? 1 : (x < -tol ? -1 : 0); }

}  // namespace

std::string_view name(Regime r) {
  switch (r) {
    case Regime::Equilibrium: return "Equilibrium";
    case Regime::Normal: return "Normal";
    case Regime::CrossEffectEnergy: return "CrossEffectEnergy";
    case Regime::CrossEffectParticle: return "CrossEffectParticle";
    case Regime::PseudoIccEnergy: return "PseudoIccEnergy";
    case Regime::PseudoIccParticle: return "PseudoIccParticle";
    case Regime::IccEnergy: return "IccEnergy";
    case Regime::IccParticle: return "IccParticle";
  }
  return "?";
}

bool is_icc(Regime r) { return r == Regime::IccEnergy || r == Regime::IccParticle; }
bool is_pseudo_icc(Regime r) {
  return r == Regime::PseudoIccEnergy || r == Regime::PseudoIccParticle;
}

BathConfig icc_reduction(double beta, double beta_r, double mu_l, double mu_r, double mu_u,
                         double gamma) {
  return BathConfig(Reservoir(Lead::L, beta, mu_l, gamma), Reservoir(Lead::R, beta_r, mu_r, gamma),
                    Reservoir(Lead::U, beta, mu_u, gamma));
}

BathConfig thermoelectric_reduction(double beta, double beta_u, double mu_l, double mu_r,
                                    double mu_u, double gamma) {
  return BathConfig(Reservoir(Lead::L, beta, mu_l, gamma), Reservoir(Lead::R, beta, mu_r, gamma),
                    Reservoir(Lead::U, beta_u, mu_u, gamma));
}

InvertedForces invert_forces(double F_E, double F_N, double beta_r, double mu_r) {
  const double beta = beta_r + F_E;
  if (!(beta > 0.0)) {
    std::ostringstream msg;
    msg << "F_E = " << F_E << " gives non-positive beta = beta_r + F_E = " << beta;
    throw PhysicsError(msg.str());
  }
  return {beta, (beta_r * mu_r - F_N) / beta};
}

InvertedThermoelectric invert_forces_thermoelectric(double F_E, double F_N, double beta,
                                                    double mu_r) {
  const double beta_u = beta - F_E;
  if (!(beta_u > 0.0)) {
    std::ostringstream msg;
    msg << "F_E = " << F_E << " gives non-positive beta_u = beta - F_E = " << beta_u;
    throw PhysicsError(msg.str());
  }
  return {beta_u, mu_r - F_N / beta};
}

XY xy_variables(const RateConstants& rc, const SteadyState& ss) {
  const PopulationVector& rho = ss.rho;
  auto net = [&](State i, State j, Lead lead) { return net_transition_rate(rc, rho, i, j, lead); };
  return {net(State::A, State::B, Lead::R) - net(State::A, State::B, Lead::L),
          net(State::C, State::D, Lead::R) - net(State::C, State::D, Lead::L)};
}

double pq_ratio(const RateConstants& rc) {
  const double f_eu = forces_macro(rc.baths()).F_E_u;
  if (std::abs(f_eu) > kPqForceTol) {
    std::ostringstream msg;
    msg << "PQ^-1 rule needs F_E^u = 0 (got " << f_eu << ")";
    throw PhysicsError(msg.str());
  }
  const ChannelRates& ab_l = rc.channel(Channel::AB_L);
  const ChannelRates& ab_r = rc.channel(Channel::AB_R);
  const ChannelRates& cd_l = rc.channel(Channel::CD_L);
  const ChannelRates& cd_r = rc.channel(Channel::CD_R);
  const double P = (1.0 + ab_r.plus / ab_l.plus) / (1.0 + ab_r.minus / ab_l.minus);
  const double Q = (1.0 + cd_r.plus / cd_l.plus) / (1.0 + cd_r.minus / cd_l.minus);
  return P / Q;
}

int predicted_cycle_sign(double pq, double tol) { return sign_of(pq - 1.0, tol); }

ForcePlanePoint r_pair(const ForceSet& fs, const CurrentSet& cs) {
  return {fs.F_E_r, fs.F_N_r, cs.E(Lead::R), cs.N(Lead::R)};
}

Regime classify(const ForcePlanePoint& pt, ClassifyTolerances tol) {
  int se = sign_of(pt.F_E, tol.tol_force);
  int sn = sign_of(pt.F_N, tol.tol_force);
  double je = pt.J_E;
  double jn = pt.J_N;

  if (se == 0 && sn == 0)
    return (std::abs(je) <= tol.tol_sign && std::abs(jn) <= tol.tol_sign) ? Regime::Equilibrium
                                                                          : Regime::Normal;

  if (se * sn < 0) {
    // Forces anti-parallel: one current may be dragged against its force.
    const bool energy_against = je * se < 0 && std::abs(je) > tol.tol_sign;
    const bool particle_against = jn * sn < 0 && std::abs(jn) > tol.tol_sign;
    if (energy_against && particle_against)
      throw NumericalError("both currents oppose their forces: negative entropy production");
    if (energy_against) return Regime::CrossEffectEnergy;
    if (particle_against) return Regime::CrossEffectParticle;
    return Regime::Normal;
  }

  // First or third quadrant, including the half-axes; fold onto the first.
  if (se < 0 || sn < 0) {
    se = -se;
    sn = -sn;
    je = -je;
    jn = -jn;
  }
  const bool energy_reversed = je < -tol.tol_sign;
  const bool particle_reversed = jn < -tol.tol_sign;

  if (se > 0 && sn > 0) {
    if (energy_reversed && particle_reversed)
      throw NumericalError("both ICC conditions hold at one point: second-law violation");
    if (energy_reversed) return Regime::IccEnergy;
    if (particle_reversed) return Regime::IccParticle;
    return Regime::Normal;
  }
  if (se == 0 && energy_reversed) return Regime::PseudoIccEnergy;
  if (sn == 0 && particle_reversed) return Regime::PseudoIccParticle;
  return Regime::Normal;
}

std::optional<double> cop_reversible(const BathConfig& baths) {
  const double bl = baths.l().beta;
  const double br = baths.r().beta;
  if (bl == br) return std::nullopt;
  const double b_hot = std::min(bl, br);
  const double b_cold = std::max(bl, br);
  return b_hot / (b_cold - b_hot);
}

std::optional<double> carnot_efficiency(const BathConfig& baths) {
  const double bl = baths.l().beta;
  const double br = baths.r().beta;
  if (bl == br) return std::nullopt;
  const double b_hot = std::min(bl, br);
  const double b_cold = std::max(bl, br);
  return (b_cold - b_hot) / b_cold;
}

std::optional<double> cop(const CurrentSet& cs, const BathConfig& baths, const ForceSet& fs,
                          ClassifyTolerances tol) {
  if (std::abs(fs.F_E_u) > tol.tol_force) return std::nullopt;
  if (classify(r_pair(fs, cs), tol) != Regime::IccEnergy) return std::nullopt;
  const double zeta_r = *cop_reversible(baths);
  // zeta_R (-J_E F_E) / (J_N F_N); in the first quadrant this is
  // -J_E^r beta_r / (J_N^r F_N^r).
  return zeta_r * (-cs.E(Lead::R) * fs.F_E_r) / (cs.N(Lead::R) * fs.F_N_r);
}

std::optional<double> efficiency(const CurrentSet& cs, const BathConfig& baths,
                                 const ForceSet& fs, ClassifyTolerances tol) {
  if (std::abs(fs.F_E_u) > tol.tol_force) return std::nullopt;
  if (classify(r_pair(fs, cs), tol) != Regime::IccParticle) return std::nullopt;
  const double b_cold = std::max(baths.l().beta, baths.r().beta);
  return -cs.N(Lead::R) * fs.F_N_r / (b_cold * std::abs(cs.E(Lead::R)));
}

}  // namespace qdicc
