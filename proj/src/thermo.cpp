#include "qdicc/thermo.hpp"

#include <cmath>

#include "qdicc/error.hpp"

namespace qdicc {

namespace {

constexpr double kMinPopulation = 1e-300;

double log_rate(double k) {
  if (!(k > 0.0)) throw NumericalError("logarithm of a non-positive rate constant");
  return std::log(k);
}

struct Leg {
  State from;
  State to;
  Lead lead;
};

// Clockwise orientation A -> B -> D -> C -> A.
constexpr std::array<Leg, 6> kCycleLegs{{
    {State::A, State::B, Lead::L},
    {State::A, State::B, Lead::R},
    {State::B, State::D, Lead::U},
    {State::D, State::C, Lead::L},
    {State::D, State::C, Lead::R},
    {State::C, State::A, Lead::U},
}};

}  // namespace

ForceSet forces_macro(const BathConfig& baths) {
  const Reservoir& l = baths.l();
  const Reservoir& r = baths.r();
  const Reservoir& u = baths.u();
  return {l.beta - u.beta, l.beta - r.beta, r.beta * r.mu - l.beta * l.mu};
}

MNFactors mn_factors(const RateConstants& rc) {
  const ChannelRates& ab_l = rc.channel(Channel::AB_L);
  const ChannelRates& ab_r = rc.channel(Channel::AB_R);
  const ChannelRates& cd_l = rc.channel(Channel::CD_L);
  const ChannelRates& cd_r = rc.channel(Channel::CD_R);
  const double den_m = ab_r.minus * ab_l.plus;
  const double den_n = cd_r.minus * cd_l.plus;
  if (!(den_m > 0.0) || !(den_n > 0.0))
    throw NumericalError("degenerate rates: M or N has a zero denominator");
  return {ab_r.plus * ab_l.minus / den_m, cd_r.plus * cd_l.minus / den_n};
}

ForceSet forces_micro(const RateConstants& rc) {
  const double kappa = rc.system().kappa();
  if (kappa == 0.0) throw PhysicsError("micro forces are undefined for kappa = 0");
  const double theta = rc.system().theta();

  using S = State;
  const double lnk_num = log_rate(rc.k(S::A, S::B, Lead::L)) + log_rate(rc.k(S::B, S::D, Lead::U)) +
                         log_rate(rc.k(S::D, S::C, Lead::L)) + log_rate(rc.k(S::C, S::A, Lead::U));
  const double lnk_den = log_rate(rc.k(S::B, S::A, Lead::L)) + log_rate(rc.k(S::D, S::B, Lead::U)) +
                         log_rate(rc.k(S::C, S::D, Lead::L)) + log_rate(rc.k(S::A, S::C, Lead::U));

  // ln M and ln N as sums of logs, so extreme rates neither overflow nor
  // lose digits in the ratio.
  const ChannelRates& ab_l = rc.channel(Channel::AB_L);
  const ChannelRates& ab_r = rc.channel(Channel::AB_R);
  const ChannelRates& cd_l = rc.channel(Channel::CD_L);
  const ChannelRates& cd_r = rc.channel(Channel::CD_R);
  const double ln_m = log_rate(ab_r.plus) + log_rate(ab_l.minus) - log_rate(ab_r.minus) -
                      log_rate(ab_l.plus);
  const double ln_n = log_rate(cd_r.plus) + log_rate(cd_l.minus) - log_rate(cd_r.minus) -
                      log_rate(cd_l.plus);

  ForceSet f;
  f.F_E_u = (lnk_num - lnk_den) / kappa;
  f.F_E_r = (ln_n - ln_m) / kappa;
  f.F_N_r = (1.0 + theta) * ln_m - theta * ln_n;
  return f;
}

double particle_force_alt(const RateConstants& rc) {
  const MNFactors mn = mn_factors(rc);
  return std::log(mn.M) - rc.system().eps_b() * forces_micro(rc).F_E_r;
}

MacroEntropy entropy_production_macro(const CurrentSet& cs, const BathConfig& baths,
                                      const ForceSet& fs) {
  MacroEntropy m;
  m.sigma_dot = 0.0;
  for (Lead lead : kLeads) m.sigma_dot -= baths[lead].beta * cs.Q(lead);
  m.decomposition = {cs.E(Lead::U) * fs.F_E_u, cs.E(Lead::R) * fs.F_E_r,
                     cs.N(Lead::R) * fs.F_N_r};
  return m;
}

MicroEntropy entropy_production_micro(const RateConstants& rc, const PopulationVector& rho) {
  for (State s : kStates)
    if (!(rho[s] >= kMinPopulation))
      throw NumericalError("entropy production needs strictly positive populations");

  MicroEntropy out{0.0, 0.0, {}};
  for (size_t n = 0; n < kCycleLegs.size(); ++n) {
    const Leg& leg = kCycleLegs[n];
    const double k_fwd = rc.k(leg.from, leg.to, leg.lead);
    const double k_bwd = rc.k(leg.to, leg.from, leg.lead);
    const double a = k_fwd * rho[leg.from];
    const double b = k_bwd * rho[leg.to];
    const double flux = a - b;
    const double log_ratio = (log_rate(k_fwd) + std::log(rho[leg.from])) -
                             (log_rate(k_bwd) + std::log(rho[leg.to]));
    out.terms[n] = flux * log_ratio;
    out.sigma_dot += out.terms[n];
    out.phi_dot -= flux * (log_rate(k_fwd) - log_rate(k_bwd));
  }
  return out;
}

std::vector<BalanceSample> entropy_balance_transient(const std::vector<Sample>& trajectory,
                                                     const RateConstants& rc) {
  auto shannon = [](const PopulationVector& p) {
    double s = 0.0;
    for (State st : kStates) {
      if (!(p[st] >= kMinPopulation))
        throw NumericalError("entropy balance needs an interior trajectory");
      s -= p[st] * std::log(p[st]);
    }
    return s;
  };

  std::vector<BalanceSample> out;
  if (trajectory.size() < 3) return out;
  out.reserve(trajectory.size() - 2);
  for (size_t n = 1; n + 1 < trajectory.size(); ++n) {
    const double h = trajectory[n + 1].t - trajectory[n - 1].t;
    const double ds = (shannon(trajectory[n + 1].rho) - shannon(trajectory[n - 1].rho)) / h;
    const MicroEntropy e = entropy_production_micro(rc, trajectory[n].rho);
    out.push_back({trajectory[n].t, ds, e.sigma_dot, e.phi_dot});
  }
  return out;
}

}  // namespace qdicc
