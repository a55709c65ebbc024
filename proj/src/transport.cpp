#include "qdicc/transport.hpp"

namespace qdicc {

CurrentSet currents(const RateConstants& rc, const PopulationVector& rho) {
  const SystemParams& sys = rc.system();
  const BathConfig& baths = rc.baths();
  const double w_low = sys.eps_b();
  const double w_high = sys.eps_b() + sys.kappa();

  CurrentSet cs;
  for (Lead lead : {Lead::L, Lead::R}) {
    const double g_ab = net_transition_rate(rc, rho, State::A, State::B, lead);
    const double g_cd = net_transition_rate(rc, rho, State::C, State::D, lead);
    cs.J_E[index(lead)] = w_low * g_ab + w_high * g_cd;
    cs.J_N[index(lead)] = g_ab + g_cd;
  }
  const double g_ac = net_transition_rate(rc, rho, State::A, State::C, Lead::U);
  const double g_bd = net_transition_rate(rc, rho, State::B, State::D, Lead::U);
  cs.J_E[index(Lead::U)] = sys.eps_u() * g_ac + (sys.eps_u() + sys.kappa()) * g_bd;
  cs.J_N[index(Lead::U)] = g_ac + g_bd;

  for (Lead lead : kLeads)
    cs.J_Q[index(lead)] = cs.J_E[index(lead)] - baths[lead].mu * cs.J_N[index(lead)];
  cs.unscaled = !baths.equal_gamma();
  return cs;
}

ConservationReport conservation_report(const CurrentSet& cs) {
  return {cs.J_E[0] + cs.J_E[1] + cs.J_E[2], cs.J_N[0] + cs.J_N[1] + cs.J_N[2], cs.J_N[2]};
}

}  // namespace qdicc
