#include "qdicc/model.hpp"

#include <cmath>
#include <sstream>

#include "qdicc/error.hpp"

namespace qdicc {

namespace {

bool finite(double x) { return std::isfinite(x); }

// 1 / (1 + exp(x)) without overflow for large |x|.
double logistic_tail(double x) {
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

}  // namespace

std::string_view name(State s) {
  static constexpr std::array<std::string_view, 4> names{"A", "B", "C", "D"};
  return names[index(s)];
}

std::string_view name(Lead l) {
  static constexpr std::array<std::string_view, 3> names{"l", "r", "u"};
  return names[index(l)];
}

SystemParams::SystemParams(double eps_b, double eps_u, double kappa,
                           std::optional<double> kc, std::optional<double> ks)
    : eps_b_(eps_b), eps_u_(eps_u), kappa_(kappa), kappa_c_(kc), kappa_s_(ks) {
  if (!finite(eps_b) || !finite(eps_u) || !finite(kappa))
    throw PhysicsError("system parameters must be finite");
  if (!(eps_b > 0.0) || !(eps_u > 0.0))
    throw PhysicsError("dot energies eps_b and eps_u must be positive");
  if (!(eps_b < eps_u)) {
    std::ostringstream msg;
    msg << "eps_b < eps_u required (got eps_b=" << eps_b << ", eps_u=" << eps_u << ")";
    throw PhysicsError(msg.str());
  }
}

SystemParams SystemParams::from_kappa(double eps_b, double eps_u, double kappa) {
  return SystemParams(eps_b, eps_u, kappa, std::nullopt, std::nullopt);
}

SystemParams SystemParams::from_components(double eps_b, double eps_u, double kappa_c,
                                           double kappa_s) {
  if (!finite(kappa_c) || !finite(kappa_s) || kappa_c < 0.0 || kappa_s < 0.0)
    throw PhysicsError("kappa_c and kappa_s must be finite and non-negative");
  return SystemParams(eps_b, eps_u, kappa_c - kappa_s, kappa_c, kappa_s);
}

double SystemParams::theta() const {
  if (kappa_ == 0.0) throw PhysicsError("theta = eps_b/kappa is undefined for kappa = 0");
  return eps_b_ / kappa_;
}

Reservoir::Reservoir(Lead label_, double beta_, double mu_, double gamma_)
    : label(label_), beta(beta_), mu(mu_), gamma(gamma_) {
  if (!finite(beta) || !finite(mu) || !finite(gamma))
    throw PhysicsError("reservoir parameters must be finite");
  if (!(beta > 0.0)) throw PhysicsError("reservoir inverse temperature must be positive");
  if (!(gamma > 0.0)) throw PhysicsError("reservoir tunnelling rate must be positive");
}

BathConfig::BathConfig(Reservoir l, Reservoir r, Reservoir u) : l_(l), r_(r), u_(u) {
  if (l_.label != Lead::L || r_.label != Lead::R || u_.label != Lead::U)
    throw PhysicsError("reservoir labels do not match their positions (l, r, u)");
}

const Reservoir& BathConfig::operator[](Lead lead) const {
  switch (lead) {
    case Lead::L: return l_;
    case Lead::R: return r_;
    case Lead::U: return u_;
  }
  return l_;
}

bool BathConfig::equal_gamma(double rel_tol) const {
  const double g = l_.gamma;
  auto close = [&](double x) { return std::abs(x - g) <= rel_tol * std::max(g, x); };
  return close(r_.gamma) && close(u_.gamma);
}

Eigenenergies eigenenergies(const SystemParams& sys) {
  return {0.0, sys.eps_b(), sys.eps_u(), sys.eps_b() + sys.eps_u() + sys.kappa()};
}

TransitionTable transition_energies(const SystemParams& sys) {
  const double eb = sys.eps_b();
  const double eu = sys.eps_u();
  const double k = sys.kappa();
  return TransitionTable{
      {State::A, State::B, eb},
      {State::C, State::D, eb + k},
      {State::A, State::C, eu},
      {State::B, State::D, eu + k},
  };
}

bool couples(State i, State j, Lead lead) {
  auto is = [&](State x, State y) { return (i == x && j == y) || (i == y && j == x); };
  if (is(State::A, State::B) || is(State::C, State::D))
    return lead == Lead::L || lead == Lead::R;
  if (is(State::A, State::C) || is(State::B, State::D)) return lead == Lead::U;
  return false;
}

double fermi_plus(const Reservoir& res, double omega) {
  if (!finite(omega)) throw PhysicsError("non-finite transition energy");
  return logistic_tail((omega - res.mu) * res.beta);
}

double fermi_minus(const Reservoir& res, double omega) {
  if (!finite(omega)) throw PhysicsError("non-finite transition energy");
  // 1 - 1/(1 + exp(beta(-omega - mu))) = 1/(1 + exp(beta(omega + mu)))
  return logistic_tail((omega + res.mu) * res.beta);
}

}  // namespace qdicc
