#include "qdicc/kinetics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qdicc/error.hpp"

namespace qdicc {

namespace {

ChannelRates make_rates(const Reservoir& res, double omega) {
  return {res.gamma * fermi_plus(res, omega), res.gamma * fermi_minus(res, -omega)};
}

constexpr double kDriftTol = 1e-9;

}  // namespace

RateConstants::RateConstants(const SystemParams& sys, const BathConfig& baths)
    : sys_(sys), baths_(baths) {
  const TransitionTable t = transition_energies(sys);
  rates_[static_cast<int>(Channel::AB_L)] = make_rates(baths.l(), t.omega_ab());
  rates_[static_cast<int>(Channel::AB_R)] = make_rates(baths.r(), t.omega_ab());
  rates_[static_cast<int>(Channel::CD_L)] = make_rates(baths.l(), t.omega_cd());
  rates_[static_cast<int>(Channel::CD_R)] = make_rates(baths.r(), t.omega_cd());
  rates_[static_cast<int>(Channel::AC_U)] = make_rates(baths.u(), t.omega_ac());
  rates_[static_cast<int>(Channel::BD_U)] = make_rates(baths.u(), t.omega_bd());
}

Channel RateConstants::channel_of(State i, State j, Lead lead) {
  if (!couples(i, j, lead)) {
    std::ostringstream msg;
    msg << "reservoir " << name(lead) << " does not couple states " << name(i) << " and "
        << name(j);
    throw PhysicsError(msg.str());
  }
  const State lo = std::min(i, j);
  if (lo == State::A && std::max(i, j) == State::B)
    return lead == Lead::L ? Channel::AB_L : Channel::AB_R;
  if (lo == State::C) return lead == Lead::L ? Channel::CD_L : Channel::CD_R;
  if (lo == State::A) return Channel::AC_U;
  return Channel::BD_U;
}

double RateConstants::k(State from, State to, Lead lead) const {
  const ChannelRates& c = channel(channel_of(from, to, lead));
  // The state ordering A < B < C < D coincides with excitation direction on
  // every allowed channel, including C -> D when the levels are swapped.
  return from < to ? c.plus : c.minus;
}

double Generator::max_rate() const {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(W[i][i]));
  return m;
}

Generator generator(const RateConstants& rc) {
  Generator g;
  for (State i : kStates) {
    for (State j : kStates) {
      if (i == j) continue;
      double rate = 0.0;
      for (Lead lead : kLeads)
        if (couples(i, j, lead)) rate += rc.k(i, j, lead);
      g.W[index(j)][index(i)] = rate;
    }
  }
  for (int i = 0; i < 4; ++i) {
    double out = 0.0;
    for (int j = 0; j < 4; ++j)
      if (j != i) out += g.W[j][i];
    g.W[i][i] = -out;
  }
  return g;
}

PopulationVector::PopulationVector(std::array<double, 4> rho, double tol) : rho_(rho) {
  for (double x : rho_) {
    if (!std::isfinite(x)) throw PhysicsError("population entry is not finite");
    if (x < -tol) throw PhysicsError("population entry is negative");
  }
  if (std::abs(sum() - 1.0) > tol) throw PhysicsError("populations do not sum to one");
}

PopulationVector PopulationVector::unchecked(std::array<double, 4> rho) {
  PopulationVector p;
  p.rho_ = rho;
  return p;
}

double PopulationVector::sum() const {
  return std::accumulate(rho_.begin(), rho_.end(), 0.0);
}

double PopulationVector::min() const { return *std::min_element(rho_.begin(), rho_.end()); }

double net_transition_rate(const RateConstants& rc, const PopulationVector& rho, State i,
                           State j, Lead lead) {
  return rc.k(i, j, lead) * rho[i] - rc.k(j, i, lead) * rho[j];
}

PopulationVector gibbs_state(const SystemParams& sys, double beta, double mu) {
  if (!(beta > 0.0) || !std::isfinite(beta) || !std::isfinite(mu))
    throw PhysicsError("Gibbs state needs finite beta > 0 and finite mu");
  const Eigenenergies e = eigenenergies(sys);
  std::array<double, 4> x{};
  for (State s : kStates) x[index(s)] = -beta * (e[index(s)] - mu * occupation(s));
  const double top = *std::max_element(x.begin(), x.end());
  double z = 0.0;
  for (double& v : x) z += (v = std::exp(v - top));
  for (double& v : x) v /= z;
  return PopulationVector(x);
}

std::vector<Sample> evolve(const PopulationVector& rho0, const Generator& W, double dt,
                           double t_end, int stride) {
  if (!(dt > 0.0) || !(t_end >= dt)) throw PhysicsError("evolve needs dt > 0 and t_end >= dt");
  if (stride < 1) throw PhysicsError("evolve sample stride must be positive");

  using Vec = std::array<double, 4>;
  auto apply = [&](const Vec& v) {
    Vec out{};
    for (int j = 0; j < 4; ++j)
      for (int i = 0; i < 4; ++i) out[j] += W.W[j][i] * v[i];
    return out;
  };
  auto axpy = [](const Vec& x, double a, const Vec& y) {
    Vec out{};
    for (int i = 0; i < 4; ++i) out[i] = x[i] + a * y[i];
    return out;
  };

  const long steps = std::lround(t_end / dt);
  std::vector<Sample> out;
  out.reserve(static_cast<size_t>(steps / stride + 2));
  out.push_back({0.0, rho0});

  Vec rho = rho0.values();
  for (long n = 1; n <= steps; ++n) {
    const Vec k1 = apply(rho);
    const Vec k2 = apply(axpy(rho, 0.5 * dt, k1));
    const Vec k3 = apply(axpy(rho, 0.5 * dt, k2));
    const Vec k4 = apply(axpy(rho, dt, k3));
    for (int i = 0; i < 4; ++i) rho[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    const PopulationVector p = PopulationVector::unchecked(rho);
    if (std::abs(p.sum() - 1.0) > kDriftTol || p.min() < -kDriftTol || !std::isfinite(p.sum())) {
      std::ostringstream msg;
      msg << "integration unstable at t=" << n * dt << " (dt=" << dt
          << "); reduce dt below 0.1/" << W.max_rate();
      throw NumericalError(msg.str());
    }
    if (n % stride == 0 || n == steps) out.push_back({n * dt, p});
  }
  return out;
}

}  // namespace qdicc
