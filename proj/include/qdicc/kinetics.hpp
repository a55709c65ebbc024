// Reservoir-resolved rate constants, the 4x4 Markov generator and transient
// integration of the population rate equations.
#pragma once

#include <array>
#include <vector>

#include "qdicc/model.hpp"

namespace qdicc {

/// The six reservoir-resolved channels, each carrying an excitation and a
/// de-excitation rate.
enum class Channel : int { AB_L = 0, AB_R, CD_L, CD_R, AC_U, BD_U };
inline constexpr int kChannels = 6;

struct ChannelRates {
  double plus;   // k_{lower -> upper}, gamma * f+(omega)
  double minus;  // k_{upper -> lower}, gamma * (1 - f+(omega))
};

class RateConstants {
 public:
  RateConstants(const SystemParams& sys, const BathConfig& baths);

  /// k_{from -> to} through `lead`. Throws PhysicsError if that reservoir does
  /// not couple the two states.
  double k(State from, State to, Lead lead) const;

  const ChannelRates& channel(Channel c) const { return rates_[static_cast<int>(c)]; }
  static Channel channel_of(State i, State j, Lead lead);

  const SystemParams& system() const { return sys_; }
  const BathConfig& baths() const { return baths_; }

 private:
  SystemParams sys_;
  BathConfig baths_;
  std::array<ChannelRates, kChannels> rates_;
};

inline RateConstants rate_constants(const SystemParams& sys, const BathConfig& baths) {
  return RateConstants(sys, baths);
}

using Matrix4 = std::array<std::array<double, 4>, 4>;

/// W[j][i] is the total rate i -> j for i != j; each column sums to zero.
struct Generator {
  Matrix4 W{};
  double operator()(State to, State from) const { return W[index(to)][index(from)]; }
  /// Largest |W_ii|, the fastest decay rate in the network.
  double max_rate() const;
};

Generator generator(const RateConstants& rc);

class PopulationVector {
 public:
  /// Throws PhysicsError if an entry is below -tol or the sum misses 1 by more
  /// than tol.
  explicit PopulationVector(std::array<double, 4> rho, double tol = 1e-12);

  /// No validation; used for intermediate integrator states.
  static PopulationVector unchecked(std::array<double, 4> rho);

  double operator[](State s) const { return rho_[index(s)]; }
  const std::array<double, 4>& values() const { return rho_; }
  double sum() const;
  double min() const;

 private:
  PopulationVector() = default;
  std::array<double, 4> rho_{};
};

/// Gamma_ij^lambda = k_ij rho_i - k_ji rho_j. Throws PhysicsError on a
/// forbidden channel.
double net_transition_rate(const RateConstants& rc, const PopulationVector& rho, State i,
                           State j, Lead lead);

/// Gibbs state of a grand-canonical bath at (beta, mu):
/// rho_i proportional to exp(-beta (eps_i - mu n_i)).
PopulationVector gibbs_state(const SystemParams& sys, double beta, double mu);

struct Sample {
  double t;
  PopulationVector rho;
};

/// Fixed-step RK4 integration of d rho/dt = W rho from t = 0 to t_end.
/// Every `stride`-th step is recorded (the initial and final states always
/// are). Throws NumericalError if the normalization drifts by more than 1e-9
/// or a population drops below -1e-9.
std::vector<Sample> evolve(const PopulationVector& rho0, const Generator& W, double dt,
                           double t_end, int stride = 1);

}  // namespace qdicc
