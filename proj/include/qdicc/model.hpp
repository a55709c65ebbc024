// Static description of the Coulomb-coupled double quantum dot: the four
// product eigenstates, the reservoir-assisted transitions between them and
// the Fermi occupation of each reservoir.
//
// Units: hbar = k_B = 1, energies in units of hbar*gamma.
#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace qdicc {

/// Eigenstates |00>, |down 0>, |0 up>, |down up> in this fixed order.
enum class State : int { A = 0, B = 1, C = 2, D = 3 };
inline constexpr std::array<State, 4> kStates{State::A, State::B, State::C, State::D};

/// Reservoirs: left and right couple to the bottom dot, U to the upper dot.
enum class Lead : int { L = 0, R = 1, U = 2 };
inline constexpr std::array<Lead, 3> kLeads{Lead::L, Lead::R, Lead::U};

constexpr int index(State s) { return static_cast<int>(s); }
constexpr int index(Lead l) { return static_cast<int>(l); }
std::string_view name(State s);
std::string_view name(Lead l);

/// Particle number of an eigenstate (0, 1 or 2 electrons on the two dots).
constexpr int occupation(State s) {
  switch (s) {
    case State::A: return 0;
    case State::B:
    case State::C: return 1;
    case State::D: return 2;
  }
  return 0;
}

class SystemParams {
 public:
  /// Coupling given directly. Throws PhysicsError unless 0 < eps_b < eps_u.
  static SystemParams from_kappa(double eps_b, double eps_u, double kappa);
  /// kappa = kappa_c - kappa_s with both components non-negative.
  static SystemParams from_components(double eps_b, double eps_u, double kappa_c,
                                      double kappa_s);

  double eps_b() const { return eps_b_; }
  double eps_u() const { return eps_u_; }
  double kappa() const { return kappa_; }
  std::optional<double> kappa_c() const { return kappa_c_; }
  std::optional<double> kappa_s() const { return kappa_s_; }

  /// eps_b / kappa. Throws PhysicsError when kappa == 0.
  double theta() const;

  /// eps_D < eps_C, i.e. eps_b + kappa < 0.
  bool level_swapped() const { return eps_b_ + kappa_ < 0.0; }
  /// omega_CD == 0: the secular approximation is questionable here.
  bool degenerate_transition() const { return eps_b_ + kappa_ == 0.0; }

 private:
  SystemParams(double eps_b, double eps_u, double kappa, std::optional<double> kc,
               std::optional<double> ks);

  double eps_b_;
  double eps_u_;
  double kappa_;
  std::optional<double> kappa_c_;
  std::optional<double> kappa_s_;
};

struct Reservoir {
  Lead label;
  double beta;   // inverse temperature
  double mu;     // chemical potential
  double gamma;  // bare tunnelling rate

  /// Throws PhysicsError unless beta > 0, gamma > 0 and all values finite.
  Reservoir(Lead label, double beta, double mu, double gamma = 1.0);
};

class BathConfig {
 public:
  BathConfig(Reservoir l, Reservoir r, Reservoir u);

  const Reservoir& l() const { return l_; }
  const Reservoir& r() const { return r_; }
  const Reservoir& u() const { return u_; }
  const Reservoir& operator[](Lead lead) const;

  /// All three tunnelling rates agree to relative precision rel_tol.
  bool equal_gamma(double rel_tol = 1e-12) const;

 private:
  Reservoir l_;
  Reservoir r_;
  Reservoir u_;
};

using Eigenenergies = std::array<double, 4>;

/// eps_A = 0, eps_B = eps_b, eps_C = eps_u, eps_D = eps_b + eps_u + kappa.
Eigenenergies eigenenergies(const SystemParams& sys);

/// One undirected allowed transition, stored in its excitation direction
/// (particle enters the system going from `lower` to `upper`).
struct Transition {
  State lower;
  State upper;
  double omega;  // eps_upper - eps_lower
};

/// The four allowed transitions; (B,C) and (A,D) do not exist.
struct TransitionTable {
  Transition ab;  // bottom dot, empty upper dot; leads L and R
  Transition cd;  // bottom dot, occupied upper dot; leads L and R
  Transition ac;  // upper dot, empty bottom dot; lead U
  Transition bd;  // upper dot, occupied bottom dot; lead U

  double omega_ab() const { return ab.omega; }
  double omega_cd() const { return cd.omega; }
  double omega_ac() const { return ac.omega; }
  double omega_bd() const { return bd.omega; }
};

TransitionTable transition_energies(const SystemParams& sys);

/// True when reservoir `lead` drives transitions between i and j.
bool couples(State i, State j, Lead lead);

/// [1 + exp(beta (omega - mu))]^-1, evaluated without overflow.
/// Throws PhysicsError for non-finite omega.
double fermi_plus(const Reservoir& res, double omega);

/// Hole counterpart: fermi_minus(res, w) = 1 - fermi_plus(res, -w), evaluated
/// directly so no cancellation occurs when fermi_plus is close to one.
double fermi_minus(const Reservoir& res, double omega);

}  // namespace qdicc
