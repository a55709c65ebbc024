#include "qdicc/steadystate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qdicc/error.hpp"

namespace qdicc {

namespace {

__extension__ typedef __float128 quad;
using QVec = std::array<quad, 4>;
using QMat = std::array<QVec, 4>;

quad qabs(quad x) { return x < 0 ? -x : x; }

// LU factorisation with partial pivoting, in place. Returns false on an
// exactly zero pivot.
bool lu_factor(QMat& a, std::array<int, 4>& perm) {
  for (int i = 0; i < 4; ++i) perm[i] = i;
  for (int k = 0; k < 4; ++k) {
    int p = k;
    for (int i = k + 1; i < 4; ++i)
      if (qabs(a[i][k]) > qabs(a[p][k])) p = i;
    if (a[p][k] == 0) return false;
    std::swap(a[k], a[p]);
    std::swap(perm[k], perm[p]);
    for (int i = k + 1; i < 4; ++i) {
      a[i][k] /= a[k][k];
      for (int j = k + 1; j < 4; ++j) a[i][j] -= a[i][k] * a[k][j];
    }
  }
  return true;
}

QVec lu_solve(const QMat& lu, const std::array<int, 4>& perm, const QVec& b) {
  QVec x{};
  for (int i = 0; i < 4; ++i) {
    x[i] = b[perm[i]];
    for (int j = 0; j < i; ++j) x[i] -= lu[i][j] * x[j];
  }
  for (int i = 3; i >= 0; --i) {
    for (int j = i + 1; j < 4; ++j) x[i] -= lu[i][j] * x[j];
    x[i] /= lu[i][i];
  }
  return x;
}

quad one_norm(const QMat& a) {
  quad best = 0;
  for (int j = 0; j < 4; ++j) {
    quad s = 0;
    for (int i = 0; i < 4; ++i) s += qabs(a[i][j]);
    best = std::max(best, s);
  }
  return best;
}

// Populations in extended precision; the bordered matrix is W with its last
// row replaced by ones. The diagonal is rebuilt from the off-diagonal rates
// in extended precision: a column sum that misses zero by one double ulp acts
// as a probability leak, and that alone shifts small cycle fluxes by parts in
// 1e6.
QVec solve_populations(const Generator& g) {
  QMat w{};
  for (int j = 0; j < 4; ++j) {
    quad out = 0;
    for (int i = 0; i < 4; ++i) {
      if (i == j) continue;
      w[i][j] = g.W[i][j];
      out += w[i][j];
    }
    w[j][j] = -out;
  }
  QMat a{};
  for (int i = 0; i < 3; ++i) a[i] = w[i];
  for (int j = 0; j < 4; ++j) a[3][j] = 1;
  const quad norm_a = one_norm(a);

  QMat lu = a;
  std::array<int, 4> perm{};
  if (!lu_factor(lu, perm)) throw NumericalError("degenerate network: singular generator");

  // Explicit inverse is cheap at 4x4 and gives the exact 1-norm condition.
  QMat inv{};
  for (int j = 0; j < 4; ++j) {
    QVec e{};
    e[j] = 1;
    const QVec col = lu_solve(lu, perm, e);
    for (int i = 0; i < 4; ++i) inv[i][j] = col[i];
  }
  const double cond = static_cast<double>(norm_a * one_norm(inv));
  if (!(cond <= kSingularThreshold)) {
    std::ostringstream msg;
    msg << "degenerate network: condition estimate " << cond << " exceeds "
        << kSingularThreshold;
    throw NumericalError(msg.str());
  }
  return lu_solve(lu, perm, QVec{0, 0, 0, 1});
}

PopulationVector to_population(const QVec& q) {
  std::array<double, 4> rho{};
  for (int i = 0; i < 4; ++i) rho[i] = static_cast<double>(q[i]);
  return PopulationVector(rho);
}

}  // namespace

double CycleLegs::max_deviation() const {
  const double v[4] = {ab_lr_plus, bd_u_plus, dc_lr_minus, ca_u_minus};
  return *std::max_element(v, v + 4) - *std::min_element(v, v + 4);
}

CycleLegs cycle_legs(const RateConstants& rc, const PopulationVector& rho) {
  auto lr = [&](State i, State j) {
    return net_transition_rate(rc, rho, i, j, Lead::L) + net_transition_rate(rc, rho, i, j, Lead::R);
  };
  return {lr(State::A, State::B), net_transition_rate(rc, rho, State::B, State::D, Lead::U),
          lr(State::D, State::C), net_transition_rate(rc, rho, State::C, State::A, Lead::U)};
}

SteadyState steady_state(const Generator& W) {
  const QVec q = solve_populations(W);
  // Clockwise flux on the (A,B) leg: total A -> B minus total B -> A.
  const quad flux = quad(W.W[1][0]) * q[0] - quad(W.W[0][1]) * q[1];
  return {to_population(q), static_cast<double>(flux)};
}

SteadyState steady_state(const RateConstants& rc) { return steady_state(generator(rc)); }

double cycle_flux_closed_form(const SystemParams& sys, const BathConfig& baths) {
  if (!baths.equal_gamma())
    throw PhysicsError("closed-form cycle flux requires equal tunnelling rates");
  const TransitionTable t = transition_energies(sys);
  const Reservoir& l = baths.l();
  const Reservoir& r = baths.r();
  const Reservoir& u = baths.u();
  // Each occupation together with its accurately computed complement 1 - f.
  // Factors such as (p - 1) and (q - p) are formed from whichever pair has
  // the smaller magnitude, so no digits are lost when f is close to one.
  const quad a = quad(fermi_plus(l, t.omega_ab())) + fermi_plus(r, t.omega_ab());
  const quad a_c = quad(fermi_minus(l, -t.omega_ab())) + fermi_minus(r, -t.omega_ab());
  const quad c = quad(fermi_plus(l, t.omega_cd())) + fermi_plus(r, t.omega_cd());
  const quad c_c = quad(fermi_minus(l, -t.omega_cd())) + fermi_minus(r, -t.omega_cd());
  const quad p = fermi_plus(u, t.omega_ac());
  const quad p_c = fermi_minus(u, -t.omega_ac());
  const quad q = fermi_plus(u, t.omega_bd());
  const quad q_c = fermi_minus(u, -t.omega_bd());

  const quad q_minus_p = (p + q > 1) ? p_c - q_c : q - p;
  const quad a_minus_c = (a + c > 2) ? c_c - a_c : a - c;
  // Numerator a (c (q - p) + 2 q (p - 1)) - 2 p c (q - 1), regrouped with
  // 2 - a = a_c and 2 - c = c_c into the difference of the two cycle products.
  const quad num = a_c * q_c * c * p - a * q * c_c * p_c;
  // 3 a (p - q) - 6 + 3 c (q - p)
  const quad den = -3 * a_minus_c * q_minus_p - 6;
  return static_cast<double>(l.gamma * num / den);
}

}  // namespace qdicc
