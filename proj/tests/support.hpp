// Independent oracles and random parameter draws shared by the test suites.
// Nothing here calls into the library's numerics; oracles recompute from raw
// parameters in long double.
#pragma once

#include <array>
#include <cmath>
#include <random>

#include "qdicc/model.hpp"

namespace oracle {

using ld = long double;

struct Params {
  double eps_b, eps_u, kappa;
  double beta_l, mu_l, beta_r, mu_r, beta_u, mu_u;
  double gamma_l = 1.0, gamma_r = 1.0, gamma_u = 1.0;

  qdicc::SystemParams sys() const { return qdicc::SystemParams::from_kappa(eps_b, eps_u, kappa); }
  qdicc::BathConfig baths() const {
    return qdicc::BathConfig(qdicc::Reservoir(qdicc::Lead::L, beta_l, mu_l, gamma_l),
                             qdicc::Reservoir(qdicc::Lead::R, beta_r, mu_r, gamma_r),
                             qdicc::Reservoir(qdicc::Lead::U, beta_u, mu_u, gamma_u));
  }
};

inline ld fermi(ld beta, ld mu, ld omega) { return 1.0L / (1.0L + std::exp((omega - mu) * beta)); }

// Edge rates of the ring A - B - D - C - A, each as (forward, backward)
// along the clockwise orientation.
struct Ring {
  ld ab, ba, bd, db, dc, cd, ca, ac;
};

inline Ring ring(const Params& p) {
  const ld wab = p.eps_b, wcd = (ld)p.eps_b + p.kappa, wac = p.eps_u, wbd = (ld)p.eps_u + p.kappa;
  const ld fl1 = fermi(p.beta_l, p.mu_l, wab), fr1 = fermi(p.beta_r, p.mu_r, wab);
  const ld fl2 = fermi(p.beta_l, p.mu_l, wcd), fr2 = fermi(p.beta_r, p.mu_r, wcd);
  const ld fu1 = fermi(p.beta_u, p.mu_u, wac), fu2 = fermi(p.beta_u, p.mu_u, wbd);
  Ring r;
  r.ab = p.gamma_l * fl1 + p.gamma_r * fr1;
  r.ba = p.gamma_l * (1 - fl1) + p.gamma_r * (1 - fr1);
  r.cd = p.gamma_l * fl2 + p.gamma_r * fr2;
  r.dc = p.gamma_l * (1 - fl2) + p.gamma_r * (1 - fr2);
  r.ac = p.gamma_u * fu1;
  r.ca = p.gamma_u * (1 - fu1);
  r.bd = p.gamma_u * fu2;
  r.db = p.gamma_u * (1 - fu2);
  return r;
}

struct Solution {
  std::array<ld, 4> rho;  // A, B, C, D
  ld cycle;               // clockwise flux
};

// Markov chain tree theorem on the 4-cycle: the weight of state i is the sum
// over the four spanning paths of the product of rates pointing toward i.
// The cycle flux is the difference of the two cycle products divided by the
// total weight.
inline Solution tree_theorem(const Params& p) {
  const Ring r = ring(p);
  // Ring order A(0) B(1) D(2) C(3); fwd[k] is rate k -> k+1, bwd[k] is k+1 -> k.
  const ld fwd[4] = {r.ab, r.bd, r.dc, r.ca};
  const ld bwd[4] = {r.ba, r.db, r.cd, r.ac};
  ld w[4];
  for (int root = 0; root < 4; ++root) {
    ld total = 0;
    for (int cut = 0; cut < 4; ++cut) {
      // Without edge (cut, cut+1) the ring is the path cut+1, cut+2, ..., cut.
      auto pos = [&](int node) { return (node - cut - 1 + 8) % 4; };
      ld prod = 1;
      for (int e = 0; e < 4; ++e) {
        if (e == cut) continue;
        // Edge e runs from node e to node e+1 along the path; it points
        // backward when the root lies at or before node e.
        prod *= pos(root) <= pos(e) ? bwd[e] : fwd[e];
      }
      total += prod;
    }
    w[root] = total;
  }
  const ld z = w[0] + w[1] + w[2] + w[3];
  Solution s;
  s.rho = {w[0] / z, w[1] / z, w[3] / z, w[2] / z};  // ring order A B D C -> A B C D
  s.cycle = (fwd[0] * fwd[1] * fwd[2] * fwd[3] - bwd[0] * bwd[1] * bwd[2] * bwd[3]) / z;
  return s;
}

inline std::array<ld, 4> gibbs(const Params& p, ld beta, ld mu) {
  const ld e[4] = {0, p.eps_b, p.eps_u, (ld)p.eps_b + p.eps_u + p.kappa};
  const int n[4] = {0, 1, 1, 2};
  std::array<ld, 4> g{};
  ld z = 0;
  for (int i = 0; i < 4; ++i) z += (g[i] = std::exp(-beta * (e[i] - mu * n[i])));
  for (ld& x : g) x /= z;
  return g;
}

// Uniform draws over the property-test box.
class Sampler {
 public:
  explicit Sampler(unsigned long seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Params general(double beta_lo = 0.1, double beta_hi = 5.0) {
    Params p{};
    p.eps_b = open(0.0, 3.0);
    p.eps_u = open(p.eps_b, 5.0);
    do p.kappa = uniform(-3.0, 3.0); while (p.kappa == 0.0);
    p.beta_l = uniform(beta_lo, beta_hi);
    p.beta_r = uniform(beta_lo, beta_hi);
    p.beta_u = uniform(beta_lo, beta_hi);
    p.mu_l = uniform(-3.0, 3.0);
    p.mu_r = uniform(-3.0, 3.0);
    p.mu_u = uniform(-3.0, 3.0);
    return p;
  }

  Params icc_reduced() {
    Params p = general();
    p.beta_u = p.beta_l;
    return p;
  }

 private:
  double open(double lo, double hi) {
    double x;
    do x = uniform(lo, hi); while (x <= lo || x >= hi);
    return x;
  }
  std::mt19937_64 rng_;
};

}  // namespace oracle
