#include <doctest.h>

#include <cmath>

#include "qdicc/error.hpp"
#include "qdicc/icc.hpp"
#include "qdicc/thermo.hpp"
#include "support.hpp"

using namespace qdicc;

TEST_SUITE("thermo") {
  TEST_CASE("macro forces by substitution") {
    const BathConfig same(Reservoir(Lead::L, 1.3, 0.2), Reservoir(Lead::R, 1.3, 0.2),
                          Reservoir(Lead::U, 1.3, 0.2));
    const ForceSet z = forces_macro(same);
    CHECK(z.F_E_u == 0.0);
    CHECK(z.F_E_r == 0.0);
    CHECK(z.F_N_r == 0.0);

    const BathConfig b(Reservoir(Lead::L, 1.0, 0.5), Reservoir(Lead::R, 0.8, 1.0),
                       Reservoir(Lead::U, 1.0, 0.0));
    const ForceSet f = forces_macro(b);
    CHECK(f.F_E_u == 0.0);
    CHECK(f.F_E_r == doctest::Approx(0.2));
    CHECK(f.F_N_r == doctest::Approx(0.3));

    const ForceSet te = forces_macro(thermoelectric_reduction(1.5, 0.7, 0.2, 0.9, 0.0));
    CHECK(te.F_E_r == 0.0);
    CHECK(te.F_N_r == doctest::Approx(1.5 * (0.9 - 0.2)));
  }

  TEST_CASE("micro forces equal macro forces") {
    oracle::Sampler s(51);
    for (int n = 0; n < 1000; ++n) {
      const auto p = s.general();
      const RateConstants rc(p.sys(), p.baths());
      const ForceSet ma = forces_macro(p.baths());
      const ForceSet mi = forces_micro(rc);
      CHECK(std::abs(ma.F_E_u - mi.F_E_u) < 1e-10);
      CHECK(std::abs(ma.F_E_r - mi.F_E_r) < 1e-10);
      CHECK(std::abs(ma.F_N_r - mi.F_N_r) < 1e-10);
      CHECK(std::abs(particle_force_alt(rc) - mi.F_N_r) < 1e-12 * std::max(1.0, std::abs(mi.F_N_r)));
    }
  }

  TEST_CASE("micro forces at global equilibrium vanish") {
    oracle::Params p{1, 2.5, -1.5, 0.7, 0.4, 0.7, 0.4, 0.7, 0.4};
    const ForceSet f = forces_micro(RateConstants(p.sys(), p.baths()));
    CHECK(std::abs(f.F_E_u) < 1e-14);
    CHECK(std::abs(f.F_E_r) < 1e-14);
    CHECK(std::abs(f.F_N_r) < 1e-14);
  }

  TEST_CASE("micro forces are undefined without coupling") {
    oracle::Params p{1, 2.5, 0.0, 0.7, 0.4, 0.7, 0.4, 0.7, 0.4};
    CHECK_THROWS_AS(forces_micro(RateConstants(p.sys(), p.baths())), PhysicsError);
  }

  TEST_CASE("M and N factors") {
    oracle::Params p{1, 2.5, -1.5, 0.7, 0.4, 0.7, 0.4, 1.1, 0.0};
    const MNFactors same = mn_factors(RateConstants(p.sys(), p.baths()));
    CHECK(same.M == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(same.N == doctest::Approx(1.0).epsilon(1e-14));

    const auto sys = SystemParams::from_kappa(1.0, 2.5, -1.5);
    for (double fe : {0.1, 0.5, 1.7}) {
      // F_N^r = 0 and F_E^r > 0: (eps_b + kappa) ln M = eps_b ln N.
      const auto inv = invert_forces(fe, 0.0, 1.0, 1.0);
      const MNFactors mn =
          mn_factors(RateConstants(sys, icc_reduction(inv.beta, 1.0, inv.mu_l, 1.0, 3.0)));
      CHECK((1.0 - 1.5) * std::log(mn.M) == doctest::Approx(std::log(mn.N)).epsilon(1e-10));
    }
    oracle::Sampler s(52);
    for (int n = 0; n < 500; ++n) {
      auto p2 = s.general();
      if (p2.kappa > 0) p2.kappa = -p2.kappa;
      if (p2.beta_l < p2.beta_r) std::swap(p2.beta_l, p2.beta_r);
      const MNFactors mn = mn_factors(RateConstants(p2.sys(), p2.baths()));
      if (p2.beta_l > p2.beta_r) CHECK(mn.M > mn.N);
    }
  }

  TEST_CASE("entropy production: both macro forms, micro form and second law") {
    oracle::Sampler s(53);
    for (int n = 0; n < 1000; ++n) {
      const auto p = s.general();
      const RateConstants rc(p.sys(), p.baths());
      const SteadyState ss = steady_state(rc);
      const CurrentSet cs = currents(rc, ss);
      const MacroEntropy ma = entropy_production_macro(cs, p.baths(), forces_macro(p.baths()));
      const MicroEntropy mi = entropy_production_micro(rc, ss.rho);
      CHECK(std::abs(ma.sigma_dot - ma.decomposition_sum()) < 1e-12);
      CHECK(std::abs(ma.sigma_dot - mi.sigma_dot) < 1e-10);
      CHECK(std::abs(mi.sigma_dot + mi.phi_dot) < 1e-10);
      CHECK(ma.sigma_dot >= -1e-12);
      for (double t : mi.terms) CHECK(t >= -1e-14);
    }
  }

  TEST_CASE("frozen high-precision entropy production") {
    const oracle::Params p{1, 2.5, -1.5, 2, 0.25, 1, 1, 2, 3};
    const RateConstants rc(p.sys(), p.baths());
    const SteadyState ss = steady_state(rc);
    const MicroEntropy mi = entropy_production_micro(rc, ss.rho);
    CHECK(mi.sigma_dot == doctest::Approx(0.022564114224744739).epsilon(1e-12));
    const oracle::Params raw{0.7, 1.9, -2.2, 0.6, -0.4, 1.3, 0.9, 2.1, -1.1};
    const RateConstants rcr(raw.sys(), raw.baths());
    const CurrentSet cs = currents(rcr, steady_state(rcr));
    CHECK(entropy_production_macro(cs, raw.baths(), forces_macro(raw.baths())).sigma_dot ==
          doctest::Approx(0.14620256672504031).epsilon(1e-12));
  }

  TEST_CASE("detailed balance: no entropy production or flow") {
    oracle::Params p{1, 2.5, -1.5, 0.7, 0.4, 0.7, 0.4, 0.7, 0.4};
    const RateConstants rc(p.sys(), p.baths());
    const MicroEntropy mi = entropy_production_micro(rc, gibbs_state(p.sys(), 0.7, 0.4));
    CHECK(std::abs(mi.sigma_dot) < 1e-15);
    CHECK(std::abs(mi.phi_dot) < 1e-15);
  }

  TEST_CASE("zero populations are rejected in log terms") {
    oracle::Params p{1, 2.5, -1.5, 0.7, 0.4, 0.7, 0.4, 0.7, 0.4};
    const RateConstants rc(p.sys(), p.baths());
    CHECK_THROWS_AS(entropy_production_micro(rc, PopulationVector({1, 0, 0, 0})), NumericalError);
  }

  TEST_CASE("transient entropy balance along a relaxation") {
    oracle::Sampler s(54);
    for (int n = 0; n < 4; ++n) {
      const auto p = s.general(0.1, 0.5);
      const RateConstants rc(p.sys(), p.baths());
      const auto rho0 = gibbs_state(p.sys(), (p.beta_l + p.beta_r + p.beta_u) / 3,
                                    (p.mu_l + p.mu_r + p.mu_u) / 3);
      const auto traj = evolve(rho0, generator(rc), 1e-3, 20.0, 1);
      const auto bal = entropy_balance_transient(traj, rc);
      REQUIRE(bal.size() == traj.size() - 2);
      double worst = 0.0;
      for (const auto& b : bal) {
        worst = std::max(worst, std::abs(b.residual()));
        CHECK(b.sigma_dot >= -1e-12);
      }
      CHECK(worst < 1e-6);
    }
  }

  TEST_CASE("stationary trajectory has zero entropy change") {
    const oracle::Params p{1, 2.5, -1.5, 2, 0.25, 1, 1, 2, 3};
    const RateConstants rc(p.sys(), p.baths());
    const SteadyState ss = steady_state(rc);
    const auto traj = evolve(ss.rho, generator(rc), 1e-3, 0.1);
    for (const auto& b : entropy_balance_transient(traj, rc)) {
      CHECK(std::abs(b.dS_dt) < 1e-9);
      CHECK(std::abs(b.sigma_dot + b.phi_dot) < 1e-10);
    }
  }
}
