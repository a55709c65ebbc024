#include <doctest.h>

#include <cmath>
#include <limits>

#include "qdicc/error.hpp"
#include "qdicc/model.hpp"
#include "support.hpp"

using namespace qdicc;

TEST_SUITE("model") {
  TEST_CASE("eigenenergies by direct substitution") {
    const auto e_neg = eigenenergies(SystemParams::from_kappa(1.0, 2.5, -1.5));
    CHECK(e_neg == Eigenenergies{0.0, 1.0, 2.5, 2.0});
    const auto e_pos = eigenenergies(SystemParams::from_kappa(1.0, 2.5, 1.5));
    CHECK(e_pos == Eigenenergies{0.0, 1.0, 2.5, 5.0});
  }

  TEST_CASE("level swap when |kappa| exceeds eps_b for negative kappa") {
    const auto sys = SystemParams::from_kappa(1.0, 2.5, -1.5);
    const auto e = eigenenergies(sys);
    CHECK(sys.level_swapped());
    CHECK(e[index(State::D)] < e[index(State::C)]);
    CHECK_FALSE(SystemParams::from_kappa(1.0, 2.5, -0.5).level_swapped());
    CHECK_FALSE(SystemParams::from_kappa(1.0, 2.5, 1.5).level_swapped());
  }

  TEST_CASE("transition energies") {
    const auto t = transition_energies(SystemParams::from_kappa(1.0, 2.5, -1.5));
    CHECK(t.omega_ab() == 1.0);
    CHECK(t.omega_ac() == 2.5);
    CHECK(t.omega_cd() == -0.5);
    CHECK(t.omega_bd() == 1.0);
    const auto tp = transition_energies(SystemParams::from_kappa(1.0, 2.5, 1.5));
    CHECK(tp.omega_cd() == 2.5);
    CHECK(tp.omega_bd() == 4.0);

    oracle::Sampler s(11);
    for (int n = 0; n < 200; ++n) {
      const auto p = s.general();
      const auto tt = transition_energies(p.sys());
      CHECK(tt.omega_ac() - tt.omega_ab() == doctest::Approx(p.eps_u - p.eps_b).epsilon(1e-12));
      CHECK(tt.omega_bd() - tt.omega_cd() == doctest::Approx(p.eps_u - p.eps_b).epsilon(1e-12));
      // Sign follows the defining linear form with no clamping.
      CHECK((tt.omega_cd() < 0) == (p.eps_b + p.kappa < 0));
    }
  }

  TEST_CASE("allowed couplings") {
    CHECK(couples(State::A, State::B, Lead::L));
    CHECK(couples(State::D, State::C, Lead::R));
    CHECK(couples(State::C, State::A, Lead::U));
    CHECK(couples(State::B, State::D, Lead::U));
    CHECK_FALSE(couples(State::A, State::B, Lead::U));
    CHECK_FALSE(couples(State::A, State::C, Lead::L));
    for (Lead l : kLeads) {
      CHECK_FALSE(couples(State::B, State::C, l));
      CHECK_FALSE(couples(State::A, State::D, l));
    }
  }

  TEST_CASE("construction errors") {
    CHECK_THROWS_AS(SystemParams::from_kappa(2.0, 1.0, 0.5), PhysicsError);
    CHECK_THROWS_AS(SystemParams::from_kappa(1.0, 1.0, 0.5), PhysicsError);
    CHECK_THROWS_AS(SystemParams::from_kappa(0.0, 1.0, 0.5), PhysicsError);
    CHECK_THROWS_AS(SystemParams::from_components(1.0, 2.0, -0.1, 0.0), PhysicsError);
    CHECK_THROWS_AS(Reservoir(Lead::L, 0.0, 0.0), PhysicsError);
    CHECK_THROWS_AS(Reservoir(Lead::L, 1.0, 0.0, 0.0), PhysicsError);
    const Reservoir l(Lead::L, 1, 0), r(Lead::R, 1, 0), u(Lead::U, 1, 0);
    CHECK_THROWS_AS(BathConfig(r, l, u), PhysicsError);
    CHECK_THROWS_AS(SystemParams::from_kappa(1.0, 2.0, 0.0).theta(), PhysicsError);
  }

  TEST_CASE("kappa from components") {
    const auto sys = SystemParams::from_components(1.0, 2.5, 0.5, 2.0);
    CHECK(sys.kappa() == -1.5);
    CHECK(sys.kappa_c().value() == 0.5);
    CHECK(sys.theta() == doctest::Approx(-1.0 / 1.5));
    CHECK_FALSE(SystemParams::from_kappa(1.0, 2.5, -1.5).kappa_c().has_value());
  }

  TEST_CASE("degenerate transition flag") {
    CHECK(SystemParams::from_kappa(1.0, 2.5, -1.0).degenerate_transition());
    CHECK_FALSE(SystemParams::from_kappa(1.0, 2.5, -1.5).degenerate_transition());
  }

  TEST_CASE("Fermi functions") {
    const Reservoir res(Lead::R, 1.0, 1.0);
    CHECK(fermi_plus(res, 1.0) == 0.5);
    CHECK(fermi_minus(res, -1.0) == 0.5);
    // Independent 50-digit evaluation of 1/(1+e^-1.5).
    CHECK(fermi_plus(res, -0.5) == doctest::Approx(0.81757447619364366).epsilon(1e-15));
    CHECK(fermi_minus(res, 0.5) == doctest::Approx(1.0 - 0.81757447619364366).epsilon(1e-14));

    oracle::Sampler s(5);
    for (int n = 0; n < 500; ++n) {
      const Reservoir r(Lead::L, s.uniform(0.1, 5), s.uniform(-3, 3));
      const double w = s.uniform(-6, 6);
      const double fp = fermi_plus(r, w);
      CHECK(fp == doctest::Approx((double)oracle::fermi(r.beta, r.mu, w)).epsilon(1e-14));
      CHECK(fp + fermi_minus(r, -w) == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(fermi_minus(r, w) == doctest::Approx(1.0 - fermi_plus(r, -w)).epsilon(1e-12));
      // Strictly decreasing until the value saturates at a double boundary.
      CHECK(fermi_plus(r, w + 0.01) <= fp);
      if (fp > 1e-300 && fp < 1.0 - 1e-12) CHECK(fermi_plus(r, w + 0.01) < fp);
    }
  }

  TEST_CASE("Fermi functions stay finite for large exponents") {
    const Reservoir cold(Lead::U, 50.0, 0.0);
    CHECK(fermi_plus(cold, 10.0) > 0.0);
    CHECK(fermi_plus(cold, 10.0) == doctest::Approx(std::exp(-500.0)).epsilon(1e-13));
    CHECK(fermi_minus(cold, 10.0) == doctest::Approx(std::exp(-500.0)).epsilon(1e-13));
    CHECK(fermi_plus(cold, -10.0) == 1.0);
    // Far beyond the double range the value underflows to zero, never NaN.
    const Reservoir frozen(Lead::U, 1000.0, 0.0);
    CHECK(fermi_plus(frozen, 10.0) == 0.0);
    CHECK(fermi_minus(frozen, 10.0) == 0.0);
    CHECK_THROWS_AS(fermi_plus(cold, std::numeric_limits<double>::infinity()), PhysicsError);
    CHECK_THROWS_AS(fermi_minus(cold, std::nan("")), PhysicsError);
  }
}
