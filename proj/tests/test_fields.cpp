#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qf/fields.hpp"
#include "qf/states.hpp"

using namespace qf;

namespace {

const PhysicalConstants natural{};

SphericalPoint sample_point(int i) {
  return {0.4 + 4.0 * std::fmod(0.61803398875 * (i + 1), 1.0),
          0.3 + (M_PI - 0.6) * std::fmod(0.7548776662 * (i + 1), 1.0),
          2.0 * M_PI * std::fmod(0.5698402909 * (i + 1), 1.0)};
}

}  // namespace

TEST_CASE("velocity field components") {
  const VectorValue v = fields::velocity(4, 1, natural, {2.0, M_PI / 2.0, 0.3});
  CHECK(v.v_r == doctest::Approx(0.0));
  CHECK(v.v_theta == doctest::Approx(0.5));
  CHECK(v.v_phi == doctest::Approx(2.0));
  const VectorValue zero = fields::velocity(0, 0, natural, {1.0, 1.0, 0.0});
  CHECK(zero.v_theta == 0.0);
  CHECK(zero.v_phi == 0.0);
  // v_phi is minimized over theta at the equator (1/sin >= 1)
  const double at_eq = fields::velocity(3, 0, natural, {1.0, M_PI / 2.0, 0.0}).v_phi;
  for (double th : {0.3, 1.0, 2.0, 2.8})
    CHECK(fields::velocity(3, 0, natural, {1.0, th, 0.0}).v_phi >= at_eq);
  CHECK_THROWS_AS(fields::velocity(1, 1, natural, {1.0, 0.0, 0.0}), std::domain_error);
}

TEST_CASE("vector potential and gauge consistency") {
  const VectorValue a = fields::vector_potential(1, natural, {1.0, M_PI / 2.0, 0.0});
  CHECK(a.v_phi == doctest::Approx(-1.0));
  CHECK(fields::vector_potential(0, natural, {1.0, 1.0, 0.0}).v_phi == 0.0);
  // (hbar/m) grad(phi') - (q/m) A = velocity(ell, tau); grad(tau theta) is the
  // e_theta part, the vector potential supplies the e_phi part
  for (int i = 0; i < 30; ++i) {
    const SphericalPoint p = sample_point(i);
    for (int ell : {-3, 0, 2})
      for (int tau : {-2, 1}) {
        const VectorValue v = fields::velocity(ell, tau, natural, p);
        const VectorValue av = fields::vector_potential(ell, natural, p);
        const double grad_theta = natural.hbar * tau / (natural.mass * p.r);
        CHECK(v.v_theta == doctest::Approx(grad_theta).epsilon(1e-14));
        CHECK(v.v_phi ==
              doctest::Approx(-natural.charge / natural.mass * av.v_phi).epsilon(1e-14));
      }
  }
}

TEST_CASE("scalar potential values and family mapping") {
  // kappa = 0, ell = 0 -> p1 = 3, p2 = -1
  const StateSpec s = StateSpec::make_singular(0, 0, 0, 1);
  double p1, p2;
  fields::potential_params(s, p1, p2);
  CHECK(p1 == doctest::Approx(3.0));
  CHECK(p2 == doctest::Approx(-1.0));
  CHECK(fields::scalar_potential(s, natural, {1.0, M_PI / 2.0, 0.0}) ==
        doctest::Approx(-0.125));
  // p1 = p2 = 0: harmonic term only
  CHECK(fields::scalar_potential(0.0, 0.0, natural, {2.0, 1.0, 0.0}) ==
        doctest::Approx(4.0 / 8.0));
  // bounded with eps = 0 is the isotropic oscillator
  const StateSpec osc = StateSpec::make_bounded(0, 2, Triple(2, 0, 2), 1);
  fields::potential_params(osc, p1, p2);
  CHECK(p1 == 0.0);
  CHECK(p2 == 0.0);
  for (int i = 0; i < 10; ++i) {
    const SphericalPoint p = sample_point(i);
    CHECK(fields::scalar_potential(osc, natural, p) ==
          doctest::Approx(p.r * p.r / 8.0).epsilon(1e-14));
  }
}

TEST_CASE("quantum potential closed forms") {
  const StateSpec s = StateSpec::make_singular(0, 0, 0, 1);
  CHECK(fields::quantum_potential(s, natural, {1.0, M_PI / 2.0, 0.0}) ==
        doctest::Approx(0.375));
  // Hamilton-Jacobi closure at the same point: T + U + Q = E
  const fields::EnergyBundle b = fields::energy_split(s, natural, {1.0, M_PI / 2.0, 0.0});
  CHECK(b.T == doctest::Approx(0.5));
  CHECK(b.U == doctest::Approx(-0.125));
  CHECK(b.Q == doctest::Approx(0.375));
  CHECK(b.E == doctest::Approx(0.75));
  CHECK(b.E - b.T - b.V == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  // bounded-azimuthal superposition: Q = E - U everywhere
  const StateSpec rest = states::make_canonical_superposition(
      SuperposKind::BoundedAzimuthal, StateSpec::make_bounded(0, 3, Triple(3, 4, 5), 1), 1);
  for (int i = 0; i < 20; ++i) {
    const SphericalPoint p = sample_point(i);
    CHECK(fields::quantum_potential(rest, natural, p) ==
          doctest::Approx(states::energy(rest, natural) -
                          fields::scalar_potential(rest, natural, p))
              .epsilon(1e-14));
  }
  // other superpositions have no closed form
  const StateSpec az = states::make_canonical_superposition(
      SuperposKind::Azimuthal, StateSpec::make_singular(0, 1, 2, 1), 1);
  CHECK_THROWS_AS(fields::quantum_potential(az, natural, {1.0, 1.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("hamilton-jacobi identity across families") {
  std::vector<StateSpec> specs;
  for (int n : {0, 2, 4})
    for (int k : {0, 1, 4})
      for (int ell : {-3, 0, 5}) {
        specs.push_back(StateSpec::make_singular(n, k, ell, 1));
        specs.push_back(StateSpec::make_em_singular(n, k, ell, -1));
      }
  for (const Triple& t : {Triple(0, 2, 2), Triple(3, 4, 5), Triple(4, 0, 4)}) {
    specs.push_back(StateSpec::make_bounded(1, t.l + 1, t, 1));
    specs.push_back(StateSpec::make_em_bounded(0, t.l, t, -1));
  }
  for (const auto& s : specs)
    for (int i = 0; i < 60; ++i) {
      const SphericalPoint p = sample_point(i);
      const fields::EnergyBundle b = fields::energy_split(s, natural, p);
      CHECK(std::abs(b.E - b.T - b.U - b.Q) <=
            1e-12 * std::max({1.0, std::abs(b.T), std::abs(b.U)}));
      CHECK(b.V == b.U + b.Q);
    }
  // the rest superposition has zero kinetic energy
  const StateSpec rest = states::make_canonical_superposition(
      SuperposKind::BoundedAzimuthal, StateSpec::make_bounded(1, 3, Triple(3, 4, 5), 1), -1);
  for (int i = 0; i < 10; ++i) {
    const fields::EnergyBundle b = fields::energy_split(rest, natural, sample_point(i));
    CHECK(b.T == 0.0);
    CHECK(b.E - b.U - b.Q == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  }
}

TEST_CASE("dissipation density") {
  CHECK(fields::dissipation_density(1, natural, {1.0, M_PI / 2.0, 0.0}) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(fields::dissipation_density(1, natural, {1.0, M_PI / 4.0, 0.0}) ==
        doctest::Approx(1.0).epsilon(1e-14));
  for (int i = 0; i < 20; ++i) {
    const SphericalPoint p = sample_point(i);
    CHECK(fields::dissipation_density(2, natural, p) ==
          doctest::Approx(-fields::dissipation_density(2, natural,
                                                       {p.r, M_PI - p.theta, p.phi}))
              .epsilon(1e-12));
  }
}

TEST_CASE("current density") {
  // double superposition: zero vector everywhere
  const StateSpec dbl = states::make_canonical_superposition(
      SuperposKind::Double, StateSpec::make_singular(0, 1, 2, 1), 1);
  for (int i = 0; i < 20; ++i) {
    const VectorValue j = fields::current_density(dbl, natural, sample_point(i));
    CHECK(j.v_theta == 0.0);
    CHECK(j.v_phi == 0.0);
  }
  // singular state: J_phi / J_theta = ell / (tau sin theta)
  const StateSpec s = StateSpec::make_singular(1, 1, 3, 1);
  for (int i = 0; i < 20; ++i) {
    const SphericalPoint p = sample_point(i);
    const VectorValue j = fields::current_density(s, natural, p);
    CHECK(j.v_phi / j.v_theta ==
          doctest::Approx(3.0 / (2.0 * std::sin(p.theta))).epsilon(1e-12));
  }
  // em-singular: canonical current carries only the e_theta component
  const StateSpec em = StateSpec::make_em_singular(1, 1, 3, 1);
  for (int i = 0; i < 20; ++i) {
    const VectorValue j = fields::current_density(em, natural, sample_point(i));
    CHECK(j.v_phi == 0.0);
    CHECK(j.v_theta != 0.0);
  }
}

TEST_CASE("force balance of the bounded family") {
  for (int i = 0; i < 40; ++i) {
    const SphericalPoint p = sample_point(i);
    for (int eps : {0, 2, 4})
      for (int ell : {0, 2, 5}) {
        const fields::ForceBundle f = fields::forces(eps, ell, natural, p);
        // F_U + F_Q = 0 exactly
        CHECK(f.F_U.v_r + f.F_Q.v_r == 0.0);
        CHECK(f.F_U.v_theta + f.F_Q.v_theta == 0.0);
        // m a_c = F_Q_rot + F_U
        CHECK(std::abs(natural.mass * f.a_c.v_r - f.F_Q_rot.v_r - f.F_U.v_r) <= 1e-12);
        CHECK(std::abs(natural.mass * f.a_c.v_theta - f.F_Q_rot.v_theta -
                       f.F_U.v_theta) <= 1e-12);
      }
  }
  // |a_c| = hbar^2 ell^2 / (m^2 rho^3), directed toward the axis
  const fields::ForceBundle f =
      fields::forces(1, 2, natural, {1.0, M_PI / 2.0, 0.7});
  CHECK(std::hypot(f.a_c.v_r, f.a_c.v_theta) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(f.a_c.v_r < 0.0);
}

TEST_CASE("circulation quantization") {
  const auto res = fields::circulation(2, natural, 1.3, 1.1);
  CHECK(res.analytic == doctest::Approx(4.0 * M_PI));
  CHECK(res.numeric == doctest::Approx(res.analytic).epsilon(1e-10));
  CHECK(fields::circulation(0, natural, 0.5, 1.0).numeric ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  // independence of the loop geometry
  const double a = fields::circulation(3, natural, 0.5, 0.9).numeric;
  const double b = fields::circulation(3, natural, 3.0, 2.0).numeric;
  CHECK(a == doctest::Approx(b).epsilon(1e-10));
  CHECK_THROWS_AS(fields::circulation(1, natural, -1.0, 1.0), std::domain_error);
}

TEST_CASE("magnetic charge quantization") {
  CHECK(fields::magnetic_charge(0, natural) == 0.0);
  CHECK(fields::magnetic_charge(1, natural) == doctest::Approx(2.0 * M_PI));
  // q_m q_e = h ell matches the circulation value
  for (int ell : {-2, 1, 3}) {
    CHECK(fields::magnetic_charge(ell, natural) * natural.charge ==
          doctest::Approx(fields::circulation(ell, natural, 1.0, 1.2).analytic));
  }
}

TEST_CASE("characteristics") {
  const auto c0 = fields::characteristics(4, 1, natural, {1.0, M_PI / 4.0, 0.0}, 0.0);
  REQUIRE(c0.xi.has_value());
  CHECK(*c0.xi == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(c0.eta == doctest::Approx(M_PI / 4.0));
  const auto c1 = fields::characteristics(1, 1, natural, {2.0, 1.0, 0.0}, 0.0);
  CHECK(c1.omega == doctest::Approx(0.25));
  const auto c2 = fields::characteristics(3, 0, natural, {1.0, 1.0, 0.2}, 0.5);
  CHECK_FALSE(c2.xi.has_value());
  CHECK(c2.zeta == doctest::Approx(0.2 - 3.0 * 0.5 / std::pow(std::sin(1.0), 2))
                       .epsilon(1e-14));
}

TEST_CASE("streamlines") {
  // tau = 0: latitude circle, theta constant over a revolution
  const auto lat = fields::trace_streamline(2, 0, natural, {1.5, 1.0, 0.0}, 1e-3, 6000);
  for (const auto& p : lat.points) {
    CHECK(p.r == 1.5);
    CHECK(p.theta == doctest::Approx(1.0).epsilon(1e-8));
  }
  // ell = 0: meridian, phi constant
  const auto mer = fields::trace_streamline(0, 1, natural, {1.0, 0.4, 0.7}, 1e-3, 2000);
  for (const auto& p : mer.points) CHECK(p.phi == doctest::Approx(0.7).epsilon(1e-8));
  // spiral follows the characteristic xi = phi + (ell/tau) cot theta
  const auto spiral =
      fields::trace_streamline(4, 1, natural, {1.0, M_PI / 2.0, 0.0}, 1e-3, 3000);
  const double xi0 = *fields::characteristics(4, 1, natural, spiral.points.front(), 0.0).xi;
  for (const auto& p : spiral.points) {
    const double xi = *fields::characteristics(4, 1, natural, p, 0.0).xi;
    CHECK(xi == doctest::Approx(xi0).epsilon(1e-5).scale(1.0));
  }
  CHECK_THROWS_AS(fields::trace_streamline(0, 0, natural, {1.0, 1.0, 0.0}, 1e-3, 10),
                  std::invalid_argument);
}
