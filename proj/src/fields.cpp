#include "qf/fields.hpp"

#include <cmath>
#include <stdexcept>

#include "qf/states.hpp"

namespace qf::fields {

namespace {

void check_off_axis(const SphericalPoint& p) {
  if (!(p.r > 0.0)) throw std::domain_error("fields: requires r > 0");
  if (!(std::sin(p.theta) > 0.0))
    throw std::domain_error("fields: point on the polar axis");
}

double sq(double v) { return v * v; }

}  // namespace

VectorValue velocity(int ell, int tau, const PhysicalConstants& c, const SphericalPoint& p) {
  check_off_axis(p);
  const double k = c.hbar / c.mass;
  VectorValue v;
  v.v_theta = k * tau / p.r;
  v.v_phi = k * ell / (p.r * std::sin(p.theta));
  return v;
}

VectorValue vector_potential(int ell, const PhysicalConstants& c, const SphericalPoint& p) {
  check_off_axis(p);
  VectorValue a;
  a.v_phi = -c.hbar * ell / (c.charge * p.r * std::sin(p.theta));
  return a;
}

double scalar_potential(double p1, double p2, const PhysicalConstants& c,
                        const SphericalPoint& p) {
  if (!(p.r > 0.0)) throw std::domain_error("scalar_potential: requires r > 0");
  if (p2 != 0.0 && !(std::sin(p.theta) > 0.0))
    throw std::domain_error("scalar_potential: point on the polar axis");
  const double s2 = c.sigma_r * c.sigma_r;
  const double scale = c.hbar * c.hbar / (8.0 * c.mass * s2);
  const double r2 = p.r * p.r;
  double u = r2 / s2 - p1 * s2 / r2;
  if (p2 != 0.0) u -= p2 * s2 / (r2 * sq(std::sin(p.theta)));
  return scale * u;
}

void potential_params(const StateSpec& spec, double& p1, double& p2) {
  if (spec.is_singular_kind()) {
    const auto& q = spec.singular();
    p1 = 4.0 * q.kappa + 3.0;
    p2 = 4.0 * q.ell * q.ell - 1.0;
  } else {
    const auto& q = spec.bounded();
    p1 = 0.0;
    p2 = 4.0 * q.eps() * q.eps();
  }
}

double scalar_potential(const StateSpec& spec, const PhysicalConstants& c,
                        const SphericalPoint& p) {
  double p1, p2;
  potential_params(spec, p1, p2);
  return scalar_potential(p1, p2, c, p);
}

double quantum_potential(const StateSpec& spec, const PhysicalConstants& c,
                         const SphericalPoint& p) {
  check_off_axis(p);
  const double s2 = c.sigma_r * c.sigma_r;
  const double scale = c.hbar * c.hbar / (8.0 * c.mass * s2);
  const double r2 = p.r * p.r;
  const double sin2 = sq(std::sin(p.theta));

  if (spec.superposition) {
    if (spec.superposition->kind != SuperposKind::BoundedAzimuthal)
      throw std::invalid_argument("quantum_potential: no closed form for this superposition");
    // Q_{n,s}^{(eps)} = E - U^{(eps)} for the rest state
    return states::energy(spec, c) - scalar_potential(spec, c, p);
  }

  if (spec.is_singular_kind()) {
    const auto& q = spec.singular();
    return -scale * (r2 / s2 + (4.0 * q.kappa * (q.kappa + 1.0) + 1.0) * s2 / r2 +
                     s2 / (r2 * sin2) - 8.0 * q.n - 4.0 * q.kappa - 6.0);
  }
  const auto& q = spec.bounded();
  return -scale * (r2 / s2 + 4.0 * q.l() * q.l() * s2 / (r2 * sin2) - 8.0 * q.n -
                   4.0 * q.s - 6.0);
}

EnergyBundle energy_split(const StateSpec& spec, const PhysicalConstants& c,
                          const SphericalPoint& p) {
  const states::Winding w = states::hj_winding(spec);
  EnergyBundle b;
  const double k = c.hbar * c.hbar / (2.0 * c.mass * p.r * p.r);
  b.T = k * (sq(static_cast<double>(w.ell)) / sq(std::sin(p.theta)) +
             sq(static_cast<double>(w.tau)));
  b.U = scalar_potential(spec, c, p);
  b.Q = quantum_potential(spec, c, p);
  b.V = b.U + b.Q;
  b.E = states::energy(spec, c);
  return b;
}

double dissipation_density(int tau, const PhysicalConstants& c, const SphericalPoint& p) {
  check_off_axis(p);
  return c.hbar * tau / (c.mass * p.r * p.r) * (std::cos(p.theta) / std::sin(p.theta));
}

VectorValue current_density(const StateSpec& spec, const PhysicalConstants& c,
                            const SphericalPoint& p) {
  const states::Winding w = states::current_winding(spec);
  const double f = states::density(spec, c, p);
  VectorValue v = velocity(w.ell, w.tau, c, p);
  v.v_r *= c.charge * f;
  v.v_theta *= c.charge * f;
  v.v_phi *= c.charge * f;
  return v;
}

ForceBundle forces(int eps, int ell, const PhysicalConstants& c, const SphericalPoint& p) {
  check_off_axis(p);
  const double h2m = c.hbar * c.hbar / c.mass;
  const double rho = p.r * std::sin(p.theta);
  const double radial = c.hbar * c.hbar * p.r / (4.0 * c.mass * std::pow(c.sigma_r, 4));
  const double axis_u = h2m * eps * eps / (rho * rho * rho);
  const double axis_l = h2m * ell * ell / (rho * rho * rho);
  const double sin_t = std::sin(p.theta), cos_t = std::cos(p.theta);

  ForceBundle f;
  // e_rho = e_r sin(theta) + e_theta cos(theta)
  f.F_U.v_r = -radial - axis_u * sin_t;
  f.F_U.v_theta = -axis_u * cos_t;
  f.F_Q.v_r = -f.F_U.v_r;
  f.F_Q.v_theta = -f.F_U.v_theta;
  f.F_Q_rot.v_r = f.F_Q.v_r - axis_l * sin_t;
  f.F_Q_rot.v_theta = f.F_Q.v_theta - axis_l * cos_t;
  const double acc = axis_l / c.mass;
  f.a_c.v_r = -acc * sin_t;
  f.a_c.v_theta = -acc * cos_t;
  return f;
}

CirculationResult circulation(int ell, const PhysicalConstants& c, double rho, double theta,
                              int segments) {
  if (!(rho > 0.0)) throw std::domain_error("circulation: requires rho > 0");
  if (segments < 8) throw std::invalid_argument("circulation: too few segments");
  const double r = rho / std::sin(theta);
  // Chord-summed polygon line integral of <p> = m <v> around the circle,
  // momentum evaluated at segment midpoints; Kahan-compensated accumulation.
  double sum = 0.0, comp = 0.0;
  const double dphi = 2.0 * M_PI / segments;
  for (int k = 0; k < segments; ++k) {
    const double phi0 = k * dphi;
    const double phi1 = phi0 + dphi;
    const double phim = phi0 + 0.5 * dphi;
    const VectorValue v = velocity(ell, 0, c, {r, theta, phim});
    // Cartesian momentum at the midpoint (e_phi direction only; e_theta of a
    // tau-component would cancel over the closed loop by symmetry).
    const double px = -c.mass * v.v_phi * std::sin(phim);
    const double py = c.mass * v.v_phi * std::cos(phim);
    const double dx = rho * (std::cos(phi1) - std::cos(phi0));
    const double dy = rho * (std::sin(phi1) - std::sin(phi0));
    const double term = px * dx + py * dy;
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return {sum, 2.0 * M_PI * c.hbar * ell};
}

double magnetic_charge(int ell, const PhysicalConstants& c) {
  return 2.0 * M_PI * c.hbar * ell / c.charge;
}

Characteristics characteristics(int ell, int tau, const PhysicalConstants& c,
                                const SphericalPoint& p, double t) {
  check_off_axis(p);
  Characteristics out;
  const double r2 = p.r * p.r;
  if (tau != 0) {
    out.xi = p.phi + static_cast<double>(ell) / tau * (std::cos(p.theta) / std::sin(p.theta));
    out.omega = c.hbar * tau / (c.mass * r2);
  }
  out.eta = p.theta - out.omega * t;
  out.zeta = p.phi - c.hbar * ell * t / (c.mass * r2 * sq(std::sin(p.theta)));
  return out;
}

Streamline trace_streamline(int ell, int tau, const PhysicalConstants& c,
                            SphericalPoint start, double step, int n_steps,
                            double theta_min) {
  (void)c;  // unit-speed parametrization; hbar/m scales out of the direction
  if (ell == 0 && tau == 0)
    throw std::invalid_argument("trace_streamline: zero velocity field");
  if (!(step > 0.0)) throw std::invalid_argument("trace_streamline: step must be positive");
  check_off_axis(start);

  const double r = start.r;
  // Unit-speed flow on the sphere: d(theta)/ds = v_theta / (r |v|),
  // d(phi)/ds = v_phi / (r sin(theta) |v|).
  auto rhs = [&](double theta, double& dtheta, double& dphi) {
    const double s = std::sin(theta);
    const double norm = std::sqrt(static_cast<double>(tau) * tau +
                                  static_cast<double>(ell) * ell / (s * s));
    dtheta = tau / (r * norm);
    dphi = ell / (r * s * s * norm);
  };

  Streamline line;
  line.step = step;
  line.points.push_back(start);
  double theta = start.theta, phi = start.phi;
  for (int i = 0; i < n_steps; ++i) {
    double k1t, k1p, k2t, k2p, k3t, k3p, k4t, k4p;
    rhs(theta, k1t, k1p);
    rhs(theta + 0.5 * step * k1t, k2t, k2p);
    rhs(theta + 0.5 * step * k2t, k3t, k3p);
    rhs(theta + step * k3t, k4t, k4p);
    theta += step / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
    phi += step / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    if (theta <= theta_min || theta >= M_PI - theta_min) break;
    line.points.push_back({r, theta, phi});
  }
  if (line.points.size() > 2) {
    const auto& a = line.points.front();
    const auto& b = line.points.back();
    const double dphi = std::remainder(b.phi - a.phi, 2.0 * M_PI);
    line.closed = std::abs(b.theta - a.theta) < 1e-6 && std::abs(dphi) < step / r;
  }
  return line;
}

}  // namespace qf::fields
