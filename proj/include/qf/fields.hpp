#pragma once

#include <optional>
#include <vector>

#include "qf/types.hpp"

namespace qf::fields {

/// Kinetic / potential / quantum-potential split at a point. V = U + Q and
/// E = T + V hold for every state the split is defined for.
struct EnergyBundle {
  double T = 0.0;
  double U = 0.0;
  double Q = 0.0;
  double V = 0.0;
  double E = 0.0;
};

struct ForceBundle {
  VectorValue F_U;      // -grad U^{(eps)}
  VectorValue F_Q;      // -grad Q^{(eps)} = -F_U
  VectorValue F_Q_rot;  // -grad Q_{n,s}^{(l)} = F_Q - hbar^2 ell^2/(m rho^3) e_rho
  VectorValue a_c;      // centripetal-analogue acceleration
};

struct Characteristics {
  std::optional<double> xi;  // phi + (ell/tau) cot(theta); absent when tau = 0
  double eta = 0.0;          // theta - omega_tau(r) t
  double omega = 0.0;        // hbar tau / (m r^2)
  double zeta = 0.0;         // phi - hbar ell t / (m r^2 sin^2 theta)
};

struct Streamline {
  std::vector<SphericalPoint> points;
  double step = 0.0;
  bool closed = false;
};

struct CirculationResult {
  double numeric = 0.0;
  double analytic = 0.0;  // 2 pi hbar ell
};

/// Probability-flux velocity (1.17): (hbar/m)(tau/r) e_theta +
/// (hbar/m)(ell/(r sin theta)) e_phi.
VectorValue velocity(int ell, int tau, const PhysicalConstants& c, const SphericalPoint& p);

/// Vector potential of the vortex component: A = -hbar ell/(q r sin theta) e_phi.
VectorValue vector_potential(int ell, const PhysicalConstants& c, const SphericalPoint& p);

/// Two-parameter funnel potential
/// U^{(p1,p2)} = hbar^2/(8 m sigma^2) [r^2/sigma^2 - p1 sigma^2/r^2
///               - p2 sigma^2/(r^2 sin^2 theta)].
double scalar_potential(double p1, double p2, const PhysicalConstants& c,
                        const SphericalPoint& p);

/// (p1, p2) of the family behind `spec`: singular -> (4 kappa + 3, 4 ell^2 - 1),
/// bounded -> (0, 4 eps^2).
void potential_params(const StateSpec& spec, double& p1, double& p2);

/// Potential U of the state's own family at p.
double scalar_potential(const StateSpec& spec, const PhysicalConstants& c,
                        const SphericalPoint& p);

/// Quantum potential: closed forms for pure states of both families (EM
/// variants share them) and for the bounded-azimuthal superposition
/// (Q = E - U). Other superpositions have no closed form and are rejected.
double quantum_potential(const StateSpec& spec, const PhysicalConstants& c,
                         const SphericalPoint& p);

/// T, U, Q, V = U + Q, E with E = T + V; defined for pure states and the
/// bounded-azimuthal superposition.
EnergyBundle energy_split(const StateSpec& spec, const PhysicalConstants& c,
                          const SphericalPoint& p);

/// Dissipation source Q_1 = (hbar tau / m r^2) cot(theta).
double dissipation_density(int tau, const PhysicalConstants& c, const SphericalPoint& p);

/// Probability current J = q * density * velocity (current winding).
VectorValue current_density(const StateSpec& spec, const PhysicalConstants& c,
                            const SphericalPoint& p);

/// Forces of the bounded family, Eqs. of the force-balance discussion.
ForceBundle forces(int eps, int ell, const PhysicalConstants& c, const SphericalPoint& p);

/// Circulation of the mean momentum around the axis on the circle of
/// cylindrical radius rho at polar angle theta: chord-summed numeric line
/// integral plus the analytic value 2 pi hbar ell.
CirculationResult circulation(int ell, const PhysicalConstants& c, double rho, double theta,
                              int segments = 1 << 18);

/// Magnetic charge of the Dirac-string field: q_m = 2 pi hbar ell / q_e.
double magnetic_charge(int ell, const PhysicalConstants& c);

Characteristics characteristics(int ell, int tau, const PhysicalConstants& c,
                                const SphericalPoint& p, double t);

/// Fixed-step classical 4th-order integration of the unit-speed flow of
/// velocity (1.17) on the sphere r = start.r. Terminates early when theta
/// leaves (theta_min, pi - theta_min).
Streamline trace_streamline(int ell, int tau, const PhysicalConstants& c,
                            SphericalPoint start, double step, int n_steps,
                            double theta_min = 1e-3);

}  // namespace qf::fields
