#pragma once

#include "qf/types.hpp"

namespace qf::states {

/// Evaluate the wave function of `spec` at point `p` and time `t`.
/// Superpositions evaluate as coefficient-weighted sums of branch amplitudes.
complexd eval_psi(const StateSpec& spec, const PhysicalConstants& c,
                  const SphericalPoint& p, double t = 0.0);

/// |psi|^2, via the closed forms where the paper gives one (pure states and
/// the canonical +/- superpositions), otherwise |eval_psi|^2. Agrees with
/// |eval_psi|^2 identically in either route.
double density(const StateSpec& spec, const PhysicalConstants& c, const SphericalPoint& p);

/// Energy eigenvalue; identical for every branch of a superposition.
double energy(const StateSpec& spec, const PhysicalConstants& c);

/// Attach a superposition of the given kind to a pure base state.
/// Coefficients must satisfy sum |c_i|^2 = 1 within 1e-12; the pair kinds take
/// two coefficients, the double kind four (branch order per Superposition).
StateSpec make_superposition(SuperposKind kind, const StateSpec& base,
                             const std::vector<complexd>& coeffs);

/// Canonical superposition with c = (1/sqrt2, sign/sqrt2) (pair kinds) or the
/// cos*cos / sin*sin combination (double kind), sign = +1 or -1.
StateSpec make_canonical_superposition(SuperposKind kind, const StateSpec& base, int sign);

/// Phase ell*phi + tau*theta - E t / hbar of a pure state (or its EM-gauge
/// variant without the ell*phi term). Rejects superposed states.
double phase_field(const StateSpec& spec, const PhysicalConstants& c,
                   const SphericalPoint& p, double t = 0.0);

/// Winding numbers (ell, tau) of the probability-current velocity field.
/// Superpositions map to their effective values (azimuthal -> ell = 0, axial
/// -> tau = 0, double -> both 0); EM families keep only the phase part, their
/// vortex lives in the vector potential.
struct Winding {
  int ell = 0;
  int tau = 0;
};
Winding current_winding(const StateSpec& spec);

/// Winding numbers entering the kinetic energy of the Hamilton-Jacobi split.
/// For EM families this includes the vector-potential contribution, so it
/// equals the non-EM (ell, tau) of the same physical system.
Winding hj_winding(const StateSpec& spec);

/// Radial structure shared by quadrature code: density(p) =
/// density_radial_poly(r) * r^{2a} e^{-2 nu r^2} * density_angular(theta, phi)
/// with a = radial_exponent. Splitting this way keeps the envelope inside
/// quadrature weights and avoids under/overflow at large nodes.
int radial_exponent(const StateSpec& spec);
double density_radial_poly(const StateSpec& spec, const PhysicalConstants& c, double r);
double density_angular(const StateSpec& spec, const SphericalPoint& p);

/// Validate family/QN pairing, coefficient normalization, admissible
/// superposition kind. Throws std::invalid_argument on violations.
void validate(const StateSpec& spec);

}  // namespace qf::states
