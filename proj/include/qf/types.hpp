#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace qf {

using complexd = std::complex<double>;

/// Physical constants of the model. Natural units (hbar = m = sigma_r = q = 1)
/// by default; nu and the Bohr magneton are always derived, never stored.
struct PhysicalConstants {
  double hbar = 1.0;
  double mass = 1.0;
  double sigma_r = 1.0;
  double charge = 1.0;

  double nu() const { return 1.0 / (4.0 * sigma_r * sigma_r); }
  double mu_bohr() const { return charge * hbar / (2.0 * mass); }

  void validate() const {
    if (!(hbar > 0.0) || !(mass > 0.0) || !(sigma_r > 0.0))
      throw std::invalid_argument("PhysicalConstants: hbar, mass, sigma_r must be positive");
  }
};

/// Point in spherical coordinates (r, theta, phi), r > 0, theta in (0, pi).
struct SphericalPoint {
  double r;
  double theta;
  double phi;
};

/// Vector in the local orthonormal spherical basis (e_r, e_theta, e_phi).
struct VectorValue {
  double v_r = 0.0;
  double v_theta = 0.0;
  double v_phi = 0.0;
};

/// Integer triple (l, eps, ell) with l^2 + eps^2 = ell^2. Degenerate cases
/// (l = 0 or eps = 0) are admitted; strict Pythagorean triples have all
/// entries positive.
struct Triple {
  int l = 0;
  int eps = 0;
  int ell = 0;

  Triple() = default;
  Triple(int l_, int eps_, int ell_) : l(l_), eps(eps_), ell(ell_) {
    if (l < 0 || eps < 0 || ell < 0)
      throw std::invalid_argument("Triple: entries must be non-negative");
    if (l * l + eps * eps != ell * ell)
      throw std::invalid_argument("Triple: l^2 + eps^2 != ell^2");
  }
};

enum class AngularFamily { Axial, Pythagorean, Oscillator, Invalid };

/// Quantum numbers of the singular family. tau is derived: |tau| = kappa + 1.
struct SingularQN {
  int n = 0;         // radial number
  int kappa = 0;     // potential strength index, kappa >= 0
  int ell = 0;       // azimuthal winding, any integer
  int tau_sign = 1;  // +1 or -1

  int tau() const { return tau_sign * (kappa + 1); }

  void validate() const {
    if (n < 0 || kappa < 0)
      throw std::invalid_argument("SingularQN: n, kappa must be non-negative");
    if (tau_sign != 1 && tau_sign != -1)
      throw std::invalid_argument("SingularQN: tau_sign must be +1 or -1");
  }
};

/// Quantum numbers of the bounded family. The triple houses eps and ell;
/// the Legendre order l satisfies 0 <= l <= s and l matches the triple.
struct BoundedQN {
  int n = 0;
  int s = 0;
  Triple triple;
  int ell_sign = 1;

  int l() const { return triple.l; }
  int eps() const { return triple.eps; }
  int ell() const { return ell_sign * triple.ell; }

  void validate() const {
    if (n < 0 || s < 0)
      throw std::invalid_argument("BoundedQN: n, s must be non-negative");
    if (triple.l > s)
      throw std::invalid_argument("BoundedQN: requires l <= s");
    if (ell_sign != 1 && ell_sign != -1)
      throw std::invalid_argument("BoundedQN: ell_sign must be +1 or -1");
  }
};

enum class Family { Singular, Bounded, EmSingular, EmBounded };

enum class SuperposKind { Azimuthal, Axial, Double, EmAxial, BoundedAzimuthal };

/// Optional superposition attached to a base state. Coefficient order follows
/// the branch convention: (c1 with +ell, c2 with -ell) for azimuthal kinds,
/// (c3 with +tau, c4 with -tau) for axial kinds, and
/// [(+ell,+tau), (+ell,-tau), (-ell,+tau), (-ell,-tau)] for the double kind.
struct Superposition {
  SuperposKind kind;
  std::vector<complexd> c;
};

struct StateSpec {
  Family family = Family::Singular;
  std::variant<SingularQN, BoundedQN> qn;
  std::optional<Superposition> superposition;

  bool is_em() const { return family == Family::EmSingular || family == Family::EmBounded; }
  bool is_singular_kind() const {
    return family == Family::Singular || family == Family::EmSingular;
  }
  const SingularQN& singular() const { return std::get<SingularQN>(qn); }
  const BoundedQN& bounded() const { return std::get<BoundedQN>(qn); }

  static StateSpec make_singular(int n, int kappa, int ell, int tau_sign = 1);
  static StateSpec make_em_singular(int n, int kappa, int ell, int tau_sign = 1);
  static StateSpec make_bounded(int n, int s, Triple t, int ell_sign = 1);
  static StateSpec make_em_bounded(int n, int s, Triple t, int ell_sign = 1);
};

}  // namespace qf
