#include "qf/states.hpp"

#include <cmath>
#include <stdexcept>

#include "qf/specfun.hpp"

namespace qf {

StateSpec StateSpec::make_singular(int n, int kappa, int ell, int tau_sign) {
  StateSpec s;
  s.family = Family::Singular;
  s.qn = SingularQN{n, kappa, ell, tau_sign};
  states::validate(s);
  return s;
}

StateSpec StateSpec::make_em_singular(int n, int kappa, int ell, int tau_sign) {
  StateSpec s;
  s.family = Family::EmSingular;
  s.qn = SingularQN{n, kappa, ell, tau_sign};
  states::validate(s);
  return s;
}

StateSpec StateSpec::make_bounded(int n, int s_, Triple t, int ell_sign) {
  StateSpec s;
  s.family = Family::Bounded;
  s.qn = BoundedQN{n, s_, t, ell_sign};
  states::validate(s);
  return s;
}

StateSpec StateSpec::make_em_bounded(int n, int s_, Triple t, int ell_sign) {
  StateSpec s;
  s.family = Family::EmBounded;
  s.qn = BoundedQN{n, s_, t, ell_sign};
  states::validate(s);
  return s;
}

}  // namespace qf

namespace qf::states {

namespace {

constexpr double kPoleMargin = 1e-9;

struct Branch {
  int ell;  // azimuthal winding of this branch's phase
  int tau;  // polar winding of this branch's phase
};

// Phase windings of the pure state underlying `spec` (no superposition).
Branch base_branch(const StateSpec& spec) {
  switch (spec.family) {
    case Family::Singular: {
      const auto& q = spec.singular();
      return {q.ell, q.tau()};
    }
    case Family::EmSingular: {
      const auto& q = spec.singular();
      return {0, q.tau()};
    }
    case Family::Bounded:
      return {spec.bounded().ell(), 0};
    case Family::EmBounded:
      return {0, 0};
  }
  return {0, 0};
}

std::vector<Branch> branches(const StateSpec& spec) {
  const Branch b = base_branch(spec);
  if (!spec.superposition) return {b};
  switch (spec.superposition->kind) {
    case SuperposKind::Azimuthal:
    case SuperposKind::BoundedAzimuthal:
      return {{b.ell, b.tau}, {-b.ell, b.tau}};
    case SuperposKind::Axial:
    case SuperposKind::EmAxial:
      return {{b.ell, b.tau}, {b.ell, -b.tau}};
    case SuperposKind::Double:
      return {{b.ell, b.tau}, {b.ell, -b.tau}, {-b.ell, b.tau}, {-b.ell, -b.tau}};
  }
  return {b};
}

// +1 / -1 when the coefficients are the paper's canonical "+" / "-"
// combination, 0 otherwise.
int canonical_sign(const Superposition& sp) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto is = [](complexd v, double w) { return std::abs(v - w) <= 1e-12; };
  if (sp.c.size() == 2) {
    if (is(sp.c[0], inv_sqrt2) && is(sp.c[1], inv_sqrt2)) return 1;
    if (is(sp.c[0], inv_sqrt2) && is(sp.c[1], -inv_sqrt2)) return -1;
    return 0;
  }
  if (sp.c.size() == 4) {
    if (is(sp.c[0], 0.5) && is(sp.c[1], 0.5) && is(sp.c[2], 0.5) && is(sp.c[3], 0.5))
      return 1;
    if (is(sp.c[0], 0.5) && is(sp.c[1], -0.5) && is(sp.c[2], -0.5) && is(sp.c[3], 0.5))
      return -1;
    return 0;
  }
  return 0;
}

// Laguerre parameters of the radial factor.
void radial_qn(const StateSpec& spec, int& n, int& a) {
  if (spec.is_singular_kind()) {
    n = spec.singular().n;
    a = spec.singular().kappa;
  } else {
    n = spec.bounded().n;
    a = spec.bounded().s;
  }
}

double norm_factor(const StateSpec& spec, const PhysicalConstants& c) {
  if (spec.is_singular_kind())
    return specfun::norm_singular(spec.singular().n, spec.singular().kappa, c.sigma_r);
  return specfun::norm_bounded(spec.bounded().n, spec.bounded().s, spec.bounded().l(),
                               c.sigma_r);
}

void check_point(const StateSpec& spec, const SphericalPoint& p) {
  if (!(p.r > 0.0)) throw std::domain_error("states: requires r > 0");
  if (!(p.theta > 0.0) || !(p.theta < M_PI))
    throw std::domain_error("states: requires theta in (0, pi)");
  if (spec.is_singular_kind() &&
      (p.theta < kPoleMargin || p.theta > M_PI - kPoleMargin))
    throw std::domain_error("states: singular family undefined within 1e-9 of the poles");
}

// Real amplitude common to all branches: N r^a L e^{-nu r^2} times the
// angular modulus factor (1/sqrt(sin) or P_s^l).
double common_amplitude(const StateSpec& spec, const PhysicalConstants& c,
                        const SphericalPoint& p) {
  int n, a;
  radial_qn(spec, n, a);
  const double nu = c.nu();
  const double radial = norm_factor(spec, c) * std::pow(p.r, a) *
                        specfun::laguerre(n, a + 0.5, 2.0 * nu * p.r * p.r) *
                        std::exp(-nu * p.r * p.r);
  if (spec.is_singular_kind()) return radial / std::sqrt(std::sin(p.theta));
  return radial * specfun::assoc_legendre(spec.bounded().s, spec.bounded().l(),
                                          std::cos(p.theta));
}

// |sum_b c_b e^{i(ell_b phi + tau_b theta)}|^2, using the paper's closed
// cos^2/sin^2 forms for the canonical combinations.
double angular_phase_density(const StateSpec& spec, double theta, double phi) {
  if (!spec.superposition) return 1.0;
  const Branch b = base_branch(spec);
  const int sign = canonical_sign(*spec.superposition);
  const SuperposKind kind = spec.superposition->kind;
  if (sign != 0) {
    auto sq = [](double v) { return v * v; };
    switch (kind) {
      case SuperposKind::Azimuthal:
      case SuperposKind::BoundedAzimuthal:
        return 2.0 * (sign > 0 ? sq(std::cos(b.ell * phi)) : sq(std::sin(b.ell * phi)));
      case SuperposKind::Axial:
      case SuperposKind::EmAxial:
        return 2.0 * (sign > 0 ? sq(std::cos(b.tau * theta)) : sq(std::sin(b.tau * theta)));
      case SuperposKind::Double:
        return 4.0 * (sign > 0
                          ? sq(std::cos(b.ell * phi)) * sq(std::cos(b.tau * theta))
                          : sq(std::sin(b.ell * phi)) * sq(std::sin(b.tau * theta)));
    }
  }
  complexd sum = 0.0;
  const auto br = branches(spec);
  for (std::size_t i = 0; i < br.size(); ++i)
    sum += spec.superposition->c[i] * std::polar(1.0, br[i].ell * phi + br[i].tau * theta);
  return std::norm(sum);
}

}  // namespace

void validate(const StateSpec& spec) {
  const bool singular_kind =
      spec.family == Family::Singular || spec.family == Family::EmSingular;
  if (singular_kind != std::holds_alternative<SingularQN>(spec.qn))
    throw std::invalid_argument("StateSpec: family does not match quantum-number record");
  if (singular_kind)
    spec.singular().validate();
  else
    spec.bounded().validate();

  if (!spec.superposition) return;
  const auto& sp = *spec.superposition;
  const std::size_t want = sp.kind == SuperposKind::Double ? 4 : 2;
  if (sp.c.size() != want)
    throw std::invalid_argument("StateSpec: wrong number of superposition coefficients");
  double sum = 0.0;
  for (const auto& ci : sp.c) sum += std::norm(ci);
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("StateSpec: coefficients must satisfy sum |c|^2 = 1");

  switch (sp.kind) {
    case SuperposKind::Azimuthal:
    case SuperposKind::Axial:
    case SuperposKind::Double:
      if (spec.family != Family::Singular)
        throw std::invalid_argument("StateSpec: kind requires the singular family");
      break;
    case SuperposKind::EmAxial:
      if (spec.family != Family::EmSingular)
        throw std::invalid_argument("StateSpec: em-axial requires the em-singular family");
      break;
    case SuperposKind::BoundedAzimuthal:
      if (spec.family != Family::Bounded)
        throw std::invalid_argument(
            "StateSpec: bounded-azimuthal requires the bounded family");
      break;
  }
  // The +/-ell cross term in the normalization integral only vanishes for a
  // nonzero winding (B.1), so azimuthal-type superpositions need ell != 0.
  if (sp.kind == SuperposKind::Azimuthal || sp.kind == SuperposKind::Double) {
    if (spec.singular().ell == 0)
      throw std::invalid_argument("StateSpec: azimuthal superposition requires ell != 0");
  }
  if (sp.kind == SuperposKind::BoundedAzimuthal && spec.bounded().ell() == 0)
    throw std::invalid_argument("StateSpec: bounded-azimuthal requires ell != 0");
}

complexd eval_psi(const StateSpec& spec, const PhysicalConstants& c,
                  const SphericalPoint& p, double t) {
  check_point(spec, p);
  const double amp = common_amplitude(spec, c, p);
  const double omega_t = energy(spec, c) / c.hbar * t;
  if (!spec.superposition) {
    const Branch b = base_branch(spec);
    return amp * std::polar(1.0, b.ell * p.phi + b.tau * p.theta - omega_t);
  }
  complexd sum = 0.0;
  const auto br = branches(spec);
  for (std::size_t i = 0; i < br.size(); ++i)
    sum += spec.superposition->c[i] *
           std::polar(1.0, br[i].ell * p.phi + br[i].tau * p.theta - omega_t);
  return amp * sum;
}

double density(const StateSpec& spec, const PhysicalConstants& c, const SphericalPoint& p) {
  check_point(spec, p);
  const int a = radial_exponent(spec);
  return density_radial_poly(spec, c, p.r) * std::pow(p.r, 2 * a) *
         std::exp(-2.0 * c.nu() * p.r * p.r) * density_angular(spec, p);
}

int radial_exponent(const StateSpec& spec) {
  return spec.is_singular_kind() ? spec.singular().kappa : spec.bounded().s;
}

double density_radial_poly(const StateSpec& spec, const PhysicalConstants& c, double r) {
  int n, a;
  radial_qn(spec, n, a);
  const double lag = specfun::laguerre(n, a + 0.5, 2.0 * c.nu() * r * r);
  const double norm = norm_factor(spec, c);
  return norm * norm * lag * lag;
}

double density_angular(const StateSpec& spec, const SphericalPoint& p) {
  const double s_factor = angular_phase_density(spec, p.theta, p.phi);
  if (spec.is_singular_kind()) return s_factor / std::sin(p.theta);
  const double pl = specfun::assoc_legendre(spec.bounded().s, spec.bounded().l(),
                                            std::cos(p.theta));
  return s_factor * pl * pl;
}

double energy(const StateSpec& spec, const PhysicalConstants& c) {
  const double scale = c.hbar * c.hbar / (2.0 * c.mass * c.sigma_r * c.sigma_r);
  if (spec.is_singular_kind()) {
    const auto& q = spec.singular();
    return scale * (2.0 * q.n + q.kappa + 1.5);
  }
  const auto& q = spec.bounded();
  return scale * (2.0 * q.n + q.s + 1.5);
}

StateSpec make_superposition(SuperposKind kind, const StateSpec& base,
                             const std::vector<complexd>& coeffs) {
  if (base.superposition)
    throw std::invalid_argument("make_superposition: base must be a pure state");
  StateSpec out = base;
  out.superposition = Superposition{kind, coeffs};
  validate(out);
  return out;
}

StateSpec make_canonical_superposition(SuperposKind kind, const StateSpec& base, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("make_canonical_superposition: sign must be +1 or -1");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<complexd> c;
  if (kind == SuperposKind::Double) {
    const double h = 0.5;
    c = sign > 0 ? std::vector<complexd>{h, h, h, h}
                 : std::vector<complexd>{h, -h, -h, h};
  } else {
    c = {inv_sqrt2, sign * inv_sqrt2};
  }
  return make_superposition(kind, base, c);
}

double phase_field(const StateSpec& spec, const PhysicalConstants& c,
                   const SphericalPoint& p, double t) {
  if (spec.superposition)
    throw std::invalid_argument("phase_field: superposed states have no phase of this form");
  const Branch b = base_branch(spec);
  return b.ell * p.phi + b.tau * p.theta - energy(spec, c) / c.hbar * t;
}

Winding current_winding(const StateSpec& spec) {
  const Branch b = base_branch(spec);
  if (!spec.superposition) return {b.ell, b.tau};
  switch (spec.superposition->kind) {
    case SuperposKind::Azimuthal: return {0, b.tau};
    case SuperposKind::Axial: return {b.ell, 0};
    case SuperposKind::Double: return {0, 0};
    case SuperposKind::EmAxial: return {0, 0};
    case SuperposKind::BoundedAzimuthal: return {0, 0};
  }
  return {b.ell, b.tau};
}

Winding hj_winding(const StateSpec& spec) {
  if (spec.superposition) {
    if (spec.superposition->kind == SuperposKind::BoundedAzimuthal) return {0, 0};
    return current_winding(spec);
  }
  switch (spec.family) {
    case Family::Singular:
    case Family::EmSingular: {
      const auto& q = spec.singular();
      return {q.ell, q.tau()};
    }
    case Family::Bounded:
    case Family::EmBounded:
      return {spec.bounded().ell(), 0};
  }
  return {0, 0};
}

}  // namespace qf::states
