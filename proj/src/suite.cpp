#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qf/specfun.hpp"
#include "qf/states.hpp"
#include "qf/verify.hpp"

namespace qf::verify {

namespace {

// Triples of the default sweep: axial (0,eps,eps) and oscillator (l,0,l)
// families up to max_s, strict Pythagorean triples up to triple_ell_max.
std::vector<Triple> sweep_triples(const SuiteConfig& cfg) {
  std::vector<Triple> out;
  out.emplace_back(0, 0, 0);
  for (int e = 1; e <= cfg.max_s; ++e) out.emplace_back(0, e, e);
  for (int l = 1; l <= cfg.max_s; ++l) out.emplace_back(l, 0, l);
  for (const Triple& t : specfun::enumerate_triples(cfg.triple_ell_max)) out.push_back(t);
  return out;
}

std::vector<StateSpec> bounded_sweep(const SuiteConfig& cfg, Family family) {
  std::vector<StateSpec> out;
  for (const Triple& t : sweep_triples(cfg)) {
    std::set<int> s_values;
    s_values.insert(t.l);
    s_values.insert(std::min(std::max(t.l, cfg.max_s), t.l + 2));
    for (int s : s_values)
      for (int n = 0; n <= cfg.max_n; ++n) {
        if (family == Family::Bounded)
          out.push_back(StateSpec::make_bounded(n, s, t, 1));
        else
          out.push_back(StateSpec::make_em_bounded(n, s, t, 1));
      }
  }
  return out;
}

std::vector<StateSpec> singular_sweep(const SuiteConfig& cfg, Family family) {
  std::vector<StateSpec> out;
  for (int n = 0; n <= cfg.max_n; ++n)
    for (int k = 0; k <= cfg.max_kappa; ++k)
      for (int ell : cfg.ell_set) {
        if (family == Family::Singular)
          out.push_back(StateSpec::make_singular(n, k, ell, 1));
        else
          out.push_back(StateSpec::make_em_singular(n, k, ell, 1));
      }
  return out;
}

// Representative superpositions of every kind, canonical +/- coefficients
// plus one generic coefficient pair.
std::vector<StateSpec> superposition_examples() {
  std::vector<StateSpec> out;
  const StateSpec az_base = StateSpec::make_singular(1, 1, 3, 1);
  const StateSpec ax_base = StateSpec::make_singular(0, 1, 3, 1);
  const StateSpec db_base = StateSpec::make_singular(0, 1, 2, 1);
  const StateSpec em_base = StateSpec::make_em_singular(0, 1, 2, 1);
  const StateSpec bd_base = StateSpec::make_bounded(0, 3, Triple(3, 4, 5), 1);
  for (int sign : {1, -1}) {
    out.push_back(states::make_canonical_superposition(SuperposKind::Azimuthal, az_base, sign));
    out.push_back(states::make_canonical_superposition(SuperposKind::Axial, ax_base, sign));
    out.push_back(states::make_canonical_superposition(SuperposKind::Double, db_base, sign));
    out.push_back(states::make_canonical_superposition(SuperposKind::EmAxial, em_base, sign));
    out.push_back(
        states::make_canonical_superposition(SuperposKind::BoundedAzimuthal, bd_base, sign));
  }
  out.push_back(states::make_superposition(SuperposKind::Azimuthal, az_base,
                                           {complexd(0.6, 0.0), complexd(0.0, 0.8)}));
  return out;
}

void run_normalization(const SuiteConfig& cfg, VerificationReport& rep) {
  for (const auto& s : default_sweep(cfg))
    rep.results.push_back(check_normalization(s, cfg.constants, cfg.quad));
  for (const auto& s : superposition_examples())
    rep.results.push_back(check_normalization(s, cfg.constants, cfg.quad));
  // detector self-test: scaling psi by 2 must be seen as 4
  const StateSpec ground = StateSpec::make_singular(0, 0, 0, 1);
  const CheckResult base = check_normalization(ground, cfg.constants, cfg.quad);
  rep.results.push_back(make_result("normalization/selftest-scaled",
                                    "int |2 psi|^2 d3r = 4 (detector self-test)",
                                    4.0 * base.measured, 4.0, 4e-8, TolMode::Abs));
}

void run_schrodinger(const SuiteConfig& cfg, VerificationReport& rep) {
  for (const auto& s : default_sweep(cfg)) {
    const SchrodingerCheck chk = check_schrodinger(s, cfg.constants, cfg.fd, cfg.fd_points);
    rep.results.push_back(chk.residual);
    rep.results.push_back(chk.order);
  }
  // wrong-eigenvalue self-test: residual must not vanish for E + 0.1 E_unit
  const StateSpec ground = StateSpec::make_singular(0, 0, 0, 1);
  const double eu = cfg.constants.hbar * cfg.constants.hbar /
                    (2.0 * cfg.constants.mass * cfg.constants.sigma_r * cfg.constants.sigma_r);
  const SphericalPoint p{1.3 * cfg.constants.sigma_r, 1.1, 0.4};
  const double shifted = std::abs(fd_residual(ground, cfg.constants, p, cfg.fd.h, 0.1 * eu)) /
                         ((states::energy(ground, cfg.constants) + 0.1 * eu) *
                          std::abs(states::eval_psi(ground, cfg.constants, p, 0.0)));
  rep.results.push_back(make_result("schrodinger/selftest-wrong-energy",
                                    "residual with E + 0.1 stays above the floor", shifted,
                                    0.0, 0.05, TolMode::LowerBound));
}

void run_hamilton_jacobi(const SuiteConfig& cfg, VerificationReport& rep) {
  for (const auto& s : default_sweep(cfg))
    rep.results.push_back(check_hamilton_jacobi(s, cfg.constants, cfg.hj_points));
  for (int sign : {1, -1}) {
    const StateSpec sp = states::make_canonical_superposition(
        SuperposKind::BoundedAzimuthal, StateSpec::make_bounded(0, 3, Triple(3, 4, 5), 1),
        sign);
    rep.results.push_back(check_hamilton_jacobi(sp, cfg.constants, cfg.hj_points));
  }
}

void run_orthogonality(const SuiteConfig& cfg, VerificationReport& rep) {
  for (auto& r : check_orthogonality(cfg.orthogonality_max_s, cfg.constants, cfg.quad))
    rep.results.push_back(std::move(r));
}

void run_moments(const SuiteConfig& cfg, VerificationReport& rep) {
  std::vector<StateSpec> cases;
  // vortex states, mu = mu_B ell e_z
  for (int ell : {1, 3, 5}) {
    cases.push_back(StateSpec::make_singular(0, 0, ell, 1));
    cases.push_back(StateSpec::make_singular(1, 2, ell, 1));
  }
  cases.push_back(StateSpec::make_bounded(0, 1, Triple(1, 0, 1), 1));
  cases.push_back(StateSpec::make_bounded(1, 3, Triple(3, 0, 3), 1));
  cases.push_back(StateSpec::make_bounded(0, 3, Triple(3, 4, 5), 1));
  cases.push_back(StateSpec::make_bounded(0, 3, Triple(3, 4, 5), -1));
  for (int sign : {1, -1})
    cases.push_back(states::make_canonical_superposition(
        SuperposKind::Axial, StateSpec::make_singular(0, 1, 3, 1), sign));
  // the six zero cases
  cases.push_back(StateSpec::make_singular(1, 1, 0, 1));
  cases.push_back(states::make_canonical_superposition(
      SuperposKind::Azimuthal, StateSpec::make_singular(0, 1, 2, 1), 1));
  cases.push_back(states::make_canonical_superposition(
      SuperposKind::Double, StateSpec::make_singular(0, 0, 2, 1), -1));
  cases.push_back(StateSpec::make_em_singular(0, 1, 3, 1));
  cases.push_back(states::make_canonical_superposition(
      SuperposKind::EmAxial, StateSpec::make_em_singular(0, 1, 2, 1), 1));
  cases.push_back(states::make_canonical_superposition(
      SuperposKind::BoundedAzimuthal, StateSpec::make_bounded(0, 3, Triple(3, 4, 5), 1), 1));
  for (const auto& s : cases)
    for (auto& r : check_magnetic_moment(s, cfg.constants, cfg.quad))
      rep.results.push_back(std::move(r));
}

void run_dissipation(const SuiteConfig& cfg, VerificationReport& rep) {
  for (const auto& s : default_sweep(cfg)) {
    if (states::current_winding(s).tau == 0) continue;
    rep.results.push_back(check_dissipation_average(s, cfg.constants, cfg.quad));
  }
  // azimuthal superpositions keep the axial flux
  for (int sign : {1, -1})
    rep.results.push_back(check_dissipation_average(
        states::make_canonical_superposition(SuperposKind::Azimuthal,
                                             StateSpec::make_singular(0, 1, 2, 1), sign),
        cfg.constants, cfg.quad));
  // tau = 0 state: identically zero
  rep.results.push_back(check_dissipation_average(
      StateSpec::make_bounded(0, 1, Triple(1, 0, 1), 1), cfg.constants, cfg.quad));
  // half-range self-test: principal-value cancellation really is at work
  rep.results.push_back(check_dissipation_average(StateSpec::make_singular(0, 0, 0, 1),
                                                  cfg.constants, cfg.quad, true));
}

void run_continuity(const SuiteConfig& cfg, VerificationReport& rep) {
  std::vector<StateSpec> cases;
  for (int k : {0, 1, 4})
    for (int ell : {0, 3}) cases.push_back(StateSpec::make_singular(1, k, ell, 1));
  cases.push_back(StateSpec::make_singular(4, 2, 5, -1));
  cases.push_back(StateSpec::make_em_singular(1, 1, 3, 1));
  cases.push_back(StateSpec::make_bounded(0, 2, Triple(2, 0, 2), 1));
  cases.push_back(StateSpec::make_bounded(1, 3, Triple(3, 4, 5), 1));
  cases.push_back(StateSpec::make_em_bounded(0, 3, Triple(3, 4, 5), 1));
  cases.push_back(states::make_canonical_superposition(
      SuperposKind::Azimuthal, StateSpec::make_singular(0, 1, 2, 1), 1));
  cases.push_back(states::make_canonical_superposition(
      SuperposKind::Axial, StateSpec::make_singular(0, 1, 2, 1), 1));
  cases.push_back(states::make_canonical_superposition(
      SuperposKind::Double, StateSpec::make_singular(0, 0, 2, 1), 1));
  for (const auto& s : cases) {
    const ContinuityCheck chk = check_continuity(s, cfg.constants, cfg.fd, cfg.fd_points);
    rep.results.push_back(chk.residual);
    rep.results.push_back(chk.order);
  }
}

void run_reduction(const SuiteConfig& cfg, VerificationReport& rep) {
  for (int n = 0; n <= cfg.reduction_max_n; ++n)
    for (int s = 0; s <= cfg.reduction_max_s; ++s)
      for (int ell = 0; ell <= s; ++ell)
        for (auto& r : check_oscillator_reduction(n, s, ell, cfg.constants, 50))
          rep.results.push_back(std::move(r));
}

}  // namespace

std::vector<StateSpec> default_sweep(const SuiteConfig& cfg) {
  std::vector<StateSpec> out;
  for (auto& s : singular_sweep(cfg, Family::Singular)) out.push_back(std::move(s));
  for (auto& s : singular_sweep(cfg, Family::EmSingular)) out.push_back(std::move(s));
  for (auto& s : bounded_sweep(cfg, Family::Bounded)) out.push_back(std::move(s));
  for (auto& s : bounded_sweep(cfg, Family::EmBounded)) out.push_back(std::move(s));
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "normalization", "schrodinger", "hamilton-jacobi", "orthogonality",
      "moments",       "dissipation", "continuity",      "reduction",
      "all"};
  return names;
}

VerificationReport run_suite(const std::string& suite, const SuiteConfig& cfg) {
  cfg.quad.validate();
  cfg.fd.validate();
  cfg.constants.validate();
  VerificationReport rep;
  rep.suite = suite;
  rep.quad = cfg.quad;
  rep.fd = cfg.fd;
  rep.constants = cfg.constants;

  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "normalization") { run_normalization(cfg, rep); known = true; }
  if (all || suite == "schrodinger") { run_schrodinger(cfg, rep); known = true; }
  if (all || suite == "hamilton-jacobi") { run_hamilton_jacobi(cfg, rep); known = true; }
  if (all || suite == "orthogonality") { run_orthogonality(cfg, rep); known = true; }
  if (all || suite == "moments") { run_moments(cfg, rep); known = true; }
  if (all || suite == "dissipation") { run_dissipation(cfg, rep); known = true; }
  if (all || suite == "continuity") { run_continuity(cfg, rep); known = true; }
  if (all || suite == "reduction") { run_reduction(cfg, rep); known = true; }
  if (!known) throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
  return rep;
}

}  // namespace qf::verify
