#include "qf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "qf/fields.hpp"
#include "qf/kernels.hpp"
#include "qf/quadrature.hpp"
#include "qf/specfun.hpp"
#include "qf/states.hpp"

namespace qf::verify {

namespace {

double halton(std::size_t i, int base) {
  double f = 1.0, r = 0.0;
  while (i > 0) {
    f /= base;
    r += f * static_cast<double>(i % base);
    i /= base;
  }
  return r;
}

double energy_unit(const PhysicalConstants& c) {
  return c.hbar * c.hbar / (2.0 * c.mass * c.sigma_r * c.sigma_r);
}

std::string fmt_sign(int v) { return (v >= 0 ? "+" : "") + std::to_string(v); }

std::string state_label(const StateSpec& spec) {
  std::ostringstream os;
  if (spec.is_singular_kind()) {
    const auto& q = spec.singular();
    os << (spec.family == Family::EmSingular ? "em-singular" : "singular") << "(n=" << q.n
       << ",k=" << q.kappa << ",ell=" << fmt_sign(q.ell) << ",tau=" << fmt_sign(q.tau())
       << ")";
  } else {
    const auto& q = spec.bounded();
    os << (spec.family == Family::EmBounded ? "em-bounded" : "bounded") << "(n=" << q.n
       << ",s=" << q.s << ",l=" << q.l() << ",eps=" << q.eps()
       << ",ell=" << fmt_sign(q.ell()) << ")";
  }
  if (spec.superposition) {
    const char* kind = "";
    switch (spec.superposition->kind) {
      case SuperposKind::Azimuthal: kind = "azimuthal"; break;
      case SuperposKind::Axial: kind = "axial"; break;
      case SuperposKind::Double: kind = "double"; break;
      case SuperposKind::EmAxial: kind = "em-axial"; break;
      case SuperposKind::BoundedAzimuthal: kind = "bounded-azimuthal"; break;
    }
    os << "+" << kind << "[";
    const auto& cs = spec.superposition->c;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i) os << ";";
      os << cs[i].real();
      if (cs[i].imag() != 0.0) os << (cs[i].imag() > 0 ? "+" : "") << cs[i].imag() << "i";
    }
    os << "]";
  }
  return os.str();
}

// ---- product quadrature -------------------------------------------------

// Radial rule absorbs r^{2a+2} e^{-2 nu r^2}; the theta rule absorbs
// sin(theta) dtheta (Gauss-Legendre in cos(theta) for the bounded family,
// uniform midpoints for the singular one, symmetric about pi/2 so cot(theta)
// principal values cancel); phi is the uniform periodic rule.
struct Grid3D {
  std::vector<double> r, wr, poly;     // poly = density_radial_poly at nodes
  std::vector<double> th, wth;
  std::vector<double> ph, wph;
  std::vector<double> ang;             // density_angular at (j, k), row-major
};

Grid3D build_grid(const StateSpec& spec, const PhysicalConstants& c,
                  const QuadratureSpec& q, bool half_theta = false) {
  q.validate();
  Grid3D g;
  const int a = states::radial_exponent(spec);
  auto rad = quadrature::radial_rule(q.radial_order, a, c.nu());
  g.r = std::move(rad.nodes);
  g.wr = std::move(rad.weights);
  g.poly.resize(g.r.size());
  for (std::size_t i = 0; i < g.r.size(); ++i)
    g.poly[i] = states::density_radial_poly(spec, c, g.r[i]);

  if (spec.is_singular_kind()) {
    auto mid = quadrature::theta_midpoint_rule(q.theta_order);
    g.th = std::move(mid.nodes);
    g.wth.resize(g.th.size());
    if (half_theta) {
      // upper hemisphere only: midpoints of (0, pi/2)
      for (std::size_t j = 0; j < g.th.size(); ++j) g.th[j] *= 0.5;
      for (std::size_t j = 0; j < g.th.size(); ++j)
        g.wth[j] = 0.5 * M_PI / q.theta_order * std::sin(g.th[j]);
    } else {
      for (std::size_t j = 0; j < g.th.size(); ++j)
        g.wth[j] = M_PI / q.theta_order * std::sin(g.th[j]);
    }
  } else {
    auto gl = quadrature::gauss_legendre_rule(q.theta_order);
    g.th.resize(gl.nodes.size());
    g.wth = gl.weights;
    for (std::size_t j = 0; j < gl.nodes.size(); ++j) g.th[j] = std::acos(gl.nodes[j]);
    if (half_theta) {
      std::vector<double> th2, w2;
      for (std::size_t j = 0; j < g.th.size(); ++j)
        if (g.th[j] < 0.5 * M_PI) {
          th2.push_back(g.th[j]);
          w2.push_back(g.wth[j]);
        }
      g.th = th2;
      g.wth = w2;
    }
  }

  auto ph = quadrature::phi_uniform_rule(q.phi_points);
  g.ph = std::move(ph.nodes);
  g.wph = std::move(ph.weights);

  g.ang.resize(g.th.size() * g.ph.size());
  for (std::size_t j = 0; j < g.th.size(); ++j)
    for (std::size_t k = 0; k < g.ph.size(); ++k)
      g.ang[j * g.ph.size() + k] =
          states::density_angular(spec, {1.0, g.th[j], g.ph[k]});
  return g;
}

// int density * gr(r) * gang(theta, phi) d^3r with separable extra factors.
template <typename Fr, typename Fang>
double integrate(const Grid3D& g, Fr&& gr, Fang&& gang) {
  double rad = 0.0;
  for (std::size_t i = 0; i < g.r.size(); ++i) rad += g.wr[i] * g.poly[i] * gr(g.r[i]);
  double angular = 0.0;
  for (std::size_t j = 0; j < g.th.size(); ++j) {
    double row = 0.0;
    for (std::size_t k = 0; k < g.ph.size(); ++k)
      row += g.wph[k] * g.ang[j * g.ph.size() + k] * gang(g.th[j], g.ph[k]);
    angular += g.wth[j] * row;
  }
  return rad * angular;
}

// ---- finite differences ---------------------------------------------------

complexd hamiltonian_residual(const StateSpec& spec, const PhysicalConstants& c,
                              const SphericalPoint& p, double h_rel, double energy_shift) {
  const double hr = h_rel * c.sigma_r;
  const double ht = h_rel;
  const double hp = h_rel * std::sin(p.theta);
  auto at = [&](double dr, double dt, double dp) {
    return states::eval_psi(spec, c, {p.r + dr, p.theta + dt, p.phi + dp}, 0.0);
  };
  const complexd f0 = at(0, 0, 0);
  const complexd frp = at(hr, 0, 0), frm = at(-hr, 0, 0);
  const complexd ftp = at(0, ht, 0), ftm = at(0, -ht, 0);
  const complexd fpp = at(0, 0, hp), fpm = at(0, 0, -hp);

  const double sin_t = std::sin(p.theta);
  const double cot_t = std::cos(p.theta) / sin_t;
  const double r2 = p.r * p.r;
  const complexd d2r = (frp - 2.0 * f0 + frm) / (hr * hr);
  const complexd d1r = (frp - frm) / (2.0 * hr);
  const complexd d2t = (ftp - 2.0 * f0 + ftm) / (ht * ht);
  const complexd d1t = (ftp - ftm) / (2.0 * ht);
  const complexd d2p = (fpp - 2.0 * f0 + fpm) / (hp * hp);
  const complexd d1p = (fpp - fpm) / (2.0 * hp);

  const complexd lap = d2r + 2.0 / p.r * d1r + (d2t + cot_t * d1t) / r2 +
                       d2p / (r2 * sin_t * sin_t);

  const double h2m = c.hbar * c.hbar / (2.0 * c.mass);
  complexd ham = -h2m * lap;
  if (spec.is_em()) {
    // (A.19)-(A.20): (p - qA)^2 = -hbar^2 lap - 2i hbar^2 (ell/rho^2) d/dphi
    //                + hbar^2 ell^2 / rho^2, with rho = r sin(theta)
    const int ell = spec.is_singular_kind() ? spec.singular().ell : spec.bounded().ell();
    const double inv_rho2 = 1.0 / (r2 * sin_t * sin_t);
    ham += -complexd(0.0, 1.0) * (c.hbar * c.hbar / c.mass) *
               (static_cast<double>(ell) * inv_rho2) * d1p +
           h2m * ell * ell * inv_rho2 * f0;
  }
  ham += fields::scalar_potential(spec, c, p) * f0;
  const double e = states::energy(spec, c) + energy_shift;
  return ham - e * f0;
}

struct PhaseScales {
  int ell_phase = 0;      // azimuthal winding of the phase (0 for EM families)
  int theta_freq = 0;     // |tau| or Legendre degree s
  double theta_boost = 1; // extra factor on theta_freq^4 in the error budget
};

PhaseScales phase_scales(const StateSpec& spec) {
  PhaseScales ps;
  if (spec.is_singular_kind()) {
    ps.ell_phase = spec.family == Family::Singular ? std::abs(spec.singular().ell) : 0;
    ps.theta_freq = std::abs(spec.singular().tau());
  } else {
    ps.ell_phase = spec.family == Family::Bounded ? std::abs(spec.bounded().ell()) : 0;
    ps.theta_freq = spec.bounded().s;
    // P_s^l decays like sin^l near the poles; its theta derivatives carry
    // (l cot theta)^4 on top of the s^4 oscillation
    ps.theta_boost = 6.0;
  }
  return ps;
}

// Sample points for the FD residual: Halton sequence over an r-window chosen
// so the O(h^2) truncation meets the 1e-4 budget at the finest step (the
// error of the phase stencils scales as h^2 (ell^4 + tau^4) / r^2), theta
// away from the poles, and away from the polynomial zeros of psi.
std::vector<SphericalPoint> fd_sample_points(const StateSpec& spec,
                                             const PhysicalConstants& c, int n_points,
                                             double h_finest) {
  const PhaseScales ps = phase_scales(spec);
  const double k4 = std::pow(static_cast<double>(ps.ell_phase), 4) +
                    ps.theta_boost * std::pow(static_cast<double>(ps.theta_freq), 4);
  const double ebar = states::energy(spec, c) / energy_unit(c);
  const double target = 5e-5;
  // h_finest is relative to sigma_r, so the window is in units of sigma_r
  const double u_lo =
      std::max(0.8, std::sqrt(h_finest * h_finest * k4 / (12.0 * ebar * target)));
  const double u_hi = u_lo + 2.5;
  const double th_lo = 0.5, th_hi = M_PI - 0.5;

  int n_rad, a;
  if (spec.is_singular_kind()) {
    n_rad = spec.singular().n;
    a = spec.singular().kappa;
  } else {
    n_rad = spec.bounded().n;
    a = spec.bounded().s;
  }
  const auto lag_roots = quadrature::laguerre_roots(n_rad, a + 0.5);
  std::vector<double> leg_roots;
  if (!spec.is_singular_kind())
    leg_roots = quadrature::assoc_legendre_roots(spec.bounded().s, spec.bounded().l());

  std::vector<SphericalPoint> pts;
  pts.reserve(n_points);
  double lag_gap = 0.35, leg_gap = 0.06;
  std::size_t idx = 1;
  for (int pass = 0; pass < 4 && static_cast<int>(pts.size()) < n_points; ++pass) {
    const std::size_t limit = idx + 200 * static_cast<std::size_t>(n_points);
    for (; idx < limit && static_cast<int>(pts.size()) < n_points; ++idx) {
      const double u = u_lo + (u_hi - u_lo) * halton(idx, 2);
      const double th = th_lo + (th_hi - th_lo) * halton(idx, 3);
      const double phv = 2.0 * M_PI * halton(idx, 5);
      const double r = u * c.sigma_r;
      const double x = 2.0 * c.nu() * r * r;
      bool ok = true;
      for (double root : lag_roots)
        if (std::abs(x - root) < lag_gap) ok = false;
      const double ct = std::cos(th);
      for (double root : leg_roots)
        if (std::abs(ct - root) < leg_gap) ok = false;
      if (ok) pts.push_back({r, th, phv});
    }
    lag_gap *= 0.5;
    leg_gap *= 0.5;
  }
  while (static_cast<int>(pts.size()) < n_points) {
    const double u = u_lo + (u_hi - u_lo) * halton(idx, 2);
    const double th = th_lo + (th_hi - th_lo) * halton(idx, 3);
    pts.push_back({u * c.sigma_r, th, 2.0 * M_PI * halton(idx, 5)});
    ++idx;
  }
  return pts;
}

}  // namespace

complexd fd_residual(const StateSpec& spec, const PhysicalConstants& c,
                     const SphericalPoint& p, double h_rel, double energy_shift) {
  return hamiltonian_residual(spec, c, p, h_rel, energy_shift);
}

CheckResult make_result(std::string name, std::string summary, double measured,
                        double expected, double tol, TolMode mode) {
  CheckResult r;
  r.name = std::move(name);
  r.spec_summary = std::move(summary);
  r.measured = measured;
  r.expected = expected;
  r.tol = tol;
  r.mode = mode;
  if (!std::isfinite(measured)) {
    r.abs_err = INFINITY;
    r.rel_err = INFINITY;
    r.pass = false;
    return r;
  }
  r.abs_err = std::abs(measured - expected);
  r.rel_err = expected != 0.0 ? r.abs_err / std::abs(expected) : r.abs_err;
  switch (mode) {
    case TolMode::Abs: r.pass = r.abs_err <= tol; break;
    case TolMode::Rel: r.pass = r.rel_err <= tol; break;
    case TolMode::LowerBound: r.pass = measured >= tol; break;
  }
  return r;
}

CheckResult make_skipped(std::string name, std::string summary) {
  CheckResult r;
  r.name = std::move(name);
  r.spec_summary = std::move(summary);
  r.pass = true;
  r.skipped = true;
  return r;
}

int VerificationReport::passed() const {
  int n = 0;
  for (const auto& r : results) n += r.pass ? 1 : 0;
  return n;
}

int VerificationReport::failed() const {
  return static_cast<int>(results.size()) - passed();
}

CheckResult check_normalization(const StateSpec& spec, const PhysicalConstants& c,
                                const QuadratureSpec& quad) {
  states::validate(spec);
  double value = 0.0;
  std::string note;
  try {
    const Grid3D g = build_grid(spec, c, quad);
    value = integrate(g, [](double) { return 1.0; }, [](double, double) { return 1.0; });
  } catch (const std::exception& e) {
    note = std::string(" [quadrature failed: ") + e.what() + "]";
    value = NAN;
  }
  return make_result("normalization/" + state_label(spec),
                     "int |psi|^2 d3r = 1" + note, value, 1.0, 1e-8, TolMode::Abs);
}

SchrodingerCheck check_schrodinger(const StateSpec& spec, const PhysicalConstants& c,
                                   const FDSpec& fd, int n_points) {
  states::validate(spec);
  fd.validate();
  if (spec.superposition)
    throw std::invalid_argument("check_schrodinger: pure states only");
  const auto pts = fd_sample_points(spec, c, n_points, fd.h);
  const double e_abs = std::abs(states::energy(spec, c));

  std::vector<double> rms(fd.refinement_levels, 0.0);
  double max_finest = 0.0;
  for (int lvl = 0; lvl < fd.refinement_levels; ++lvl) {
    const double h = fd.h * std::pow(2.0, fd.refinement_levels - 1 - lvl);
    double sum2 = 0.0, maxv = 0.0;
    for (const auto& p : pts) {
      const complexd f0 = states::eval_psi(spec, c, p, 0.0);
      const double rel =
          std::abs(hamiltonian_residual(spec, c, p, h, 0.0)) / (e_abs * std::abs(f0));
      sum2 += rel * rel;
      maxv = std::max(maxv, rel);
    }
    rms[lvl] = std::sqrt(sum2 / pts.size());
    if (lvl == fd.refinement_levels - 1) max_finest = maxv;
  }
  double order_sum = 0.0;
  for (int lvl = 0; lvl + 1 < fd.refinement_levels; ++lvl)
    order_sum += std::log2(rms[lvl] / rms[lvl + 1]);
  const double order = order_sum / (fd.refinement_levels - 1);

  SchrodingerCheck out;
  const std::string label = state_label(spec);
  out.residual = make_result("schrodinger/" + label + "/residual",
                             "max |H psi - E psi| / (|E| |psi|) at h = finest", max_finest,
                             0.0, 1e-4, TolMode::Abs);
  out.order = make_result("schrodinger/" + label + "/order",
                          "empirical convergence order of the FD residual", order, 2.0,
                          0.2, TolMode::Abs);
  return out;
}

CheckResult check_hamilton_jacobi(const StateSpec& spec, const PhysicalConstants& c,
                                  int n_points) {
  states::validate(spec);
  const double eu = energy_unit(c);
  double worst = 0.0;
  int found = 0;
  std::size_t idx = 1;
  while (found < n_points && idx < 1000u * static_cast<std::size_t>(n_points)) {
    const double r = (0.5 + 4.5 * halton(idx, 2)) * c.sigma_r;
    const double th = 0.3 + (M_PI - 0.6) * halton(idx, 3);
    const double ph = 2.0 * M_PI * halton(idx, 5);
    ++idx;
    const fields::EnergyBundle b = fields::energy_split(spec, c, {r, th, ph});
    // keep every summand small enough that the cancellation is testable
    if (std::abs(b.T) > 300.0 * eu || std::abs(b.U) > 300.0 * eu ||
        std::abs(b.Q) > 300.0 * eu)
      continue;
    ++found;
    worst = std::max(worst, std::abs(b.E - b.T - b.U - b.Q));
  }
  return make_result("hamilton-jacobi/" + state_label(spec),
                     "max |E - T - U - Q| over sample points", worst, 0.0, 1e-12 * eu,
                     TolMode::Abs);
}

std::vector<CheckResult> check_orthogonality(int max_s, const PhysicalConstants& c,
                                             const QuadratureSpec& quad) {
  (void)c;
  quad.validate();
  std::vector<CheckResult> out;
  const auto gl = quadrature::gauss_legendre_rule(quad.theta_order);
  const auto ph = quadrature::phi_uniform_rule(quad.phi_points);

  // plain Gram: for fixed l, basis over (s, ell) -> identity
  for (int l = 0; l <= std::min(3, max_s); ++l) {
    struct Fn { int s, ell; };
    std::vector<Fn> basis;
    for (int s = l; s <= max_s; ++s)
      for (int ell : {l, l + 3}) basis.push_back({s, ell});
    double worst = 0.0;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = a; b < basis.size(); ++b) {
        complexd acc = 0.0;
        for (std::size_t j = 0; j < gl.nodes.size(); ++j) {
          const double th = std::acos(gl.nodes[j]);
          // phi integral of e^{i(ell_a - ell_b) phi} over the uniform rule
          complexd phi_sum = 0.0;
          for (std::size_t k = 0; k < ph.nodes.size(); ++k)
            phi_sum += ph.weights[k] *
                       std::polar(1.0, (basis[a].ell - basis[b].ell) * ph.nodes[k]);
          acc += gl.weights[j] *
                 specfun::modified_sph_harm(basis[a].s, 0, l, th, 0.0).real() *
                 specfun::modified_sph_harm(basis[b].s, 0, l, th, 0.0).real() * phi_sum;
        }
        const double expect =
            (basis[a].s == basis[b].s && basis[a].ell == basis[b].ell) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(acc.real() - expect) + std::abs(acc.imag()));
      }
    }
    out.push_back(make_result("orthogonality/gram l=" + std::to_string(l),
                              "max |<Y_s^{(ell,l)}, Y_s'^{(ell',l)}> - delta| over basis",
                              worst, 0.0, 1e-10, TolMode::Abs));
  }

  // weighted Gram: for fixed s, basis over (ell, l >= 1); diagonal (2s+1)/(2l)
  for (int s = 1; s <= max_s; ++s) {
    struct Fn { int ell, l; };
    std::vector<Fn> basis;
    for (int l = 1; l <= s; ++l)
      for (int ell : {1, 4}) basis.push_back({ell, l});
    double worst_off = 0.0;
    std::vector<double> diag(static_cast<std::size_t>(s) + 1, 0.0);
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = a; b < basis.size(); ++b) {
        complexd acc = 0.0;
        complexd phi_sum = 0.0;
        for (std::size_t k = 0; k < ph.nodes.size(); ++k)
          phi_sum += ph.weights[k] *
                     std::polar(1.0, (basis[a].ell - basis[b].ell) * ph.nodes[k]);
        for (std::size_t j = 0; j < gl.nodes.size(); ++j) {
          const double x = gl.nodes[j];
          const double th = std::acos(x);
          acc += gl.weights[j] / (1.0 - x * x) *
                 specfun::modified_sph_harm(s, 0, basis[a].l, th, 0.0).real() *
                 specfun::modified_sph_harm(s, 0, basis[b].l, th, 0.0).real() * phi_sum;
        }
        if (a == b) {
          diag[basis[a].l] = acc.real();
        } else {
          worst_off = std::max(worst_off, std::abs(acc));
        }
      }
    }
    out.push_back(make_result(
        "orthogonality/weighted s=" + std::to_string(s) + " offdiag",
        "max |<Y, Y'>_{1/sin^2}| over distinct (ell,l) pairs", worst_off, 0.0, 1e-8,
        TolMode::Abs));
    for (int l = 1; l <= s; ++l)
      out.push_back(make_result(
          "orthogonality/weighted s=" + std::to_string(s) + " l=" + std::to_string(l),
          "<Y, Y>_{1/sin^2} = (2s+1)/(2l)", diag[l], (2.0 * s + 1.0) / (2.0 * l), 1e-8,
          TolMode::Abs));
  }
  out.push_back(make_skipped("orthogonality/weighted l=0",
                             "second relation unbounded for l = 0 -- skipped"));
  return out;
}

std::vector<CheckResult> check_magnetic_moment(const StateSpec& spec,
                                               const PhysicalConstants& c,
                                               const QuadratureSpec& quad) {
  states::validate(spec);
  const states::Winding w = states::current_winding(spec);
  const Grid3D g = build_grid(spec, c, quad);
  const double mu_b = c.mu_bohr();

  const double mass = integrate(g, [](double) { return 1.0; },
                                [](double, double) { return 1.0; });
  const double mu_z = mu_b * w.ell * mass;
  const double mu_x = mu_b * integrate(g, [](double) { return 1.0; },
                                       [&](double th, double phv) {
                                         const double cot = std::cos(th) / std::sin(th);
                                         return -w.tau * std::sin(phv) -
                                                w.ell * cot * std::cos(phv);
                                       });
  const double mu_y = mu_b * integrate(g, [](double) { return 1.0; },
                                       [&](double th, double phv) {
                                         const double cot = std::cos(th) / std::sin(th);
                                         return w.tau * std::cos(phv) -
                                                w.ell * cot * std::sin(phv);
                                       });

  const double expected_z = w.ell == 0 ? 0.0 : mu_b * w.ell;
  const std::string label = state_label(spec);
  std::vector<CheckResult> out;
  if (w.ell != 0) {
    out.push_back(make_result("moments/" + label + "/z",
                              "(1/2) int (r x J)_z d3r = mu_B ell", mu_z, expected_z,
                              1e-6, TolMode::Rel));
  } else {
    out.push_back(make_result("moments/" + label + "/z",
                              "(1/2) int (r x J)_z d3r = 0", mu_z, 0.0,
                              2e-10 * mu_b, TolMode::Abs));
  }
  out.push_back(make_result("moments/" + label + "/transverse",
                            "|(mu_x, mu_y)| = 0", std::hypot(mu_x, mu_y), 0.0,
                            2e-10 * mu_b, TolMode::Abs));
  return out;
}

CheckResult check_dissipation_average(const StateSpec& spec, const PhysicalConstants& c,
                                      const QuadratureSpec& quad, bool half_range) {
  states::validate(spec);
  const states::Winding w = states::current_winding(spec);
  const std::string label = state_label(spec);
  const double scale = c.hbar / (c.mass * c.sigma_r * c.sigma_r);
  double value = 0.0;
  if (w.tau != 0) {
    const Grid3D g = build_grid(spec, c, quad, half_range);
    const double coef = c.hbar * w.tau / c.mass;
    value = coef * integrate(g, [](double r) { return 1.0 / (r * r); },
                             [](double th, double) { return std::cos(th) / std::sin(th); });
  }
  if (half_range)
    return make_result("dissipation/half-range/" + label,
                       "<Q1> over the upper hemisphere is strictly positive", value, 0.0,
                       1e-3 * scale, TolMode::LowerBound);
  return make_result("dissipation/" + label, "<Q1> = int f Q1 d3r = 0", value, 0.0,
                     1e-8 * scale, TolMode::Abs);
}

ContinuityCheck check_continuity(const StateSpec& spec, const PhysicalConstants& c,
                                 const FDSpec& fd, int n_points) {
  states::validate(spec);
  fd.validate();
  const states::Winding w = states::current_winding(spec);

  int n_rad, a;
  if (spec.is_singular_kind()) {
    n_rad = spec.singular().n;
    a = spec.singular().kappa;
  } else {
    n_rad = spec.bounded().n;
    a = spec.bounded().s;
  }
  const auto lag_roots = quadrature::laguerre_roots(n_rad, a + 0.5);
  std::vector<double> leg_roots;
  if (!spec.is_singular_kind())
    leg_roots = quadrature::assoc_legendre_roots(spec.bounded().s, spec.bounded().l());

  std::vector<SphericalPoint> pts;
  std::size_t idx = 1;
  while (static_cast<int>(pts.size()) < n_points &&
         idx < 1000u * static_cast<std::size_t>(n_points)) {
    const double r = (0.5 + 3.5 * halton(idx, 2)) * c.sigma_r;
    const double th = 0.3 + (M_PI - 0.6) * halton(idx, 3);
    const double ph = 2.0 * M_PI * halton(idx, 5);
    ++idx;
    const double x = 2.0 * c.nu() * r * r;
    bool ok = true;
    for (double root : lag_roots)
      if (std::abs(x - root) < 0.35) ok = false;
    for (double root : leg_roots)
      if (std::abs(std::cos(th) - root) < 0.06) ok = false;
    if (ok) pts.push_back({r, th, ph});
  }

  auto f_theta = [&](const SphericalPoint& p) {
    return states::density(spec, c, p) * fields::velocity(w.ell, w.tau, c, p).v_theta;
  };
  auto f_phi = [&](const SphericalPoint& p) {
    return states::density(spec, c, p) * fields::velocity(w.ell, w.tau, c, p).v_phi;
  };
  // expanded divergence (no radial flux component):
  //   div F = (1/r) dF_theta/dtheta + cot(theta)/r F_theta
  //           + (1/(r sin)) dF_phi/dphi
  auto rel_div = [&](const SphericalPoint& p, double h) {
    const double dth = (f_theta({p.r, p.theta + h, p.phi}) -
                        f_theta({p.r, p.theta - h, p.phi})) / (2.0 * h);
    const double dph = (f_phi({p.r, p.theta, p.phi + h}) -
                        f_phi({p.r, p.theta, p.phi - h})) / (2.0 * h);
    const double ft = f_theta(p);
    const double fp = f_phi(p);
    const double sin_t = std::sin(p.theta);
    const double div = dth / p.r + (std::cos(p.theta) / sin_t) * ft / p.r +
                       dph / (p.r * sin_t);
    const double scale = (std::abs(ft) + std::abs(fp)) / p.r;
    if (div == 0.0) return 0.0;
    return std::abs(div) / std::max(scale, 1e-300);
  };

  std::vector<double> maxv(fd.refinement_levels, 0.0), rms(fd.refinement_levels, 0.0);
  for (int lvl = 0; lvl < fd.refinement_levels; ++lvl) {
    const double h = fd.h * std::pow(2.0, fd.refinement_levels - 1 - lvl);
    double sum2 = 0.0;
    for (const auto& p : pts) {
      const double v = rel_div(p, h);
      maxv[lvl] = std::max(maxv[lvl], v);
      sum2 += v * v;
    }
    rms[lvl] = std::sqrt(sum2 / pts.size());
  }

  ContinuityCheck out;
  const std::string label = state_label(spec);
  const double finest = maxv[fd.refinement_levels - 1];
  if (finest < 1e-9) {
    out.residual = make_result("continuity/" + label + "/residual",
                               "FD div(f <v>), analytically zero flux pattern", finest,
                               0.0, 1e-8, TolMode::Abs);
    out.order = make_skipped("continuity/" + label + "/order",
                             "divergence exactly zero -- no order to estimate");
    return out;
  }
  out.residual = make_result("continuity/" + label + "/residual",
                             "max relative FD div(f <v>) at h = finest", finest, 0.0,
                             1e-4, TolMode::Abs);
  double order_sum = 0.0;
  for (int lvl = 0; lvl + 1 < fd.refinement_levels; ++lvl)
    order_sum += std::log2(rms[lvl] / rms[lvl + 1]);
  out.order = make_result("continuity/" + label + "/order",
                          "empirical convergence order of FD div(f <v>)",
                          order_sum / (fd.refinement_levels - 1), 2.0, 0.2, TolMode::Abs);
  return out;
}

namespace {

// Independent oscillator eigenfunction: series-form Laguerre, stdlib
// spherical Legendre, its own normalization constant.
double laguerre_series(int n, double alpha, double x) {
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double log_binom = std::lgamma(n + alpha + 1.0) -
                             std::lgamma(n - k + 1.0) - std::lgamma(alpha + k + 1.0);
    const double term = std::exp(log_binom - std::lgamma(k + 1.0)) * std::pow(x, k);
    sum += (k % 2 == 0 ? term : -term);
  }
  return sum;
}

complexd oscillator_psi(int n, int s, int ell, const PhysicalConstants& c,
                        const SphericalPoint& p) {
  const double nu = c.nu();
  const double log_norm =
      n * std::log(2.0) - (s + 1.0) * std::log(c.sigma_r) +
      0.5 * ((s + 1.0) * std::log(2.0) + specfun::log_factorial(n) +
             specfun::log_factorial(n + s) - 0.5 * std::log(2.0 * M_PI) -
             std::log(c.sigma_r) - specfun::log_factorial(2 * n + 2 * s + 1));
  const complexd ylm =
      std::sph_legendre(s, ell, p.theta) * std::polar(1.0, ell * p.phi);
  return std::exp(log_norm) * std::pow(p.r, s) *
         laguerre_series(n, s + 0.5, 2.0 * nu * p.r * p.r) *
         std::exp(-nu * p.r * p.r) * ylm;
}

}  // namespace

std::vector<CheckResult> check_oscillator_reduction(int n, int s, int ell,
                                                    const PhysicalConstants& c,
                                                    int n_points) {
  if (ell < 0 || ell > s)
    throw std::invalid_argument("check_oscillator_reduction: requires 0 <= ell <= s");
  const StateSpec spec = StateSpec::make_bounded(n, s, Triple(ell, 0, ell), 1);
  double worst = 0.0;
  for (int i = 1; i <= n_points; ++i) {
    const SphericalPoint p{(0.2 + 4.8 * halton(i, 2)) * c.sigma_r,
                           0.15 + (M_PI - 0.3) * halton(i, 3),
                           2.0 * M_PI * halton(i, 5)};
    worst = std::max(worst,
                     std::abs(states::eval_psi(spec, c, p, 0.0) - oscillator_psi(n, s, ell, c, p)));
  }
  std::ostringstream id;
  id << "n=" << n << ",s=" << s << ",ell=" << ell;
  std::vector<CheckResult> out;
  out.push_back(make_result("reduction/psi " + id.str(),
                            "max |psi_bounded - psi_oscillator| over sample points",
                            worst, 0.0, 1e-12, TolMode::Abs));

  const double n_osc = std::exp(
      n * std::log(2.0) - (s + 1.0) * std::log(c.sigma_r) +
      0.5 * ((s + 1.0) * std::log(2.0) + specfun::log_factorial(n) +
             specfun::log_factorial(n + s) - 0.5 * std::log(2.0 * M_PI) -
             std::log(c.sigma_r) - specfun::log_factorial(2 * n + 2 * s + 1)));
  const double n_from_bounded =
      specfun::norm_bounded(n, s, ell, c.sigma_r) *
      std::sqrt(4.0 * M_PI * std::exp(specfun::log_factorial(s + ell) -
                                      specfun::log_factorial(s - ell)) /
                (2.0 * s + 1.0));
  out.push_back(make_result("reduction/norm " + id.str(),
                            "oscillator normalization consistent with the bounded one",
                            n_from_bounded / n_osc, 1.0, 1e-12, TolMode::Abs));
  return out;
}

}  // namespace qf::verify
