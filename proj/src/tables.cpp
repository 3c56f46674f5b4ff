#include "qf/tables.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "qf/fields.hpp"
#include "qf/specfun.hpp"
#include "qf/states.hpp"

namespace qf::tables {

namespace {

using ordered_json = nlohmann::ordered_json;

void push_row(Table& t, std::vector<Cell> cells) { t.rows.push_back(std::move(cells)); }

double quantum_potential_or_nan(const StateSpec& spec, const PhysicalConstants& c,
                                const SphericalPoint& p) {
  try {
    return fields::quantum_potential(spec, c, p);
  } catch (const std::invalid_argument&) {
    return NAN;
  }
}

Table streamline_table(const std::vector<std::pair<int, int>>& windings,
                       const PhysicalConstants& c, double r, double theta0,
                       const std::vector<double>& phi0s, int n_steps, int stride) {
  Table t;
  t.columns = {"field_id", "stream_id", "arc", "r", "theta", "phi", "x", "y", "z", "xi"};
  const double step = 1e-3 * r;
  for (std::size_t f = 0; f < windings.size(); ++f) {
    const auto [ell, tau] = windings[f];
    int sid = 0;
    for (double phi0 : phi0s) {
      const double th0 = tau == 0 ? M_PI / 3.0 : theta0;
      const auto line =
          fields::trace_streamline(ell, tau, c, {r, th0, phi0}, step, n_steps, 0.15);
      for (std::size_t i = 0; i < line.points.size(); i += stride) {
        const auto& p = line.points[i];
        const double sin_t = std::sin(p.theta);
        double xi = NAN;
        if (tau != 0)
          xi = p.phi + static_cast<double>(ell) / tau * (std::cos(p.theta) / sin_t);
        push_row(t, {static_cast<double>(f), static_cast<double>(sid),
                     static_cast<double>(i) * step, p.r, p.theta, p.phi,
                     p.r * sin_t * std::cos(p.phi), p.r * sin_t * std::sin(p.phi),
                     p.r * std::cos(p.theta), xi});
      }
      ++sid;
    }
  }
  return t;
}

Table polar_density_table(const StateSpec& spec, const PhysicalConstants& c) {
  // density in the equatorial plane: one row per (r, phi)
  Table t;
  t.columns = {"r", "phi", "x", "y", "density"};
  for (double r : linspace({0.05 * c.sigma_r, 4.5 * c.sigma_r, 90}))
    for (double phi : linspace({0.0, 2.0 * M_PI, 120})) {
      const double d = states::density(spec, c, {r, M_PI / 2.0, phi});
      push_row(t, {r, phi, r * std::cos(phi), r * std::sin(phi), d});
    }
  return t;
}

}  // namespace

void GridSpec::validate() const {
  for (const AxisSpec* a : {&r, &theta, &phi}) {
    if (a->count < 1) throw std::invalid_argument("grid: count must be >= 1");
    if (a->count > 1 && !(a->min < a->max))
      throw std::invalid_argument("grid: requires min < max");
  }
  if (!(r.min > 0.0)) throw std::invalid_argument("grid: requires r > 0");
  if (!(theta.min > 1e-9) || !(theta.max < M_PI - 1e-9))
    throw std::invalid_argument("grid: theta range must lie inside (0, pi)");
}

std::vector<double> linspace(const AxisSpec& axis) {
  std::vector<double> out;
  out.reserve(axis.count);
  if (axis.count == 1) {
    out.push_back(axis.min);
    return out;
  }
  const double h = (axis.max - axis.min) / (axis.count - 1);
  for (int i = 0; i < axis.count; ++i) out.push_back(axis.min + h * i);
  return out;
}

Table eval_grid(const StateSpec& spec, const PhysicalConstants& c, const GridSpec& grid) {
  grid.validate();
  states::validate(spec);
  Table t;
  t.columns = {"r", "theta", "phi", "re_psi", "im_psi", "density", "v_r",
               "v_theta", "v_phi", "U", "Q", "T", "V"};
  const states::Winding wc = states::current_winding(spec);
  const states::Winding wh = states::hj_winding(spec);
  for (double r : linspace(grid.r))
    for (double theta : linspace(grid.theta))
      for (double phi : linspace(grid.phi)) {
        const SphericalPoint p{r, theta, phi};
        const complexd psi = states::eval_psi(spec, c, p, grid.t);
        const double dens = states::density(spec, c, p);
        const VectorValue v = fields::velocity(wc.ell, wc.tau, c, p);
        const double u = fields::scalar_potential(spec, c, p);
        const double q = quantum_potential_or_nan(spec, c, p);
        const double sin_t = std::sin(theta);
        const double kin = c.hbar * c.hbar / (2.0 * c.mass * r * r) *
                           (static_cast<double>(wh.ell) * wh.ell / (sin_t * sin_t) +
                            static_cast<double>(wh.tau) * wh.tau);
        push_row(t, {r, theta, phi, psi.real(), psi.imag(), dens, v.v_r, v.v_theta,
                     v.v_phi, u, q, kin, u + q});
      }
  return t;
}

Table spectrum(Family family, int max_n, int max_second, const PhysicalConstants& c) {
  if (max_n < 0 || max_second < 0)
    throw std::invalid_argument("spectrum: ranges must be non-negative");
  const bool singular = family == Family::Singular || family == Family::EmSingular;
  struct Row { int n, second, cls; double e; };
  std::vector<Row> rows;
  const double eu = c.hbar * c.hbar / (2.0 * c.mass * c.sigma_r * c.sigma_r);
  for (int n = 0; n <= max_n; ++n)
    for (int k = 0; k <= max_second; ++k)
      rows.push_back({n, k, 2 * n + k, eu * (2.0 * n + k + 1.5)});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.cls != b.cls) return a.cls < b.cls;
    if (a.n != b.n) return a.n < b.n;
    return a.second < b.second;
  });
  Table t;
  t.columns = {"n", singular ? "kappa" : "s", "E", "class"};
  for (const Row& r : rows)
    push_row(t, {static_cast<double>(r.n), static_cast<double>(r.second), r.e,
                 static_cast<double>(r.cls)});
  return t;
}

Table triples_table(int max_ell, bool strict) {
  if (max_ell < 1) throw std::invalid_argument("triples: requires max >= 1");
  std::vector<Triple> all;
  if (!strict)
    for (int e = 1; e <= max_ell; ++e) all.emplace_back(0, e, e);
  for (const Triple& t : specfun::enumerate_triples(max_ell)) all.push_back(t);
  if (!strict)
    for (int l = 1; l <= max_ell; ++l) all.emplace_back(l, 0, l);
  std::stable_sort(all.begin(), all.end(), [](const Triple& a, const Triple& b) {
    if (a.ell != b.ell) return a.ell < b.ell;
    return a.l < b.l;
  });
  Table t;
  t.columns = {"l", "eps", "ell", "family"};
  for (const Triple& tr : all)
    push_row(t, {static_cast<double>(tr.l), static_cast<double>(tr.eps),
                 static_cast<double>(tr.ell),
                 std::string(specfun::angular_family_name(
                     specfun::classify_angular_family(tr.l, tr.eps, tr.ell)))});
  return t;
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"fig1", "fig2", "fig3-left", "fig3-center",
                                               "fig3-right", "fig4", "fig5", "fig6"};
  return ids;
}

Table figure_data(const std::string& id, const PhysicalConstants& c) {
  if (id == "fig1") {
    // vortex flux (ell = 4, tau = 1) on the unit-radius sphere
    return streamline_table({{4, 1}}, c, c.sigma_r, 0.3,
                            {0.0, M_PI / 2.0, M_PI, 1.5 * M_PI}, 40000, 10);
  }
  if (id == "fig2") {
    // funnel potential of the singular family, kappa = 1, ell = 1
    Table t;
    t.columns = {"r", "theta", "rho", "z", "U"};
    const StateSpec spec = StateSpec::make_singular(0, 1, 1, 1);
    for (double r : linspace({0.25 * c.sigma_r, 3.0 * c.sigma_r, 60}))
      for (double theta : linspace({0.2, M_PI - 0.2, 60})) {
        const double u = fields::scalar_potential(spec, c, {r, theta, 0.0});
        push_row(t, {r, theta, r * std::sin(theta), r * std::cos(theta), u});
      }
    return t;
  }
  if (id == "fig3-left")
    return polar_density_table(StateSpec::make_singular(3, 1, 0, 1), c);
  if (id == "fig3-center")
    return polar_density_table(
        states::make_canonical_superposition(SuperposKind::Azimuthal,
                                             StateSpec::make_singular(3, 1, 3, 1), 1),
        c);
  if (id == "fig3-right") {
    // axial-plane scan of the "+" axial superposition, kappa = 1 (tau = 2);
    // chi runs once around the plane: theta = chi on the phi = 0 side,
    // theta = 2 pi - chi on the phi = pi side
    const StateSpec spec = states::make_canonical_superposition(
        SuperposKind::Axial, StateSpec::make_singular(3, 1, 3, 1), 1);
    Table t;
    t.columns = {"r", "chi", "x", "z", "density"};
    const int n_chi = 720;
    for (double r : linspace({0.05 * c.sigma_r, 4.5 * c.sigma_r, 90}))
      for (int k = 0; k < n_chi; ++k) {
        const double chi = (k + 0.5) * 2.0 * M_PI / n_chi;
        const double theta = chi <= M_PI ? chi : 2.0 * M_PI - chi;
        const double phi = chi <= M_PI ? 0.0 : M_PI;
        const double d = states::density(spec, c, {r, theta, phi});
        push_row(t, {r, chi, r * std::sin(theta) * std::cos(phi), r * std::cos(theta), d});
      }
    return t;
  }
  if (id == "fig4") {
    // azimuthal superposition of currents: components (+-3, -2) and their sum
    return streamline_table({{3, -2}, {-3, -2}, {0, -2}}, c, c.sigma_r, M_PI - 0.3,
                            {0.0, M_PI}, 40000, 10);
  }
  if (id == "fig5") {
    // axial superposition of currents: components (3, +-2) and their sum
    return streamline_table({{3, 2}, {3, -2}, {3, 0}}, c, c.sigma_r, 0.3, {0.0, M_PI},
                            40000, 10);
  }
  if (id == "fig6") {
    Table t;
    t.columns = {"l", "eps", "ell", "s", "theta", "phi", "re_y"};
    struct Item { Triple tr; int s; };
    const std::vector<Item> items = {{Triple(0, 3, 3), 1},
                                     {Triple(0, 4, 4), 1},
                                     {Triple(3, 4, 5), 3},
                                     {Triple(4, 3, 5), 4}};
    for (const Item& it : items)
      for (double theta : linspace({0.01, M_PI - 0.01, 61}))
        for (double phi : linspace({0.0, 2.0 * M_PI, 121})) {
          const double re =
              specfun::modified_sph_harm(it.s, it.tr.ell, it.tr.l, theta, phi).real();
          push_row(t, {static_cast<double>(it.tr.l), static_cast<double>(it.tr.eps),
                       static_cast<double>(it.tr.ell), static_cast<double>(it.s), theta,
                       phi, re});
        }
    return t;
  }
  throw std::invalid_argument("figure_data: unknown id '" + id + "'");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (std::holds_alternative<double>(row[i]))
        out += format_double(std::get<double>(row[i]));
      else
        out += std::get<std::string>(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  ordered_json j;
  j["columns"] = table.columns;
  j["rows"] = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json r = ordered_json::array();
    for (const auto& cell : row) {
      if (std::holds_alternative<double>(cell))
        r.push_back(std::get<double>(cell));
      else
        r.push_back(std::get<std::string>(cell));
    }
    j["rows"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

std::string report_json(const verify::VerificationReport& report) {
  ordered_json j;
  j["config"]["suite"] = report.suite;
  j["config"]["quadrature"] = {{"radial_order", report.quad.radial_order},
                               {"theta_order", report.quad.theta_order},
                               {"phi_points", report.quad.phi_points},
                               {"theta_margin", report.quad.theta_margin}};
  j["config"]["fd"] = {{"h", report.fd.h},
                       {"refinement_levels", report.fd.refinement_levels}};
  j["config"]["constants"] = {{"hbar", report.constants.hbar},
                              {"mass", report.constants.mass},
                              {"sigma_r", report.constants.sigma_r},
                              {"charge", report.constants.charge}};
  j["results"] = ordered_json::array();
  for (const auto& r : report.results) {
    ordered_json e;
    e["name"] = r.name;
    e["spec"] = r.spec_summary + (r.skipped ? " [skipped]" : "");
    e["measured"] = r.measured;
    e["expected"] = r.expected;
    e["abs_err"] = r.abs_err;
    e["rel_err"] = r.rel_err;
    e["tol"] = r.tol;
    e["pass"] = r.pass;
    j["results"].push_back(std::move(e));
  }
  j["summary"] = {{"passed", report.passed()}, {"failed", report.failed()}};
  return j.dump(2) + "\n";
}

}  // namespace qf::tables
