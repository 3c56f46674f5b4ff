#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qf/types.hpp"
#include "qf/verify.hpp"

namespace qf::tables {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct AxisSpec {
  double min = 0.0;
  double max = 0.0;
  int count = 1;  // count 1 means the single point `min`
};

struct GridSpec {
  AxisSpec r{0.5, 3.0, 8};
  AxisSpec theta{0.05, M_PI - 0.05, 9};
  AxisSpec phi{0.0, 2.0 * M_PI, 8};
  double t = 0.0;
  void validate() const;
};

std::vector<double> linspace(const AxisSpec& axis);

/// One row per grid point: r, theta, phi, re_psi, im_psi, density, v_r,
/// v_theta, v_phi, U, Q, T, V (Q and V are NaN where the paper gives no
/// closed-form quantum potential).
Table eval_grid(const StateSpec& spec, const PhysicalConstants& c, const GridSpec& grid);

/// Energy table: rows (n, kappa-or-s, E, 2n + kappa-or-s), sorted by E then n.
Table spectrum(Family family, int max_n, int max_second, const PhysicalConstants& c);

/// Triple table up to ell <= max: axial and oscillator rows plus strict
/// Pythagorean triples (only the latter with strict=true).
Table triples_table(int max_ell, bool strict);

/// Numeric data behind the figures; `id` is one of fig1, fig2, fig3-left,
/// fig3-center, fig3-right, fig4, fig5, fig6.
Table figure_data(const std::string& id, const PhysicalConstants& c);

const std::vector<std::string>& figure_ids();

/// CSV with a header row, dot decimal separator, 17 significant digits.
std::string to_csv(const Table& table);

/// {"columns": [...], "rows": [[...], ...]}
std::string to_json(const Table& table);

/// Fixed report schema: {config, results: [{name, spec, measured, expected,
/// abs_err, rel_err, tol, pass}], summary: {passed, failed}}.
std::string report_json(const verify::VerificationReport& report);

/// Number formatting shared by the writers (shortest 17-significant-digit
/// form via std::to_chars; locale-independent).
std::string format_double(double v);

}  // namespace qf::tables
