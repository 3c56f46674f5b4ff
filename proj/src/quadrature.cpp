#include "qf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qf::quadrature {

namespace {

// Eigenvalues and first-row eigenvector components of a symmetric tridiagonal
// matrix (diagonal d, off-diagonal e), implicit-shift QL. z enters as the
// first row of the identity and leaves holding the first components of the
// normalized eigenvectors. Classic tql2 adapted to vectors.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 0) return;
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-15 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw std::runtime_error("tridiag_ql: no convergence");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  e.pop_back();
}

Rule golub_welsch(std::vector<double> diag, std::vector<double> offdiag, double mu0) {
  const int n = static_cast<int>(diag.size());
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  tridiag_ql(diag, offdiag, z);
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return diag[a] < diag[b]; });
  Rule rule;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  for (int i : idx) {
    rule.nodes.push_back(diag[i]);
    rule.weights.push_back(mu0 * z[i] * z[i]);
  }
  return rule;
}

// Legendre P_n(x) and its derivative.
void legendre_pd(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  if (n == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

Rule gauss_legendre_rule(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre_rule: order >= 1");
  Rule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double p, dp;
    for (int it = 0; it < 100; ++it) {
      legendre_pd(order, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre_pd(order, x, p, dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[order - 1 - i] = x;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) {
    double p, dp;
    legendre_pd(order, 0.0, p, dp);
    rule.nodes[half - 1] = 0.0;
    rule.weights[half - 1] = 2.0 / (dp * dp);
  }
  return rule;
}

Rule gauss_laguerre_rule(int order, double alpha) {
  if (order < 1) throw std::invalid_argument("gauss_laguerre_rule: order >= 1");
  if (alpha <= -1.0) throw std::invalid_argument("gauss_laguerre_rule: alpha > -1");
  std::vector<double> diag(order), off;
  for (int i = 0; i < order; ++i) diag[i] = 2.0 * i + alpha + 1.0;
  off.resize(order > 1 ? order - 1 : 0);
  for (int i = 1; i < order; ++i) off[i - 1] = std::sqrt(i * (i + alpha));
  return golub_welsch(std::move(diag), std::move(off), std::exp(std::lgamma(alpha + 1.0)));
}

Rule radial_rule(int order, double a, double nu) {
  if (!(a > -1.5)) throw std::invalid_argument("radial_rule: requires a > -3/2");
  if (!(nu > 0.0)) throw std::invalid_argument("radial_rule: requires nu > 0");
  const double alpha = a + 0.5;
  Rule lag = gauss_laguerre_rule(order, alpha);
  const double two_nu = 2.0 * nu;
  // int_0^inf r^{2a+2} e^{-2nu r^2} g(r) dr
  //   = 1/(2 (2nu)^{a+3/2}) int_0^inf x^{a+1/2} e^{-x} g(sqrt(x/2nu)) dx
  const double scale = 0.5 * std::pow(two_nu, -(a + 1.5));
  Rule rule;
  rule.nodes.resize(lag.nodes.size());
  rule.weights.resize(lag.nodes.size());
  for (std::size_t i = 0; i < lag.nodes.size(); ++i) {
    rule.nodes[i] = std::sqrt(lag.nodes[i] / two_nu);
    rule.weights[i] = scale * lag.weights[i];
  }
  return rule;
}

Rule theta_midpoint_rule(int n) {
  if (n < 2) throw std::invalid_argument("theta_midpoint_rule: n >= 2");
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.assign(n, M_PI / n);
  for (int i = 0; i < n; ++i) rule.nodes[i] = (i + 0.5) * M_PI / n;
  return rule;
}

Rule phi_uniform_rule(int n) {
  if (n < 1) throw std::invalid_argument("phi_uniform_rule: n >= 1");
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.assign(n, 2.0 * M_PI / n);
  for (int i = 0; i < n; ++i) rule.nodes[i] = 2.0 * M_PI * i / n;
  return rule;
}

std::vector<double> laguerre_roots(int n, double alpha) {
  if (n == 0) return {};
  return gauss_laguerre_rule(n, alpha).nodes;
}

std::vector<double> assoc_legendre_roots(int s, int l) {
  const int m = s - l;
  if (m <= 0) return {};
  // Interior zeros of P_s^l(x) are the roots of the Jacobi polynomial
  // P_m^{(l,l)}; its Jacobi matrix is symmetric with zero diagonal.
  std::vector<double> diag(m, 0.0), off(m > 1 ? m - 1 : 0);
  for (int k = 1; k < m; ++k) {
    const double num = 4.0 * k * (k + l) * (k + l) * (k + 2.0 * l);
    const double den = (2.0 * k + 2.0 * l - 1.0) * std::pow(2.0 * k + 2.0 * l, 2) *
                       (2.0 * k + 2.0 * l + 1.0);
    off[k - 1] = std::sqrt(num / den);
  }
  Rule r = golub_welsch(std::move(diag), std::move(off), 1.0);
  return r.nodes;
}

}  // namespace qf::quadrature
