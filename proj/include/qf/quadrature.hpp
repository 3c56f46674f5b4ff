#pragma once

#include <cstddef>
#include <vector>

namespace qf::quadrature {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1]: Newton-refined roots of P_order with the
/// standard weights 2 / ((1-x^2) P'^2).
Rule gauss_legendre_rule(int order);

/// Generalized Gauss-Laguerre rule for the weight x^alpha e^{-x} on [0, inf),
/// alpha > -1, built by Golub-Welsch from the Jacobi matrix.
Rule gauss_laguerre_rule(int order, double alpha);

/// Radial rule for integrals int_0^inf r^{2a+2} e^{-2 nu r^2} g(r) dr:
/// nodes r_i and weights w_i with sum w_i g(r_i) exact for g polynomial in
/// r^2 up to degree 2*order-1. Substitution x = 2 nu r^2 onto the
/// generalized Gauss-Laguerre rule with alpha = a + 1/2.
Rule radial_rule(int order, double a, double nu);

/// Midpoint rule for int_0^pi g(theta) dtheta on n uniform cells; nodes are
/// symmetric about pi/2 and never touch the poles.
Rule theta_midpoint_rule(int n);

/// Uniform periodic rule for int_0^{2pi} g(phi) dphi; exact for trigonometric
/// polynomials of degree < n.
Rule phi_uniform_rule(int n);

/// Roots of L_n^{(alpha)} (ascending). Used to keep finite-difference sample
/// points away from polynomial zeros of the wave function.
std::vector<double> laguerre_roots(int n, double alpha);

/// Roots in x = cos(theta) of P_s^l between -1 and 1 (ascending, interior
/// zeros only, i.e. zeros of the Jacobi-polynomial factor of degree s - l).
std::vector<double> assoc_legendre_roots(int s, int l);

}  // namespace qf::quadrature
