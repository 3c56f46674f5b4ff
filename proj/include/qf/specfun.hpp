#pragma once

#include <complex>
#include <vector>

#include "qf/types.hpp"

namespace qf::specfun {

/// Generalized Laguerre polynomial L_n^{(alpha)}(x), alpha > -1, x >= 0.
double laguerre(int n, double alpha, double x);

/// Associated Legendre P_s^l(x) with the Condon-Shortley phase, |l| <= s,
/// |x| <= 1. Negative l via P_s^{-l} = (-1)^l (s-l)!/(s+l)! P_s^l.
double assoc_legendre(int s, int l, double x);

/// Modified spherical harmonic Y_s^{(ell,l)}(theta, phi): the usual harmonic
/// normalization and P_s^l, but with a decoupled azimuthal winding ell.
/// Coincides with the standard Y_s^ell when ell == l.
complexd modified_sph_harm(int s, int ell, int l, double theta, double phi);

/// All triples (l, eps, ell) with 1 <= l, eps and ell <= ell_max satisfying
/// l^2 + eps^2 = ell^2, non-primitive multiples included, sorted by ell then l.
std::vector<Triple> enumerate_triples(int ell_max);

/// Classify (l, eps, ell) per the three admissible angular cases.
AngularFamily classify_angular_family(int l, int eps, int ell);

const char* angular_family_name(AngularFamily f);

/// Normalization factor N_n^{(kappa)} of the singular family; log-space.
double norm_singular(int n, int kappa, double sigma_r);

/// Normalization factor N_{n,s}^{(l)} of the bounded family; log-space.
double norm_bounded(int n, int s, int l, double sigma_r);

/// log(k!) via lgamma.
double log_factorial(int k);

}  // namespace qf::specfun
