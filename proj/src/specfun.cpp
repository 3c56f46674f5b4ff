#include "qf/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "qf/kernels.hpp"

namespace qf::specfun {

double log_factorial(int k) { return std::lgamma(k + 1.0); }

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw std::invalid_argument("laguerre: n must be non-negative");
  if (alpha <= -1.0) throw std::invalid_argument("laguerre: requires alpha > -1");
  if (!(x >= 0.0) || !std::isfinite(x))
    throw std::invalid_argument("laguerre: requires finite x >= 0");
  double out;
  kernels::laguerre_batch(n, alpha, &x, &out, 1);
  return out;
}

double assoc_legendre(int s, int l, double x) {
  if (s < 0) throw std::invalid_argument("assoc_legendre: s must be non-negative");
  if (std::abs(l) > s) throw std::invalid_argument("assoc_legendre: requires |l| <= s");
  if (!(std::abs(x) <= 1.0)) throw std::invalid_argument("assoc_legendre: requires |x| <= 1");
  const int la = std::abs(l);
  double out;
  kernels::assoc_legendre_batch(s, la, &x, &out, 1);
  if (l < 0) {
    const double sign = (la % 2 == 0) ? 1.0 : -1.0;
    out *= sign * std::exp(log_factorial(s - la) - log_factorial(s + la));
  }
  return out;
}

complexd modified_sph_harm(int s, int ell, int l, double theta, double phi) {
  if (s < 0 || l < 0 || l > s)
    throw std::invalid_argument("modified_sph_harm: requires 0 <= l <= s");
  const double lognorm =
      0.5 * (std::log(2.0 * s + 1.0) + log_factorial(s - l) -
             std::log(4.0 * M_PI) - log_factorial(s + l));
  const double p = assoc_legendre(s, l, std::cos(theta));
  return std::exp(lognorm) * p * std::polar(1.0, ell * phi);
}

std::vector<Triple> enumerate_triples(int ell_max) {
  if (ell_max < 1) throw std::invalid_argument("enumerate_triples: requires ell_max >= 1");
  std::vector<Triple> out;
  for (int ell = 1; ell <= ell_max; ++ell) {
    for (int l = 1; l < ell; ++l) {
      const int rem = ell * ell - l * l;
      const int eps = static_cast<int>(std::lround(std::sqrt(static_cast<double>(rem))));
      if (eps >= 1 && eps * eps == rem) out.emplace_back(l, eps, ell);
    }
  }
  return out;  // loop order is already (ell ascending, l ascending)
}

AngularFamily classify_angular_family(int l, int eps, int ell) {
  if (l < 0 || eps < 0 || ell < 0) return AngularFamily::Invalid;
  if (l == 0 && eps == ell && ell >= 1) return AngularFamily::Axial;
  if (eps == 0 && l == ell) return AngularFamily::Oscillator;
  if (l >= 1 && eps >= 1 && ell >= 1 && l * l + eps * eps == ell * ell)
    return AngularFamily::Pythagorean;
  return AngularFamily::Invalid;
}

const char* angular_family_name(AngularFamily f) {
  switch (f) {
    case AngularFamily::Axial: return "axial";
    case AngularFamily::Pythagorean: return "pythagorean";
    case AngularFamily::Oscillator: return "oscillator";
    default: return "invalid";
  }
}

// (A.17): N^2 = (2 nu)^{kappa+3/2} n! / (pi^2 Gamma(n+kappa+3/2)),
// equal to the explicit factorial form quoted with Theorem 1.
double norm_singular(int n, int kappa, double sigma_r) {
  if (n < 0 || kappa < 0)
    throw std::invalid_argument("norm_singular: n, kappa must be non-negative");
  if (!(sigma_r > 0.0)) throw std::invalid_argument("norm_singular: sigma_r > 0");
  const double two_nu = 1.0 / (2.0 * sigma_r * sigma_r);
  const double log_n2 = (kappa + 1.5) * std::log(two_nu) + log_factorial(n) -
                        2.0 * std::log(M_PI) - std::lgamma(n + kappa + 1.5);
  return std::exp(0.5 * log_n2);
}

// (A.35): M^2 = pi [N_n^{(s)}]^2 (2s+1)(s-l)! / (2 (s+l)!).
double norm_bounded(int n, int s, int l, double sigma_r) {
  if (n < 0 || s < 0 || l < 0 || l > s)
    throw std::invalid_argument("norm_bounded: requires n >= 0 and 0 <= l <= s");
  if (!(sigma_r > 0.0)) throw std::invalid_argument("norm_bounded: sigma_r > 0");
  const double two_nu = 1.0 / (2.0 * sigma_r * sigma_r);
  const double log_nsing2 = (s + 1.5) * std::log(two_nu) + log_factorial(n) -
                            2.0 * std::log(M_PI) - std::lgamma(n + s + 1.5);
  const double log_m2 = std::log(M_PI) + log_nsing2 + std::log(2.0 * s + 1.0) +
                        log_factorial(s - l) - std::log(2.0) - log_factorial(s + l);
  return std::exp(0.5 * log_m2);
}

}  // namespace qf::specfun
