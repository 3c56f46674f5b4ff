#pragma once

// Independent oracles used by the tests: explicit-series Laguerre, Rodrigues
// associated Legendre, reference funnel-state evaluation. Deliberately kept
// free of any qf:: implementation code.

#include <cmath>
#include <complex>
#include <vector>

namespace oracles {

// L_n^{(alpha)}(x) = sum_k (-1)^k binom(n+alpha, n-k) x^k / k!, accumulated in
// extended precision (the alternating sum cancels ~9 digits at n=12, x=20).
inline double laguerre_series(int n, double alpha, double x) {
  long double sum = 0.0L;
  long double binom = 1.0L;  // binom(n+alpha, n-k) starting at k = n
  for (int j = 1; j <= n; ++j) binom *= (alpha + j) / j;  // k = 0 value
  long double xpow = 1.0L;
  long double kfact = 1.0L;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      // binom(n+a, n-k) = binom(n+a, n-k+1) * (n-k+1) / (a+k)
      binom *= static_cast<long double>(n - k + 1) / (alpha + k);
      xpow *= x;
      kfact *= k;
    }
    const long double term = binom * xpow / kfact;
    sum += (k % 2 == 0) ? term : -term;
  }
  return static_cast<double>(sum);
}

// Coefficients of d^m/dx^m (x^2 - 1)^s, then
// P_s^l = (-1)^l / (2^s s!) (1 - x^2)^{l/2} d^{s+l}/dx^{s+l} (x^2-1)^s.
inline double assoc_legendre_rodrigues(int s, int l, double x) {
  // (x^2-1)^s expanded: sum_j binom(s, j) x^{2j} (-1)^{s-j}
  std::vector<double> coeff(2 * s + 1, 0.0);
  for (int j = 0; j <= s; ++j) {
    const double binom = std::exp(std::lgamma(s + 1.0) - std::lgamma(j + 1.0) -
                                  std::lgamma(s - j + 1.0));
    coeff[2 * j] = ((s - j) % 2 == 0 ? binom : -binom);
  }
  for (int d = 0; d < s + l; ++d) {
    for (std::size_t p = 0; p + 1 < coeff.size(); ++p) coeff[p] = (p + 1.0) * coeff[p + 1];
    coeff.back() = 0.0;
  }
  double poly = 0.0;
  for (int p = static_cast<int>(coeff.size()) - 1; p >= 0; --p) poly = poly * x + coeff[p];
  const double pref = ((l % 2 == 0) ? 1.0 : -1.0) *
                      std::pow(1.0 - x * x, l / 2.0) /
                      std::exp(s * std::log(2.0) + std::lgamma(s + 1.0));
  return pref * poly;
}

}  // namespace oracles
