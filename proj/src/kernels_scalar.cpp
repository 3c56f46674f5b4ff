#include "qf/kernels.hpp"

#include <cmath>

// Reference kernels. The AVX2 variants in kernels_avx2.cpp mirror these
// loops lane-for-lane; keep the recurrences structurally identical.

namespace qf::kernels::scalar {

void laguerre_batch(int n, double alpha, const double* x, double* out, std::size_t count) {
  if (n == 0) {
    for (std::size_t i = 0; i < count; ++i) out[i] = 1.0;
    return;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const double xi = x[i];
    double lkm1 = 1.0;               // L_0
    double lk = 1.0 + alpha - xi;    // L_1
    for (int k = 2; k <= n; ++k) {
      const double a = (2.0 * k - 1.0 + alpha - xi) / k;
      const double b = (k - 1.0 + alpha) / k;
      const double lkp1 = a * lk - b * lkm1;
      lkm1 = lk;
      lk = lkp1;
    }
    out[i] = lk;
  }
}

void assoc_legendre_batch(int s, int l, const double* x, double* out, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    const double xi = x[i];
    // seed P_l^l(x) = (-1)^l (2l-1)!! (1-x^2)^{l/2}
    double pmm = 1.0;
    if (l > 0) {
      const double root = std::sqrt((1.0 - xi) * (1.0 + xi));
      double fact = 1.0;
      for (int k = 1; k <= l; ++k) {
        pmm *= -fact * root;
        fact += 2.0;
      }
    }
    if (s == l) {
      out[i] = pmm;
      continue;
    }
    double pm1 = pmm;
    double pm = (2.0 * l + 1.0) * xi * pmm;  // P_{l+1}^l
    for (int k = l + 2; k <= s; ++k) {
      const double pk = ((2.0 * k - 1.0) * xi * pm - (k + l - 1.0) * pm1) / (k - l);
      pm1 = pm;
      pm = pk;
    }
    out[i] = pm;
  }
}

}  // namespace qf::kernels::scalar
