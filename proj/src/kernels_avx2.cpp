#include "qf/kernels.hpp"

#if defined(QF_HAVE_AVX2_KERNELS)

#include <immintrin.h>

// 4-lane AVX2 mirrors of the scalar reference kernels. Remainders of fewer
// than 4 values fall through to the scalar path.

namespace qf::kernels::avx2 {

void laguerre_batch(int n, double alpha, const double* x, double* out, std::size_t count) {
  if (n == 0) {
    for (std::size_t i = 0; i < count; ++i) out[i] = 1.0;
    return;
  }
  const std::size_t main = count - count % 4;
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d va = _mm256_set1_pd(alpha);
  for (std::size_t i = 0; i < main; i += 4) {
    const __m256d xi = _mm256_loadu_pd(x + i);
    __m256d lkm1 = one;
    __m256d lk = _mm256_sub_pd(_mm256_add_pd(one, va), xi);
    for (int k = 2; k <= n; ++k) {
      const __m256d inv_k = _mm256_set1_pd(1.0 / k);
      const __m256d two_k_m1 = _mm256_set1_pd(2.0 * k - 1.0);
      const __m256d b = _mm256_set1_pd((k - 1.0 + alpha) / k);
      const __m256d a = _mm256_mul_pd(
          _mm256_sub_pd(_mm256_add_pd(two_k_m1, va), xi), inv_k);
      const __m256d lkp1 = _mm256_fmsub_pd(a, lk, _mm256_mul_pd(b, lkm1));
      lkm1 = lk;
      lk = lkp1;
    }
    _mm256_storeu_pd(out + i, lk);
  }
  if (main < count)
    scalar::laguerre_batch(n, alpha, x + main, out + main, count - main);
}

void assoc_legendre_batch(int s, int l, const double* x, double* out, std::size_t count) {
  const std::size_t main = count - count % 4;
  const __m256d one = _mm256_set1_pd(1.0);
  for (std::size_t i = 0; i < main; i += 4) {
    const __m256d xi = _mm256_loadu_pd(x + i);
    __m256d pmm = one;
    if (l > 0) {
      const __m256d root = _mm256_sqrt_pd(
          _mm256_mul_pd(_mm256_sub_pd(one, xi), _mm256_add_pd(one, xi)));
      for (int k = 1; k <= l; ++k) {
        const __m256d neg_fact = _mm256_set1_pd(-(2.0 * k - 1.0));
        pmm = _mm256_mul_pd(pmm, _mm256_mul_pd(neg_fact, root));
      }
    }
    if (s == l) {
      _mm256_storeu_pd(out + i, pmm);
      continue;
    }
    __m256d pm1 = pmm;
    __m256d pm = _mm256_mul_pd(_mm256_set1_pd(2.0 * l + 1.0), _mm256_mul_pd(xi, pmm));
    for (int k = l + 2; k <= s; ++k) {
      const __m256d ck = _mm256_set1_pd(2.0 * k - 1.0);
      const __m256d dk = _mm256_set1_pd(k + l - 1.0);
      const __m256d inv = _mm256_set1_pd(1.0 / (k - l));
      const __m256d pk = _mm256_mul_pd(
          _mm256_fmsub_pd(_mm256_mul_pd(ck, xi), pm, _mm256_mul_pd(dk, pm1)), inv);
      pm1 = pm;
      pm = pk;
    }
    _mm256_storeu_pd(out + i, pm);
  }
  if (main < count)
    scalar::assoc_legendre_batch(s, l, x + main, out + main, count - main);
}

}  // namespace qf::kernels::avx2

#endif  // QF_HAVE_AVX2_KERNELS
