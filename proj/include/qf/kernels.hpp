#pragma once

#include <cstddef>
#include <string>

// Batch polynomial kernels used by the quadrature and grid-evaluation inner
// loops. A scalar reference implementation is always available; an AVX2
// variant is selected at runtime on x86-64 hosts that support it. The two
// paths are equivalence-tested against each other (see tests/test_kernels).

namespace qf::kernels {

enum class Isa { Scalar, Avx2 };

/// ISA picked at startup (AVX2 when the CPU supports it, scalar otherwise).
Isa active_isa();

/// Override the dispatch, e.g. to force the scalar path. Requesting Avx2 on
/// a host without AVX2 support throws.
void force_isa(Isa isa);

std::string isa_name(Isa isa);

/// out[i] = L_n^{(alpha)}(x[i]), generalized Laguerre via the three-term
/// recurrence upward in n.
void laguerre_batch(int n, double alpha, const double* x, double* out, std::size_t count);

/// out[i] = P_s^l(x[i]), associated Legendre with the Condon-Shortley phase,
/// 0 <= l <= s, |x| <= 1. Upward recurrence in degree from the P_l^l seed.
void assoc_legendre_batch(int s, int l, const double* x, double* out, std::size_t count);

namespace scalar {
void laguerre_batch(int n, double alpha, const double* x, double* out, std::size_t count);
void assoc_legendre_batch(int s, int l, const double* x, double* out, std::size_t count);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define QF_HAVE_AVX2_KERNELS 1
namespace avx2 {
void laguerre_batch(int n, double alpha, const double* x, double* out, std::size_t count);
void assoc_legendre_batch(int s, int l, const double* x, double* out, std::size_t count);
}  // namespace avx2
#endif

}  // namespace qf::kernels
