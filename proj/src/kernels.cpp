#include "qf/kernels.hpp"

#include <stdexcept>

namespace qf::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(QF_HAVE_AVX2_KERNELS) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa& current() {
  static Isa isa = cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
  return isa;
}

}  // namespace

Isa active_isa() { return current(); }

void force_isa(Isa isa) {
  if (isa == Isa::Avx2 && !cpu_has_avx2())
    throw std::runtime_error("kernels: AVX2 not supported on this host");
  current() = isa;
}

std::string isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void laguerre_batch(int n, double alpha, const double* x, double* out, std::size_t count) {
#if defined(QF_HAVE_AVX2_KERNELS)
  if (current() == Isa::Avx2) {
    avx2::laguerre_batch(n, alpha, x, out, count);
    return;
  }
#endif
  scalar::laguerre_batch(n, alpha, x, out, count);
}

void assoc_legendre_batch(int s, int l, const double* x, double* out, std::size_t count) {
#if defined(QF_HAVE_AVX2_KERNELS)
  if (current() == Isa::Avx2) {
    avx2::assoc_legendre_batch(s, l, x, out, count);
    return;
  }
#endif
  scalar::assoc_legendre_batch(s, l, x, out, count);
}

}  // namespace qf::kernels
