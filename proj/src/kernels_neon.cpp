#include "kernels_internal.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>
#include <cstddef>

namespace clif::kernels {

// NEON analogue of the AVX2 kernel with two-wide f64 vectors: for fixed j
// only the low bit s = j & 1 decides the in-register permutation (identity
// or lane swap), and the pair of contributions lands at out + ((j & ~1) ^ k0).
static void product_neon(const MulTable& t, const double* a, const double* b,
                         double* out) {
  const std::size_t n = t.size;
  if (n < 2) {
    scalar_backend().product(t, a, b, out);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
  const double* sign = t.sign.data();
  for (std::size_t j = 0; j < n; ++j) {
    const double aj = a[j];
    if (aj == 0.0) continue;
    const float64x2_t va = vdupq_n_f64(aj);
    const double* srow = sign + j * n;
    const bool swap = (j & 1u) != 0;
    const std::size_t base = j & ~std::size_t(1);
    for (std::size_t k0 = 0; k0 < n; k0 += 2) {
      const float64x2_t vb = vld1q_f64(b + k0);
      const float64x2_t vs = vld1q_f64(srow + k0);
      float64x2_t contr = vmulq_f64(va, vmulq_f64(vs, vb));
      if (swap) contr = vextq_f64(contr, contr, 1);
      double* dst = out + (base ^ k0);
      vst1q_f64(dst, vaddq_f64(vld1q_f64(dst), contr));
    }
  }
}

const Backend* neon_backend_or_null() {
  static const Backend backend{"neon", &product_neon};
  return &backend;
}

} // namespace clif::kernels

#else

namespace clif::kernels {
const Backend* neon_backend_or_null() { return nullptr; }
} // namespace clif::kernels

#endif
