#include "kernels_internal.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <cstddef>
#include <immintrin.h>

namespace clif::kernels {

// AVX2 XOR-convolution.  The key observation: for fixed j the output index
// j^k ranges over a permuted copy of k, and within an aligned block of four
// consecutive k the permutation depends only on s = j & 3.  XOR by s is one
// of four in-register shuffles:
//   s = 0  identity
//   s = 1  swap within 128-bit pairs        [c1 c0 c3 c2]
//   s = 2  swap the two 128-bit halves      [c2 c3 c0 c1]
//   s = 3  both, i.e. full reversal         [c3 c2 c1 c0]
// The block of four contributions then lands contiguously at
// out + ((j & ~3) ^ k0).  Contributions keep the scalar kernel's
// per-output accumulation order (ascending j, one term per j).
static void product_avx2(const MulTable& t, const double* a, const double* b,
                         double* out) {
  const std::size_t n = t.size;
  if (n < 4) { // Cl(p,q) with p+q < 2: nothing to vectorize
    scalar_backend().product(t, a, b, out);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
  const double* sign = t.sign.data();
  for (std::size_t j = 0; j < n; ++j) {
    const double aj = a[j];
    if (aj == 0.0) continue;
    const __m256d va = _mm256_set1_pd(aj);
    const double* srow = sign + j * n;
    const unsigned s = unsigned(j) & 3u;
    const std::size_t base = j & ~std::size_t(3);
    for (std::size_t k0 = 0; k0 < n; k0 += 4) {
      const __m256d vb = _mm256_loadu_pd(b + k0);
      const __m256d vs = _mm256_loadu_pd(srow + k0);
      __m256d contr = _mm256_mul_pd(va, _mm256_mul_pd(vs, vb));
      if (s & 1u) contr = _mm256_permute_pd(contr, 0b0101);
      if (s & 2u) contr = _mm256_permute4x64_pd(contr, _MM_SHUFFLE(1, 0, 3, 2));
      double* dst = out + (base ^ k0);
      _mm256_storeu_pd(dst, _mm256_add_pd(_mm256_loadu_pd(dst), contr));
    }
  }
}

const Backend* avx2_backend_or_null() {
  static const Backend backend{"avx2", &product_avx2};
  return &backend;
}

} // namespace clif::kernels

#else

namespace clif::kernels {
const Backend* avx2_backend_or_null() { return nullptr; }
} // namespace clif::kernels

#endif
