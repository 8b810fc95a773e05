#include "clifford/kernels.hpp"

#include <cstddef>

namespace clif::kernels {

// Reference XOR-convolution: out[j^k] += a[j] * (sign[j][k] * b[k]).
// Every output slot receives at most one contribution per j, so the
// accumulation order is "ascending j", which the SIMD variants reproduce
// exactly.  Keep the arithmetic as mul-then-add (no fused contraction) so
// all backends agree bit-for-bit under -ffp-contract=off.
static void product_scalar(const MulTable& t, const double* a, const double* b,
                           double* out) {
  const std::size_t n = t.size;
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
  const double* sign = t.sign.data();
  for (std::size_t j = 0; j < n; ++j) {
    const double aj = a[j];
    if (aj == 0.0) continue;
    const double* srow = sign + j * n;
    for (std::size_t k = 0; k < n; ++k)
      out[j ^ k] += aj * (srow[k] * b[k]);
  }
}

const Backend& scalar_backend() {
  static const Backend backend{"scalar", &product_scalar};
  return backend;
}

} // namespace clif::kernels
