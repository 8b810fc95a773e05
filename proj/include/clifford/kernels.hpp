#pragma once

// Runtime-selected product kernels.
//
// The hot loop of the whole library is the XOR-convolution behind the
// geometric product: out[j^k] += sign[j][k] * a[j] * b[k].  A scalar
// reference kernel is always available; on x86-64 an AVX2 variant is used
// when the CPU supports it, and on aarch64 a NEON variant.  All variants
// accumulate contributions in the same order so results agree to roundoff;
// the unit tests assert pairwise equivalence on random inputs.
//
// Selection: best available at startup, overridable with the environment
// variable CLIF_KERNEL=scalar|avx2|neon (unknown or unavailable names fall
// back to scalar).

#include "clifford/algebra.hpp"

namespace clif::kernels {

using product_fn = void (*)(const MulTable& t, const double* a, const double* b,
                            double* out);

struct Backend {
  const char* name;
  product_fn product;
};

/// Portable reference kernel; also the fallback for untabled dimensions.
const Backend& scalar_backend();

/// Every backend usable on this machine (scalar first).
const std::vector<const Backend*>& available_backends();

/// The backend used by Multivector products.
const Backend& active_backend();

/// Force a backend by name (tests); returns false if unavailable.
bool set_active_backend(const char* name);

} // namespace clif::kernels
