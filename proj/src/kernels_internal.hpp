#pragma once

#include "clifford/kernels.hpp"

namespace clif::kernels {

// Each SIMD translation unit exposes its backend, or nullptr when the file
// was built for a target that cannot run it.  Runtime capability checks
// (e.g. cpuid for AVX2) happen in the registry, not here.
const Backend* avx2_backend_or_null();
const Backend* neon_backend_or_null();

} // namespace clif::kernels
