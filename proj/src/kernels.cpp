#include "kernels_internal.hpp"

#include <cstdlib>
#include <cstring>
#include <vector>

namespace clif::kernels {

static std::vector<const Backend*> discover() {
  std::vector<const Backend*> found;
  found.push_back(&scalar_backend());
  if (const Backend* b = avx2_backend_or_null()) {
#if defined(__x86_64__)
    if (__builtin_cpu_supports("avx2")) found.push_back(b);
#else
    (void)b;
#endif
  }
  if (const Backend* b = neon_backend_or_null()) found.push_back(b);
  return found;
}

const std::vector<const Backend*>& available_backends() {
  static const std::vector<const Backend*> backends = discover();
  return backends;
}

static const Backend* pick_initial() {
  const auto& backends = available_backends();
  const Backend* choice = backends.back(); // best available
  if (const char* env = std::getenv("CLIF_KERNEL")) {
    for (const Backend* b : backends)
      if (std::strcmp(b->name, env) == 0) choice = b;
  }
  return choice;
}

static const Backend*& active_slot() {
  static const Backend* active = pick_initial();
  return active;
}

const Backend& active_backend() { return *active_slot(); }

bool set_active_backend(const char* name) {
  for (const Backend* b : available_backends()) {
    if (std::strcmp(b->name, name) == 0) {
      active_slot() = b;
      return true;
    }
  }
  return false;
}

} // namespace clif::kernels
