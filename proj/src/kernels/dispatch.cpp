#include "kernels/dispatch.hpp"

#include <atomic>
#include <string>

#include "core/error.hpp"

namespace roadvec::kernels {

const char* backendName(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

bool backendSupported(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(ROADVEC_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::neon:
#if defined(ROADVEC_HAVE_NEON)
      return true;  // mandatory on aarch64
#else
      return false;
#endif
  }
  return false;
}

Backend detectBackend() {
  if (backendSupported(Backend::avx2)) return Backend::avx2;
  if (backendSupported(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

namespace {
std::atomic<Backend> gBackend{detectBackend()};
}

Backend activeBackend() { return gBackend.load(std::memory_order_relaxed); }

void setBackend(Backend b) {
  if (!backendSupported(b))
    throw ConfigError(std::string("backend ") + backendName(b) + " is not supported on this CPU");
  gBackend.store(b, std::memory_order_relaxed);
}

}  // namespace roadvec::kernels
