#pragma once

namespace roadvec::kernels {

enum class Backend { scalar, avx2, neon };

const char* backendName(Backend b);
bool backendSupported(Backend b);

// Best backend the running CPU supports.
Backend detectBackend();

// Process-wide backend used by all kernel entry points. Defaults to
// detectBackend() on first use; setBackend throws ConfigError when the CPU
// lacks the requested instruction set.
Backend activeBackend();
void setBackend(Backend b);

}  // namespace roadvec::kernels
