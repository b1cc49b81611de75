#include "sqgsteady/simd/kernels.hpp"
#include "sqgsteady/errors.hpp"

#include <cstdlib>
#include <string>

namespace sqgsteady::simd {

namespace {

const Ops& select() {
    const char* req = std::getenv("SQGSTEADY_SIMD");
    if (req != nullptr && *req != '\0') {
        const std::string want(req);
        if (want == "scalar") return scalar_ops();
        if (want == "avx2") {
            const Ops* ops = avx2_ops();
            if (ops == nullptr) throw config_error("SQGSTEADY_SIMD=avx2 but AVX2 is unavailable");
            return *ops;
        }
        if (want == "neon") {
            const Ops* ops = neon_ops();
            if (ops == nullptr) throw config_error("SQGSTEADY_SIMD=neon but NEON is unavailable");
            return *ops;
        }
        throw config_error("unknown SQGSTEADY_SIMD backend: " + want);
    }
    if (const Ops* ops = avx2_ops()) return *ops;
    if (const Ops* ops = neon_ops()) return *ops;
    return scalar_ops();
}

} // namespace

const Ops& active() {
    static const Ops& chosen = select();
    return chosen;
}

} // namespace sqgsteady::simd
