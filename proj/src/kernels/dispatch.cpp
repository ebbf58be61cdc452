#include <stdexcept>

#include "maxsym/kernels.hpp"

namespace maxsym::kernels {

std::string_view to_string(Backend backend) { return backend == Backend::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    static const bool has = __builtin_cpu_supports("avx2");
    return has;
#else
    return false;
#endif
}

Backend best_backend() { return avx2_available() ? Backend::Avx2 : Backend::Scalar; }

void invariant_tails(std::span<const IntMat> rots, std::int64_t a, std::int64_t b, std::int64_t c,
                     std::int64_t f, std::uint8_t* ok, Backend backend) {
    if (backend == Backend::Avx2) {
        if (!avx2_available()) throw std::invalid_argument("AVX2 is not available on this CPU");
        detail::invariant_tails_avx2(rots, a, b, c, f, ok);
        return;
    }
    detail::invariant_tails_scalar(rots, a, b, c, f, ok);
}

}  // namespace maxsym::kernels
