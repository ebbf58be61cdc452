#include "maxsym/kernels.hpp"

namespace maxsym::kernels::detail {

namespace {

struct Tri {
    std::int64_t a, b, c, d, e, f;

    // Back-substitution against the triangular basis.
    bool contains(std::int64_t w0, std::int64_t w1, std::int64_t w2) const {
        if (w0 % a != 0) return false;
        const std::int64_t x1 = w0 / a;
        const std::int64_t r1 = w1 - x1 * b;
        if (r1 % c != 0) return false;
        const std::int64_t x2 = r1 / c;
        return (w2 - x1 * d - x2 * e) % f == 0;
    }

    bool maps_into_itself(const IntMat& r) const {
        const std::int64_t cols[3][3] = {{a, b, d}, {0, c, e}, {0, 0, f}};
        for (const auto& v : cols) {
            const std::int64_t w0 = r[0] * v[0] + r[1] * v[1] + r[2] * v[2];
            const std::int64_t w1 = r[3] * v[0] + r[4] * v[1] + r[5] * v[2];
            const std::int64_t w2 = r[6] * v[0] + r[7] * v[1] + r[8] * v[2];
            if (!contains(w0, w1, w2)) return false;
        }
        return true;
    }
};

}  // namespace

void invariant_tails_scalar(std::span<const IntMat> rots, std::int64_t a, std::int64_t b,
                            std::int64_t c, std::int64_t f, std::uint8_t* ok) {
    for (std::int64_t d = 0; d < f; ++d) {
        for (std::int64_t e = 0; e < f; ++e) {
            const Tri t{a, b, c, d, e, f};
            bool good = true;
            for (const auto& r : rots) {
                if (!t.maps_into_itself(r)) {
                    good = false;
                    break;
                }
            }
            ok[d * f + e] = good ? 1 : 0;
        }
    }
}

}  // namespace maxsym::kernels::detail
