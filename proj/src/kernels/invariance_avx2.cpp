// Compiled with -mavx2; only reached through the runtime dispatch.

#include <immintrin.h>

#include "maxsym/kernels.hpp"

namespace maxsym::kernels::detail {

namespace {

// All coordinates are small integers, exactly representable as doubles, and
// x / p rounds to an integer only when p divides x.
inline __m256d floor_div(__m256d x, __m256d p) { return _mm256_floor_pd(_mm256_div_pd(x, p)); }

inline __m256d divisible(__m256d x, __m256d p, __m256d q) {
    return _mm256_cmp_pd(_mm256_sub_pd(x, _mm256_mul_pd(q, p)), _mm256_setzero_pd(), _CMP_EQ_OQ);
}

struct Lanes {
    __m256d a, b, c, d, e, f;

    __m256d contains(__m256d w0, __m256d w1, __m256d w2) const {
        const __m256d x1 = floor_div(w0, a);
        __m256d mask = divisible(w0, a, x1);
        const __m256d r1 = _mm256_sub_pd(w1, _mm256_mul_pd(x1, b));
        const __m256d x2 = floor_div(r1, c);
        mask = _mm256_and_pd(mask, divisible(r1, c, x2));
        const __m256d r2 =
            _mm256_sub_pd(_mm256_sub_pd(w2, _mm256_mul_pd(x1, d)), _mm256_mul_pd(x2, e));
        return _mm256_and_pd(mask, divisible(r2, f, floor_div(r2, f)));
    }
};

inline __m256d row(const double* r, __m256d v0, __m256d v1, __m256d v2) {
    return _mm256_add_pd(
        _mm256_add_pd(_mm256_mul_pd(_mm256_set1_pd(r[0]), v0), _mm256_mul_pd(_mm256_set1_pd(r[1]), v1)),
        _mm256_mul_pd(_mm256_set1_pd(r[2]), v2));
}

}  // namespace

void invariant_tails_avx2(std::span<const IntMat> rots, std::int64_t a, std::int64_t b,
                          std::int64_t c, std::int64_t f, std::uint8_t* ok) {
    constexpr std::size_t kMaxRots = 16;
    double mats[kMaxRots][9];
    const std::size_t nrot = rots.size() < kMaxRots ? rots.size() : kMaxRots;
    if (nrot != rots.size()) {
        invariant_tails_scalar(rots, a, b, c, f, ok);
        return;
    }
    for (std::size_t k = 0; k < nrot; ++k)
        for (std::size_t i = 0; i < 9; ++i) mats[k][i] = static_cast<double>(rots[k][i]);

    const __m256d zero = _mm256_setzero_pd();
    const __m256d step = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
    Lanes t{_mm256_set1_pd(static_cast<double>(a)), _mm256_set1_pd(static_cast<double>(b)),
            _mm256_set1_pd(static_cast<double>(c)), zero, zero, _mm256_set1_pd(static_cast<double>(f))};

    for (std::int64_t d = 0; d < f; ++d) {
        t.d = _mm256_set1_pd(static_cast<double>(d));
        for (std::int64_t e0 = 0; e0 < f; e0 += 4) {
            t.e = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(e0)), step);
            const __m256d cols[3][3] = {{t.a, t.b, t.d}, {zero, t.c, t.e}, {zero, zero, t.f}};
            __m256d acc = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
            for (std::size_t k = 0; k < nrot && _mm256_movemask_pd(acc) != 0; ++k) {
                const double* r = mats[k];
                for (const auto& v : cols) {
                    const __m256d w0 = row(r, v[0], v[1], v[2]);
                    const __m256d w1 = row(r + 3, v[0], v[1], v[2]);
                    const __m256d w2 = row(r + 6, v[0], v[1], v[2]);
                    acc = _mm256_and_pd(acc, t.contains(w0, w1, w2));
                }
            }
            const int bits = _mm256_movemask_pd(acc);
            const std::int64_t lanes = f - e0 < 4 ? f - e0 : 4;
            for (std::int64_t l = 0; l < lanes; ++l) ok[d * f + e0 + l] = (bits >> l) & 1;
        }
    }
}

}  // namespace maxsym::kernels::detail
