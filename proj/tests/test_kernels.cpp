#include "doctest.h"

#include <random>
#include <vector>

#include "maxsym/sublattices.hpp"

using namespace maxsym;
using kernels::Backend;

namespace {

std::vector<std::uint8_t> run(std::span<const kernels::IntMat> rots, std::int64_t a, std::int64_t b,
                              std::int64_t c, std::int64_t f, Backend backend) {
    std::vector<std::uint8_t> ok(static_cast<std::size_t>(f * f), 7);
    kernels::invariant_tails(rots, a, b, c, f, ok.data(), backend);
    return ok;
}

}  // namespace

TEST_CASE("scalar kernel matches exact membership") {
    const SpaceGroup g = make_group(GroupName::P4_232);
    const auto rots = rotations_in_t0(g);
    for (std::int64_t a : {1, 2, 3})
        for (std::int64_t c : {1, 2, 4})
            for (std::int64_t f : {1, 2, 3, 6}) {
                for (std::int64_t b = 0; b < c; ++b) {
                    const auto ok = run(rots, a, b, c, f, Backend::Scalar);
                    for (std::int64_t d = 0; d < f; ++d)
                        for (std::int64_t e = 0; e < f; ++e) {
                            const SubgroupHNF l = TriangularBasis{a, b, c, d, e, f}.lattice();
                            CHECK((ok[d * f + e] == 1) == is_invariant(l, g));
                        }
                }
            }
}

TEST_CASE("avx2 kernel is byte-identical to the scalar kernel") {
    if (!kernels::avx2_available()) {
        MESSAGE("AVX2 unavailable; skipping");
        CHECK_THROWS(run({}, 1, 0, 1, 1, Backend::Avx2));
        return;
    }
    CHECK(kernels::best_backend() == Backend::Avx2);
    SUBCASE("group rotations over every shape up to index 64") {
        for (GroupName name : kAllGroups) {
            const auto rots = rotations_in_t0(make_group(name));
            for (long idx = 1; idx <= 64; ++idx)
                for (long a = 1; a <= idx; ++a) {
                    if (idx % a) continue;
                    for (long c = 1; c <= idx / a; ++c) {
                        if ((idx / a) % c) continue;
                        const long f = idx / a / c;
                        for (long b = 0; b < c; ++b)
                            CHECK(run(rots, a, b, c, f, Backend::Scalar) == run(rots, a, b, c, f, Backend::Avx2));
                    }
                }
        }
    }
    SUBCASE("random integer matrices and shapes") {
        std::mt19937 rng(17);
        std::uniform_int_distribution<int> entry(-3, 3);
        std::uniform_int_distribution<int> pivot(1, 13);
        std::uniform_int_distribution<int> count(0, 5);
        for (int trial = 0; trial < 400; ++trial) {
            std::vector<kernels::IntMat> rots(static_cast<std::size_t>(count(rng)));
            for (auto& r : rots)
                for (auto& x : r) x = entry(rng);
            const std::int64_t a = pivot(rng), c = pivot(rng), f = pivot(rng);
            const std::int64_t b = std::uniform_int_distribution<std::int64_t>(0, c - 1)(rng);
            CHECK(run(rots, a, b, c, f, Backend::Scalar) == run(rots, a, b, c, f, Backend::Avx2));
        }
    }
    SUBCASE("full enumeration agrees") {
        const auto rots = rotations_in_t0(make_group(GroupName::I4_132));
        CHECK(invariant_sublattices(rots, 200, Backend::Scalar, 1) ==
              invariant_sublattices(rots, 200, Backend::Avx2, 1));
    }
}

TEST_CASE("threaded enumeration is deterministic") {
    const auto rots = rotations_in_t0(make_group(GroupName::F4_132));
    const auto serial = invariant_sublattices(rots, 128, Backend::Scalar, 1);
    CHECK(invariant_sublattices(rots, 128, Backend::Scalar, 4) == serial);
    CHECK_FALSE(serial.empty());
}
