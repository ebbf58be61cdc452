#pragma once

// Invariance filter for triangular sublattices of Z^3.
//
// A candidate sublattice is given by the lower-triangular column basis
//   (a, b, d), (0, c, e), (0, 0, f)     0 <= b < c, 0 <= d, e < f
// and is invariant under an integer matrix R when R maps each basis column
// back into the lattice. The kernels fix (a, b, c, f) and sweep the f*f grid
// of tails (d, e). The scalar kernel is the reference; the AVX2 kernel packs
// four consecutive e values per register and must agree with it byte for
// byte.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace maxsym::kernels {

/// Row-major 3x3 integer matrix.
using IntMat = std::array<std::int64_t, 9>;

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend backend);

/// True when the running CPU executes AVX2 instructions.
bool avx2_available();

/// Avx2 when available, Scalar otherwise.
Backend best_backend();

/// Sets ok[d * f + e] to 1 when the lattice with tail (d, e) is mapped into
/// itself by every matrix in rots, and to 0 otherwise. Throws
/// std::invalid_argument when Avx2 is requested on a CPU without it.
void invariant_tails(std::span<const IntMat> rots, std::int64_t a, std::int64_t b, std::int64_t c,
                     std::int64_t f, std::uint8_t* ok, Backend backend);

namespace detail {
void invariant_tails_scalar(std::span<const IntMat> rots, std::int64_t a, std::int64_t b,
                            std::int64_t c, std::int64_t f, std::uint8_t* ok);
void invariant_tails_avx2(std::span<const IntMat> rots, std::int64_t a, std::int64_t b,
                          std::int64_t c, std::int64_t f, std::uint8_t* ok);
}  // namespace detail

}  // namespace maxsym::kernels
