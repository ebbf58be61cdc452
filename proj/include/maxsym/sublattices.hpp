#pragma once

// Finite-index translation sublattices: exhaustive enumeration in Hermite
// normal form, the invariance filter under a point group, and matching of the
// survivors against the closed-form lattice families.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxsym/kernels.hpp"
#include "maxsym/lattice.hpp"
#include "maxsym/spacegroup.hpp"

namespace maxsym {

enum class FamilyTag {
    CubicPrimitive,  // <n t_x, n t_y, n t_z>
    CubicFace,       // <2n t_x, n t_y + n t_x, n t_z + n t_x>
    CubicBody,       // <n t_x, n t_y, n t_half>
    HexPrimitive,    // <n t_w, n t_x, m t_z>
    HexRot,          // <2n t_w + n t_x, n t_w + 2n t_x, m t_z>
};

std::string_view to_string(FamilyTag tag);
bool is_hexagonal(FamilyTag tag);

struct LatticeFamily {
    FamilyTag tag = FamilyTag::CubicPrimitive;
    long n = 1;
    std::optional<long> m;  // hexagonal tags only

    friend bool operator==(const LatticeFamily&, const LatticeFamily&) = default;
};

std::string to_string(const LatticeFamily& family);

/// The family member as a canonical subgroup in frame coordinates.
SubgroupHNF instantiate(const LatticeFamily& family);

/// The unique family member equal to l. Throws UnmatchedLattice.
LatticeFamily match_family(const SubgroupHNF& l, const Frame& frame);

/// All sublattices of t0 of index exactly d, canonical, sorted, no duplicates.
std::vector<SubgroupHNF> enumerate_sublattices(const SubgroupHNF& t0, long d);

/// conjugate_translation(g, b) in l for every coset g and basis vector b of l.
/// Throws NotASubgroup unless l is a finite-index subgroup of the group's T0.
bool is_invariant(const SubgroupHNF& l, const SpaceGroup& group);

/// Lower-triangular integer basis (a,b,d), (0,c,e), (0,0,f) in T0 coordinates.
struct TriangularBasis {
    std::int64_t a, b, c, d, e, f;

    std::int64_t index() const { return a * c * f; }
    SubgroupHNF lattice() const;
    friend bool operator==(const TriangularBasis&, const TriangularBasis&) = default;
};

/// Every sublattice of Z^3 of index <= max_index mapped into itself by all of
/// rots, ordered by (index, a, c, b, d, e).
std::vector<TriangularBasis> invariant_sublattices(std::span<const kernels::IntMat> rots,
                                                   long max_index,
                                                   kernels::Backend backend = kernels::best_backend(),
                                                   unsigned threads = 0);

/// Generator rotations of the group written in T0 coordinates.
std::vector<kernels::IntMat> rotations_in_t0(const SpaceGroup& group);

/// A one-parameter series of family members contained in T0: the members
/// instantiate(tag, step * n) for n >= 1 (and any m for hexagonal tags).
struct FamilySeries {
    FamilyTag tag;
    long step = 1;
    /// Covolume of the n = 1 member: the member for n has covolume
    /// coefficient * n^3 (cubic) or coefficient * m * n^2 (hexagonal).
    Rational coefficient;
    /// coefficient / covolume(T0) * point order.
    Rational pi1_coefficient;
    /// Conventional name such as "T_{4n^3}" or "T^w_{3n^2}".
    std::string name;

    LatticeFamily member(long n, long m = 1) const;
};

/// The series of every family tag of the group's frame, in tag order.
std::vector<FamilySeries> family_series(const SpaceGroup& group);

struct NormalSubgroup {
    SubgroupHNF lattice;  // frame coordinates
    LatticeFamily family;
    std::size_t series = 0;  // position in family_series(group)
    long n = 1;              // family.n == series.step * n
    long lattice_index = 1;  // [T0 : lattice]
    Integer pi1_index;       // point_order * lattice_index
};

/// Invariant sublattices of T0 with index <= max_index, each matched to its
/// family. Ordered by (lattice_index, lattice). Throws UnmatchedLattice.
std::vector<NormalSubgroup> normal_translation_subgroups(
    const SpaceGroup& group, long max_index, kernels::Backend backend = kernels::best_backend(),
    unsigned threads = 0);

}  // namespace maxsym
