#pragma once

// Finitely generated subgroups of Q^3 (rank 0-3) in canonical Hermite normal
// form.
//
// Convention: basis vectors are columns of a lower-echelon integer matrix.
// Column j has its pivot in row p_j (p_0 < p_1 < ...), zeros above the pivot,
// a positive pivot, and every entry to the left of a pivot (same row, earlier
// column) reduced into [0, pivot). The represented vectors are scale * column,
// where scale = 1/k and k is the least positive integer making every vector of
// the subgroup integral. Equal subgroups therefore have identical
// (basis, scale).

#include <span>
#include <vector>

#include "maxsym/exactmath.hpp"

namespace maxsym {

class SubgroupHNF {
public:
    /// The trivial subgroup.
    SubgroupHNF() = default;

    static SubgroupHNF from_integer(std::span<const IntVec3> generators);
    static SubgroupHNF from_rational(std::span<const Vec3> generators);
    static SubgroupHNF from_rational(std::initializer_list<Vec3> generators) {
        return from_rational(std::span<const Vec3>(generators.begin(), generators.size()));
    }

    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<IntVec3>& basis() const { return basis_; }
    /// Row of the pivot of column j.
    int pivot_row(std::size_t j) const { return pivots_[j]; }
    const Rational& scale() const { return scale_; }

    /// Basis vectors as rational vectors (scale applied).
    std::vector<Vec3> vectors() const;

    bool contains(const Vec3& v) const;
    bool contains(const SubgroupHNF& other) const;

    /// Canonical representative of v + L: pivot-ordered reduction into the
    /// half-open cell [0, pivot) along each pivot row.
    Vec3 reduce(const Vec3& v) const;

    /// |det| of the basis times scale^3. Rank 3 only.
    Rational covolume() const;

    /// Basis as the columns of a matrix. Rank 3 only.
    Mat3 matrix() const;

    friend bool operator==(const SubgroupHNF& a, const SubgroupHNF& b) {
        return a.scale_ == b.scale_ && a.basis_ == b.basis_;
    }
    friend bool operator<(const SubgroupHNF& a, const SubgroupHNF& b);

private:
    std::vector<IntVec3> basis_;
    std::vector<int> pivots_;
    Rational scale_{1};

    void canonicalize();
};

std::string to_string(const SubgroupHNF& l);

/// Canonical HNF of the subgroup generated by integer vectors.
SubgroupHNF hnf(std::span<const IntVec3> generators);
inline SubgroupHNF hnf(std::initializer_list<IntVec3> generators) {
    return hnf(std::span<const IntVec3>(generators.begin(), generators.size()));
}

bool member(const Vec3& v, const SubgroupHNF& l);

/// [sup : sub]. Throws RankDeficient unless both have rank 3 and
/// NotASubgroup unless sub is contained in sup.
Integer index(const SubgroupHNF& sub, const SubgroupHNF& sup);

/// The subgroup generated by a and b.
SubgroupHNF join(const SubgroupHNF& a, const SubgroupHNF& b);

/// One representative per coset of sub in sup, each reduced into the cell of
/// sub. Same preconditions and errors as index().
std::vector<Vec3> coset_reps(const SubgroupHNF& sub, const SubgroupHNF& sup);

/// The subgroup s * L.
SubgroupHNF scaled(const SubgroupHNF& l, const Rational& s);

/// Image of L under a linear map (rank preserved when the map is invertible).
SubgroupHNF transform(const Mat3& m, const SubgroupHNF& l);

}  // namespace maxsym
