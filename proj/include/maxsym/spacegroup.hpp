#pragma once

// Affine isometries in exact lattice coordinates and the six space groups whose
// quotient orbifolds carry a marked singular edge.
//
// Cubic groups use the orthonormal frame (t_x, t_y, t_z). P622 uses the
// hexagonal frame (t_w, t_x, t_z) with t_w at 120 degrees from t_x, so every
// rotation matrix is integral and sqrt(3) never appears.

#include <optional>
#include <string_view>
#include <vector>

#include "maxsym/exactmath.hpp"
#include "maxsym/lattice.hpp"

namespace maxsym {

enum class FrameKind { Cubic, Hexagonal };

struct Frame {
    FrameKind kind = FrameKind::Cubic;
    Mat3 gram;  // pairwise inner products of the basis vectors

    static Frame cubic();
    static Frame hexagonal();
    static Frame of(FrameKind kind);
};

std::string_view to_string(FrameKind kind);

/// x -> rot * x + trans.
struct Isometry {
    FrameKind frame = FrameKind::Cubic;
    Mat3 rot = Mat3::identity();
    Vec3 trans;

    friend bool operator==(const Isometry& a, const Isometry& b) = default;
};

Isometry identity(FrameKind frame);
Isometry translation(FrameKind frame, const Vec3& v);
/// compose(g, h) is g after h.
Isometry compose(const Isometry& g, const Isometry& h);
Isometry inverse(const Isometry& g);
Vec3 apply(const Isometry& g, const Vec3& p);
/// g^-1 t_u g = t_{rot^-1 u}; independent of g's translation part.
Vec3 conjugate_translation(const Isometry& g, const Vec3& u);
/// Smallest k >= 1 with rot^k = I; throws DomainError past 6.
int rotation_order(const Mat3& rot);
/// rot^T gram rot == gram and det(rot) == 1.
bool is_proper_isometry(const Mat3& rot, const Frame& frame);

/// Named generators and vectors.
namespace gen {
Vec3 t_x(FrameKind frame);
Vec3 t_y();  // cubic only
Vec3 t_z(FrameKind frame);
Vec3 t_half();  // (1/2,1/2,1/2), cubic
Vec3 t_omega();  // hexagonal frame coordinates (1,0,0)
Isometry r_y(FrameKind frame);
Isometry r_z(FrameKind frame);
Isometry r_xy();
Isometry r_xyz();
Isometry r_omega();
}  // namespace gen

enum class GroupName { P432, F4_132, I4_132, I432, P4_232, P622 };

inline constexpr std::array<GroupName, 6> kAllGroups{GroupName::P432,  GroupName::F4_132,
                                                     GroupName::I4_132, GroupName::I432,
                                                     GroupName::P4_232, GroupName::P622};

std::string_view to_string(GroupName name);
/// Accepts "P432", "F4_132", "F4132", "I4_132", ... (case-insensitive).
GroupName parse_group(std::string_view text);

struct SpaceGroup {
    GroupName name;
    Frame frame;
    /// Translation subgroup named in the presentation.
    SubgroupHNF listed_lattice;
    /// Non-translation generators, in presentation order.
    std::vector<Isometry> generators;
    /// Maximal translation lattice.
    SubgroupHNF t0;
    int point_order = 0;
    /// Representatives of G/T0, translation parts reduced into the cell of T0.
    std::vector<Isometry> cosets;

    /// T0 basis as matrix columns, and its inverse (frame -> T0 coordinates).
    Mat3 t0_basis;
    Mat3 t0_inverse;

    /// Translations generating listed_lattice followed by generators.
    std::vector<Isometry> all_generators() const;
    Vec3 to_cell(const Vec3& frame_coords) const { return t0_inverse * frame_coords; }
    Vec3 to_frame(const Vec3& cell_coords) const { return t0_basis * cell_coords; }
};

SpaceGroup make_group(GroupName name);

/// Closure of the generators with translation parts reduced mod t0.
/// Throws ClosureOverflow past 96 cosets.
std::vector<Isometry> point_group_cosets(std::span<const Isometry> generators,
                                         const SubgroupHNF& t0);

/// The subgroup of pure translations in the group generated by `generators`.
SubgroupHNF maximal_translation_lattice(std::span<const Isometry> generators);

struct Axis {
    Vec3 base;
    IntVec3 direction;  // primitive, lexicographically positive
    int order = 0;      // rotation order of the element

    bool contains(const Vec3& p) const;
    friend bool operator==(const Axis& a, const Axis& b) = default;
};

/// Fixed line of a rotation; nullopt for a screw motion. rot must not be I.
std::optional<Axis> fixed_axis(const Isometry& g);

/// Elements of G fixing p (one per coset that has a fixing element).
std::vector<Isometry> stabilizer(const Vec3& p, const SpaceGroup& group);
int stabilizer_order(const Vec3& p, const SpaceGroup& group);

/// Affine maps x -> sign * x + shift normalizing G, modulo T0. Always contains
/// the identity (sign +1, shift 0).
struct SignedShift {
    int sign = 1;
    Vec3 shift;
};
std::vector<SignedShift> sign_normalizer(const SpaceGroup& group);

}  // namespace maxsym
