#pragma once

// Singular sets of the space groups, marked-edge detection by link signature,
// and the quotient graphs of edge orbits in R^3 / T0.
//
// Internally every computation runs in T0 coordinates, where T0 is Z^3 and
// every rotation part is an integer matrix. Points handed to callers are in
// frame coordinates unless a field says otherwise.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxsym/exactmath.hpp"
#include "maxsym/lattice.hpp"
#include "maxsym/spacegroup.hpp"

namespace maxsym {

/// A segment of a rotation axis between two consecutive vertices.
struct SingularEdge {
    Vec3 a, b;  // endpoints, frame coordinates
    int edge_index = 0;
    /// Indices of the other edge germs at a and at b, sorted.
    std::array<int, 4> link{};
    int orbit_id = -1;
};

struct SingularVertex {
    Vec3 point;  // frame coordinates
    int stabilizer_order = 0;
    /// Index of each germ orbit at the vertex, sorted (three for a trivalent vertex).
    std::vector<int> germ_indices;
};

struct SingularGraph {
    GroupName group = GroupName::P432;
    /// One entry per segment class mod T0, ordered by (orbit_id, endpoints).
    std::vector<SingularEdge> edges;
    /// One entry per vertex class mod T0.
    std::vector<SingularVertex> vertices;
    int orbit_count = 0;

    /// The segments of one orbit.
    std::vector<SingularEdge> orbit(int id) const;
    /// Orbit of the singular segment that contains the segment p-q (frame
    /// coordinates), if any.
    std::optional<int> locate(const SpaceGroup& group, const Vec3& p, const Vec3& q) const;
};

/// Axes come from the group elements coset * t with t in {-window..window}^3
/// in T0 coordinates.
SingularGraph singular_graph(const SpaceGroup& group, int window = 2);

/// True when enlarging the translation window by one finds no new axis.
bool axis_window_saturated(const SpaceGroup& group, int window = 2);

/// One representative per edge orbit whose link is {2,2,2,3}.
std::vector<SingularEdge> marked_edge_candidates(const SingularGraph& graph);

/// Candidates up to the affine normalizer maps x -> +-x + s of the group.
/// Throws SignatureCountMismatch unless the count per group is
/// (1, 1, 2, 2, 2, 1) in the order of kAllGroups.
std::vector<SingularEdge> marked_edges(const SpaceGroup& group);
std::vector<SingularEdge> marked_edges(const SpaceGroup& group, const SingularGraph& graph);

/// Expected number of marked edges per group.
int expected_marked_edge_count(GroupName name);

struct GraphEdge {
    std::size_t i = 0, j = 0;
    IntVec3 shift;  // the edge runs from vertex i to vertex j + shift
};

/// Finite graph in R^3 / T0 with translation-labelled edges.
struct PeriodicGraph {
    GroupName group = GroupName::P432;
    FrameKind frame = FrameKind::Cubic;
    SubgroupHNF t0;
    Mat3 t0_basis;  // T0 coordinates -> frame coordinates
    std::vector<Vec3> vertices;  // T0 coordinates, in [0,1)^3
    std::vector<GraphEdge> edges;

    std::vector<std::size_t> degrees() const;
    std::size_t component_count() const;
    bool connected() const { return component_count() == 1; }
    /// E - V + components.
    long betti() const;
    /// Suppresses vertices of degree two, merging their two edges.
    PeriodicGraph smoothed() const;
};

/// The quotient of the full preimage of the edge orbit in R^3 / T0.
PeriodicGraph edge_orbit_graph(const SpaceGroup& group, const SingularEdge& edge);

/// Subgroup of T0 (frame coordinates) spanned by the net shifts of the
/// fundamental cycles. The spanning tree takes edges in stored order, or in a
/// random order drawn from the seed. Throws Disconnected.
SubgroupHNF cycle_image_lattice(const PeriodicGraph& graph, std::optional<std::uint64_t> seed = std::nullopt);

/// join(cycle_image_lattice(graph), t) == T0. Throws NotASubgroup unless t is
/// a finite-index subgroup of T0.
bool lift_connected(const PeriodicGraph& graph, const SubgroupHNF& t);

/// Builds one copy of the graph per coset of t in T0 and runs union-find.
bool lift_connected_bruteforce(const PeriodicGraph& graph, const SubgroupHNF& t);

/// E - V + 1 of the lifted graph in R^3 / t. Throws Disconnected when the
/// lift is not connected.
long lift_genus(const PeriodicGraph& graph, const SubgroupHNF& t);

std::string to_json(const PeriodicGraph& graph, int indent = 2);
/// Wavefront OBJ line set of one cell of the lift, Cartesian coordinates.
std::string to_obj(const PeriodicGraph& graph);

}  // namespace maxsym
