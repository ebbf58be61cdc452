#include "maxsym/periodicgraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace maxsym {

namespace {

// A group element in T0 coordinates.
struct CellElem {
    Mat3 rot;
    Vec3 trans;
};

std::vector<CellElem> cell_cosets(const SpaceGroup& g) {
    std::vector<CellElem> out;
    out.reserve(g.cosets.size());
    for (const auto& c : g.cosets) out.push_back({g.t0_inverse * c.rot * g.t0_basis, g.t0_inverse * c.trans});
    return out;
}

Vec3 act(const CellElem& e, const Vec3& p) { return e.rot * p + e.trans; }

Vec3 floor_vec(const Vec3& p) { return Vec3(p.floor()); }

// An unordered segment modulo Z^3, normalized so the first endpoint lies in
// [0,1)^3 and the smaller of the two orientations wins.
struct SegKey {
    Vec3 a, b;

    friend bool operator==(const SegKey&, const SegKey&) = default;
    friend bool operator<(const SegKey& x, const SegKey& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

SegKey seg_key(const Vec3& p, const Vec3& q) {
    const Vec3 fp = floor_vec(p);
    const Vec3 fq = floor_vec(q);
    const SegKey k1{p - fp, q - fp};
    const SegKey k2{q - fq, p - fq};
    return k2 < k1 ? k2 : k1;
}

std::vector<CellElem> cell_stabilizer(const Vec3& p, const std::vector<CellElem>& cosets) {
    std::vector<CellElem> out;
    for (const auto& c : cosets) {
        const Vec3 tau = p - c.rot * p - c.trans;
        if (tau.is_integral()) out.push_back({c.rot, c.trans + tau});
    }
    return out;
}

// Rotation axes mod Z^3 are keyed by their direction and by the position of
// the line in R^3 / (R d + Z^3), read off through an integer basis of the
// annihilator of d.
using AxisKey = std::pair<Vec3, Vec3>;

std::array<IntVec3, 2> annihilator(const IntVec3& d) {
    // For primitive d the cross products with the unit vectors span d^perp in Z^3.
    const std::array<IntVec3, 3> cross{IntVec3(0, d[2], -d[1]), IntVec3(-d[2], 0, d[0]), IntVec3(d[1], -d[0], 0)};
    const SubgroupHNF h = hnf(std::span<const IntVec3>(cross.data(), cross.size()));
    if (h.rank() != 2) throw DomainError("annihilator of " + to_string(d) + " is not of rank 2");
    return {h.basis()[0], h.basis()[1]};
}

AxisKey axis_key(const IntVec3& dir, const Vec3& p) {
    const auto w = annihilator(dir);
    const Vec3 wv0(w[0]), wv1(w[1]);
    return {Vec3(dir), Vec3{frac_of(dot(wv0, p)), frac_of(dot(wv1, p)), 0}};
}

struct Line {
    IntVec3 dir;
    Vec3 base;
};

std::map<AxisKey, Line> axes_in_window(const std::vector<CellElem>& cosets, int window) {
    std::map<AxisKey, Line> out;
    for (const auto& c : cosets) {
        if (c.rot.is_identity()) continue;
        for (int x = -window; x <= window; ++x)
            for (int y = -window; y <= window; ++y)
                for (int z = -window; z <= window; ++z) {
                    const auto sol = solve(c.rot - Mat3::identity(), -(c.trans + vec3(x, y, z)));
                    if (!sol) continue;
                    if (sol->kernel.size() != 1) throw DomainError("rotation with a fixed plane");
                    const IntVec3 dir = lex_positive(primitive_direction(sol->kernel[0]));
                    out.emplace(axis_key(dir, sol->particular), Line{dir, sol->particular});
                }
    }
    return out;
}

// Parameters s in [0,1) where some element not fixing the line pointwise
// fixes base + s * dir.
std::set<Rational> vertex_parameters(const Line& line, const std::vector<CellElem>& cosets) {
    std::set<Rational> out;
    const Vec3 d(line.dir);
    for (const auto& c : cosets) {
        const Mat3 one_minus = Mat3::identity() - c.rot;
        const Vec3 u = one_minus * d;
        if (u.is_zero()) continue;
        const Vec3 v = c.trans - one_minus * line.base;
        std::size_t i = 0;
        while (u[i] == 0) ++i;
        // s * u_i - v_i = k must be an integer with s in [0, 1).
        const Rational lo = -v[i], hi = u[i] - v[i];
        const Integer k0 = floor_of(lo < hi ? lo : hi) - 1;
        const Integer k1 = floor_of(lo < hi ? hi : lo) + 1;
        for (Integer k = k0; k <= k1; ++k) {
            const Rational s = (v[i] + k) / u[i];
            if (s < 0 || s >= 1) continue;
            if ((s * u - v).is_integral()) out.insert(s);
        }
    }
    return out;
}

struct GermData {
    std::vector<IntVec3> dirs;
    std::vector<int> orbit;        // orbit id per direction
    std::vector<int> orbit_index;  // rotation index per orbit
};

GermData germs_at(const Vec3& p, const std::vector<CellElem>& cosets) {
    const auto stab = cell_stabilizer(p, cosets);
    GermData g;
    for (const auto& e : stab) {
        if (e.rot.is_identity()) continue;
        const auto sol = solve(e.rot - Mat3::identity(), Vec3{});
        const IntVec3 d = primitive_direction(sol->kernel.at(0));
        for (const IntVec3& dd : {d, IntVec3(-d)}) {
            if (std::find(g.dirs.begin(), g.dirs.end(), dd) == g.dirs.end()) g.dirs.push_back(dd);
        }
    }
    std::sort(g.dirs.begin(), g.dirs.end());
    g.orbit.assign(g.dirs.size(), -1);
    for (std::size_t i = 0; i < g.dirs.size(); ++i) {
        if (g.orbit[i] >= 0) continue;
        const int id = static_cast<int>(g.orbit_index.size());
        int order = 0;
        const Vec3 di(g.dirs[i]);
        for (const auto& e : stab) order += (e.rot * di == di) ? 1 : 0;
        g.orbit_index.push_back(order);
        for (const auto& e : stab) {
            const IntVec3 img = (e.rot * di).to_integer();
            const auto it = std::find(g.dirs.begin(), g.dirs.end(), img);
            if (it == g.dirs.end()) throw DomainError("germ set not closed under the stabilizer");
            g.orbit[static_cast<std::size_t>(it - g.dirs.begin())] = id;
        }
    }
    return g;
}

// The indices of the germ orbits at p other than the one containing `toward`.
std::array<int, 2> other_germs(const Vec3& p, const Vec3& toward, const std::vector<CellElem>& cosets) {
    const GermData g = germs_at(p, cosets);
    if (g.orbit_index.size() != 3) {
        throw DomainError("vertex " + to_string(p) + " has " + std::to_string(g.orbit_index.size()) +
                          " germ orbits, expected a trivalent vertex");
    }
    const IntVec3 d = primitive_direction(toward - p);
    const auto it = std::find(g.dirs.begin(), g.dirs.end(), d);
    if (it == g.dirs.end()) throw DomainError("edge direction is not a germ at " + to_string(p));
    const int own = g.orbit[static_cast<std::size_t>(it - g.dirs.begin())];
    std::array<int, 2> out{};
    std::size_t k = 0;
    for (int o = 0; o < 3; ++o) {
        if (o != own) out[k++] = g.orbit_index[static_cast<std::size_t>(o)];
    }
    return out;
}

struct CellSegment {
    SegKey key;
    int orbit = -1;
};

std::vector<CellSegment> cell_singular_segments(const SpaceGroup& group, int window) {
    const auto cosets = cell_cosets(group);
    std::set<SegKey> keys;
    for (const auto& [key, line] : axes_in_window(cosets, window)) {
        const auto params = vertex_parameters(line, cosets);
        if (params.empty()) throw DomainError("axis without vertices");
        const Vec3 d(line.dir);
        std::vector<Rational> s(params.begin(), params.end());
        s.push_back(s.front() + 1);
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            keys.insert(seg_key(line.base + s[i] * d, line.base + s[i + 1] * d));
        }
    }
    std::vector<CellSegment> segs;
    for (const auto& k : keys) segs.push_back({k, -1});
    std::map<SegKey, std::size_t> where;
    for (std::size_t i = 0; i < segs.size(); ++i) where.emplace(segs[i].key, i);
    int orbit = 0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (segs[i].orbit >= 0) continue;
        for (const auto& c : cosets) {
            const SegKey img = seg_key(act(c, segs[i].key.a), act(c, segs[i].key.b));
            const auto it = where.find(img);
            if (it == where.end()) throw DomainError("singular set is not closed under the group");
            segs[it->second].orbit = orbit;
        }
        ++orbit;
    }
    std::stable_sort(segs.begin(), segs.end(),
                     [](const CellSegment& x, const CellSegment& y) { return x.orbit < y.orbit; });
    return segs;
}

std::set<AxisKey> axis_keys(const std::vector<CellElem>& cosets, int window) {
    std::set<AxisKey> out;
    for (const auto& [key, line] : axes_in_window(cosets, window)) out.insert(key);
    return out;
}

}  // namespace

SingularGraph singular_graph(const SpaceGroup& group, int window) {
    const auto cosets = cell_cosets(group);
    const auto segs = cell_singular_segments(group, window);
    SingularGraph g;
    g.group = group.name;
    std::set<Vec3> vertex_classes;
    for (const auto& s : segs) {
        const Vec3 mid = make_rational(1, 2) * (s.key.a + s.key.b);
        SingularEdge e;
        e.a = group.t0_basis * s.key.a;
        e.b = group.t0_basis * s.key.b;
        e.orbit_id = s.orbit;
        e.edge_index = static_cast<int>(cell_stabilizer(mid, cosets).size());
        const auto la = other_germs(s.key.a, s.key.b, cosets);
        const auto lb = other_germs(s.key.b, s.key.a, cosets);
        e.link = {la[0], la[1], lb[0], lb[1]};
        std::sort(e.link.begin(), e.link.end());
        g.edges.push_back(e);
        g.orbit_count = std::max(g.orbit_count, s.orbit + 1);
        vertex_classes.insert(s.key.a);
        vertex_classes.insert(s.key.b.frac());
    }
    for (const auto& p : vertex_classes) {
        SingularVertex v;
        v.point = group.t0_basis * p;
        v.stabilizer_order = static_cast<int>(cell_stabilizer(p, cosets).size());
        v.germ_indices = germs_at(p, cosets).orbit_index;
        std::sort(v.germ_indices.begin(), v.germ_indices.end());
        g.vertices.push_back(std::move(v));
    }
    return g;
}

bool axis_window_saturated(const SpaceGroup& group, int window) {
    const auto cosets = cell_cosets(group);
    return axis_keys(cosets, window) == axis_keys(cosets, window + 1);
}

std::vector<SingularEdge> SingularGraph::orbit(int id) const {
    std::vector<SingularEdge> out;
    for (const auto& e : edges) {
        if (e.orbit_id == id) out.push_back(e);
    }
    return out;
}

namespace {

// True when x lies on the closed segment [a, b].
bool on_segment(const Vec3& x, const Vec3& a, const Vec3& b) {
    const Vec3 d = b - a, r = x - a;
    std::size_t i = 0;
    while (d[i] == 0) ++i;
    const Rational lambda = r[i] / d[i];
    return lambda >= 0 && lambda <= 1 && r == lambda * d;
}

}  // namespace

std::optional<int> SingularGraph::locate(const SpaceGroup& grp, const Vec3& p, const Vec3& q) const {
    const Vec3 pc = grp.t0_inverse * p, qc = grp.t0_inverse * q;
    for (const auto& e : edges) {
        const Vec3 a = grp.t0_inverse * e.a, b = grp.t0_inverse * e.b;
        const IntVec3 base = (pc - a).floor();
        for (int x = -2; x <= 1; ++x)
            for (int y = -2; y <= 1; ++y)
                for (int z = -2; z <= 1; ++z) {
                    const Vec3 tau = Vec3(base) + vec3(x, y, z);
                    if (on_segment(pc - tau, a, b) && on_segment(qc - tau, a, b)) return e.orbit_id;
                }
    }
    return std::nullopt;
}

std::vector<SingularEdge> marked_edge_candidates(const SingularGraph& graph) {
    static constexpr std::array<int, 4> kSignature{2, 2, 2, 3};
    std::vector<SingularEdge> out;
    for (int id = 0; id < graph.orbit_count; ++id) {
        const auto segs = graph.orbit(id);
        if (!segs.empty() && segs.front().link == kSignature) out.push_back(segs.front());
    }
    return out;
}

int expected_marked_edge_count(GroupName name) { return name == GroupName::P432 || name == GroupName::F4_132 || name == GroupName::P622 ? 1 : 2; }

std::vector<SingularEdge> marked_edges(const SpaceGroup& group, const SingularGraph& graph) {
    const auto candidates = marked_edge_candidates(graph);
    const auto normalizer = sign_normalizer(group);
    std::vector<SingularEdge> out;
    std::set<int> covered;
    for (const auto& c : candidates) {
        if (covered.contains(c.orbit_id)) continue;
        out.push_back(c);
        for (const auto& n : normalizer) {
            const Rational sign(n.sign);
            const auto img = graph.locate(group, sign * c.a + n.shift, sign * c.b + n.shift);
            if (!img) throw DomainError("normalizer image of a singular edge is not singular");
            covered.insert(*img);
        }
    }
    if (static_cast<int>(out.size()) != expected_marked_edge_count(group.name)) {
        throw SignatureCountMismatch(std::string(to_string(group.name)) + ": found " +
                                     std::to_string(out.size()) + " marked edges, expected " +
                                     std::to_string(expected_marked_edge_count(group.name)));
    }
    return out;
}

std::vector<SingularEdge> marked_edges(const SpaceGroup& group) {
    return marked_edges(group, singular_graph(group));
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), components_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        --components_;
        return true;
    }
    std::size_t components() const { return components_; }

private:
    std::vector<std::size_t> parent_;
    std::size_t components_;
};

}  // namespace

PeriodicGraph edge_orbit_graph(const SpaceGroup& group, const SingularEdge& edge) {
    const auto cosets = cell_cosets(group);
    const Vec3 a = group.t0_inverse * edge.a, b = group.t0_inverse * edge.b;
    std::set<SegKey> keys;
    for (const auto& c : cosets) keys.insert(seg_key(act(c, a), act(c, b)));
    std::set<Vec3> points;
    for (const auto& k : keys) {
        points.insert(k.a);
        points.insert(k.b.frac());
    }
    PeriodicGraph g;
    g.group = group.name;
    g.frame = group.frame.kind;
    g.t0 = group.t0;
    g.t0_basis = group.t0_basis;
    g.vertices.assign(points.begin(), points.end());
    auto index_of = [&](const Vec3& p) {
        return static_cast<std::size_t>(std::lower_bound(g.vertices.begin(), g.vertices.end(), p) - g.vertices.begin());
    };
    for (const auto& k : keys) g.edges.push_back({index_of(k.a), index_of(k.b.frac()), k.b.floor()});
    return g;
}

std::vector<std::size_t> PeriodicGraph::degrees() const {
    std::vector<std::size_t> deg(vertices.size(), 0);
    for (const auto& e : edges) {
        ++deg[e.i];
        ++deg[e.j];
    }
    return deg;
}

std::size_t PeriodicGraph::component_count() const {
    UnionFind uf(vertices.size());
    for (const auto& e : edges) uf.unite(e.i, e.j);
    return uf.components();
}

long PeriodicGraph::betti() const {
    return static_cast<long>(edges.size()) - static_cast<long>(vertices.size()) +
           static_cast<long>(component_count());
}

PeriodicGraph PeriodicGraph::smoothed() const {
    PeriodicGraph g = *this;
    for (;;) {
        const auto deg = g.degrees();
        std::size_t v = g.vertices.size();
        for (std::size_t k = 0; k < deg.size() && v == g.vertices.size(); ++k) {
            if (deg[k] != 2) continue;
            const bool loop = std::any_of(g.edges.begin(), g.edges.end(),
                                          [&](const GraphEdge& e) { return e.i == k && e.j == k; });
            if (!loop) v = k;
        }
        if (v == g.vertices.size()) return g;
        // Orient both incident edges away from v; v sits at the origin.
        std::vector<std::pair<std::size_t, IntVec3>> ends;
        std::vector<GraphEdge> kept;
        for (const auto& e : g.edges) {
            if (e.i == v) {
                ends.push_back({e.j, e.shift});
            } else if (e.j == v) {
                ends.push_back({e.i, -e.shift});
            } else {
                kept.push_back(e);
            }
        }
        kept.push_back({ends[0].first, ends[1].first, ends[1].second - ends[0].second});
        for (auto& e : kept) {
            if (e.i > v) --e.i;
            if (e.j > v) --e.j;
        }
        g.edges = std::move(kept);
        g.vertices.erase(g.vertices.begin() + static_cast<std::ptrdiff_t>(v));
    }
}

SubgroupHNF cycle_image_lattice(const PeriodicGraph& graph, std::optional<std::uint64_t> seed) {
    const std::size_t n = graph.vertices.size();
    if (n == 0 || !graph.connected()) throw Disconnected("cycle image of a disconnected graph");
    std::vector<std::size_t> order(graph.edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (seed) {
        std::mt19937_64 rng(*seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    UnionFind uf(n);
    std::vector<bool> in_tree(graph.edges.size(), false);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
    for (std::size_t k : order) {
        const auto& e = graph.edges[k];
        if (uf.unite(e.i, e.j)) {
            in_tree[k] = true;
            adj[e.i].push_back({e.j, k});
            adj[e.j].push_back({e.i, k});
        }
    }
    // Position of each vertex copy reached through the tree.
    std::vector<IntVec3> pos(n, IntVec3(0, 0, 0));
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& [w, k] : adj[v]) {
            if (seen[w]) continue;
            const auto& e = graph.edges[k];
            pos[w] = e.i == v ? pos[v] + e.shift : pos[v] - e.shift;
            seen[w] = true;
            stack.push_back(w);
        }
    }
    std::vector<IntVec3> cycles;
    for (std::size_t k = 0; k < graph.edges.size(); ++k) {
        if (in_tree[k]) continue;
        const auto& e = graph.edges[k];
        cycles.push_back(pos[e.i] + e.shift - pos[e.j]);
    }
    return transform(graph.t0_basis, hnf(cycles));
}

namespace {

void require_finite_index(const PeriodicGraph& graph, const SubgroupHNF& t) {
    if (t.rank() != 3 || !graph.t0.contains(t)) {
        throw NotASubgroup(to_string(t) + " is not a finite-index subgroup of T0 " + to_string(graph.t0));
    }
}

// Number of components of the lift to R^3 / t, and the index [T0 : t].
std::pair<std::size_t, std::size_t> lift_components(const PeriodicGraph& graph, const SubgroupHNF& t) {
    require_finite_index(graph, t);
    const SubgroupHNF cell_t = transform(graph.t0_basis.inverse(), t);
    const SubgroupHNF z3 = hnf({IntVec3(1, 0, 0), IntVec3(0, 1, 0), IntVec3(0, 0, 1)});
    const auto reps = coset_reps(cell_t, z3);
    std::map<Vec3, std::size_t> slot;
    for (std::size_t k = 0; k < reps.size(); ++k) slot.emplace(reps[k], k);
    const std::size_t copies = reps.size();
    const std::size_t nodes = graph.vertices.size() * copies;
    UnionFind uf(nodes);
    for (const auto& e : graph.edges) {
        const Vec3 s(e.shift);
        for (std::size_t k = 0; k < copies; ++k) {
            const std::size_t k2 = slot.at(cell_t.reduce(reps[k] + s));
            uf.unite(e.i * copies + k, e.j * copies + k2);
        }
    }
    return {uf.components(), copies};
}

}  // namespace

bool lift_connected(const PeriodicGraph& graph, const SubgroupHNF& t) {
    require_finite_index(graph, t);
    return join(cycle_image_lattice(graph), t) == graph.t0;
}

bool lift_connected_bruteforce(const PeriodicGraph& graph, const SubgroupHNF& t) {
    return lift_components(graph, t).first == 1;
}

long lift_genus(const PeriodicGraph& graph, const SubgroupHNF& t) {
    const auto [components, copies] = lift_components(graph, t);
    if (components != 1) throw Disconnected("lift of the graph to R^3/T is disconnected");
    const long idx = static_cast<long>(copies);
    return static_cast<long>(graph.edges.size()) * idx - static_cast<long>(graph.vertices.size()) * idx + 1;
}

namespace {

nlohmann::json rational_triple(const Vec3& v) { return {to_string(v[0]), to_string(v[1]), to_string(v[2])}; }

std::array<double, 3> cartesian(const Vec3& frame_coords, FrameKind kind) {
    const double x = frame_coords[0].get_d(), y = frame_coords[1].get_d(), z = frame_coords[2].get_d();
    if (kind == FrameKind::Cubic) return {x, y, z};
    return {-0.5 * x + y, std::sqrt(3.0) / 2.0 * x, z};
}

}  // namespace

std::string to_json(const PeriodicGraph& graph, int indent) {
    nlohmann::json j;
    j["group"] = std::string(to_string(graph.group));
    j["frame"] = std::string(to_string(graph.frame));
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& v : graph.t0.vectors()) basis.push_back(rational_triple(v));
    j["t0"] = basis;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : graph.vertices) {
        j["vertices"].push_back({{"cell", rational_triple(v)}, {"frame", rational_triple(graph.t0_basis * v)}});
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : graph.edges) {
        j["edges"].push_back(
            {{"i", e.i}, {"j", e.j}, {"shift", {e.shift[0].get_si(), e.shift[1].get_si(), e.shift[2].get_si()}}});
    }
    j["betti"] = graph.betti();
    return j.dump(indent);
}

std::string to_obj(const PeriodicGraph& graph) {
    std::ostringstream os;
    os << "# " << to_string(graph.group) << " edge orbit, one cell\n";
    std::size_t next = 1;
    for (const auto& e : graph.edges) {
        const auto p = cartesian(graph.t0_basis * graph.vertices[e.i], graph.frame);
        const auto q = cartesian(graph.t0_basis * (graph.vertices[e.j] + Vec3(e.shift)), graph.frame);
        os << "v " << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
        os << "v " << q[0] << ' ' << q[1] << ' ' << q[2] << '\n';
        os << "l " << next << ' ' << next + 1 << '\n';
        next += 2;
    }
    return os.str();
}

}  // namespace maxsym
