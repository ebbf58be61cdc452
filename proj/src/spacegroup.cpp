#include "maxsym/spacegroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <string>

namespace maxsym {

Frame Frame::cubic() { return {FrameKind::Cubic, Mat3::identity()}; }

Frame Frame::hexagonal() {
    Frame f{FrameKind::Hexagonal, Mat3::identity()};
    f.gram(0, 1) = make_rational(-1, 2);
    f.gram(1, 0) = make_rational(-1, 2);
    return f;
}

Frame Frame::of(FrameKind kind) { return kind == FrameKind::Cubic ? cubic() : hexagonal(); }

std::string_view to_string(FrameKind kind) {
    return kind == FrameKind::Cubic ? "cubic" : "hexagonal";
}

Isometry identity(FrameKind frame) { return {frame, Mat3::identity(), Vec3{}}; }

Isometry translation(FrameKind frame, const Vec3& v) { return {frame, Mat3::identity(), v}; }

Isometry compose(const Isometry& g, const Isometry& h) {
    if (g.frame != h.frame) throw FrameMismatch("composing isometries from different frames");
    return {g.frame, g.rot * h.rot, g.rot * h.trans + g.trans};
}

Isometry inverse(const Isometry& g) {
    const Mat3 inv = g.rot.inverse();
    return {g.frame, inv, -(inv * g.trans)};
}

Vec3 apply(const Isometry& g, const Vec3& p) { return g.rot * p + g.trans; }

Vec3 conjugate_translation(const Isometry& g, const Vec3& u) { return g.rot.inverse() * u; }

int rotation_order(const Mat3& rot) {
    Mat3 p = rot;
    for (int k = 1; k <= 6; ++k) {
        if (p.is_identity()) return k;
        p = p * rot;
    }
    throw DomainError("not a crystallographic rotation: " + to_string(rot));
}

bool is_proper_isometry(const Mat3& rot, const Frame& frame) {
    return rot.transpose() * frame.gram * rot == frame.gram && rot.determinant() == 1;
}

namespace gen {

Vec3 t_x(FrameKind frame) { return frame == FrameKind::Cubic ? vec3(1, 0, 0) : vec3(0, 1, 0); }
Vec3 t_y() { return vec3(0, 1, 0); }
Vec3 t_z(FrameKind) { return vec3(0, 0, 1); }
Vec3 t_half() {
    const Rational h = make_rational(1, 2);
    return {h, h, h};
}
Vec3 t_omega() { return vec3(1, 0, 0); }

Isometry r_y(FrameKind frame) {
    if (frame == FrameKind::Cubic) {
        return {frame, Mat3::from_rows({{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}}), Vec3{}};
    }
    // t_w -> t_w + t_x, t_x -> -t_x, t_z -> -t_z
    return {frame, Mat3::from_rows({{{1, 0, 0}, {1, -1, 0}, {0, 0, -1}}}), Vec3{}};
}

Isometry r_z(FrameKind frame) {
    return {frame, Mat3::from_rows({{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}}), Vec3{}};
}

Isometry r_xy() {
    return {FrameKind::Cubic, Mat3::from_rows({{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}}), Vec3{}};
}

Isometry r_xyz() {
    return {FrameKind::Cubic, Mat3::from_rows({{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}), Vec3{}};
}

Isometry r_omega() {
    // t_w -> -t_w - t_x, t_x -> t_w, t_z -> t_z
    return {FrameKind::Hexagonal, Mat3::from_rows({{{-1, 1, 0}, {-1, 0, 0}, {0, 0, 1}}}), Vec3{}};
}

}  // namespace gen

std::string_view to_string(GroupName name) {
    switch (name) {
        case GroupName::P432: return "P432";
        case GroupName::F4_132: return "F4_132";
        case GroupName::I4_132: return "I4_132";
        case GroupName::I432: return "I432";
        case GroupName::P4_232: return "P4_232";
        case GroupName::P622: return "P622";
    }
    return "?";
}

GroupName parse_group(std::string_view text) {
    std::string key;
    for (char ch : text) {
        if (ch == '_' || ch == '[' || ch == ']' || ch == ' ') continue;
        key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    }
    static const std::map<std::string, GroupName> names{
        {"P432", GroupName::P432},   {"F4132", GroupName::F4_132}, {"I4132", GroupName::I4_132},
        {"I432", GroupName::I432},   {"P4232", GroupName::P4_232}, {"P622", GroupName::P622}};
    const auto it = names.find(key);
    if (it == names.end()) throw UnknownGroup("unknown space group: " + std::string(text));
    return it->second;
}

std::vector<Isometry> SpaceGroup::all_generators() const {
    std::vector<Isometry> out;
    for (const auto& v : listed_lattice.vectors()) out.push_back(translation(frame.kind, v));
    out.insert(out.end(), generators.begin(), generators.end());
    return out;
}

namespace {

Isometry shifted(const Vec3& t, const Isometry& g) { return compose(translation(g.frame, t), g); }

}  // namespace

SpaceGroup make_group(GroupName name) {
    using namespace gen;
    constexpr auto C = FrameKind::Cubic;
    SpaceGroup g{name, Frame::cubic(), {}, {}, {}, 0, {}, {}, {}};
    const SubgroupHNF t1 = SubgroupHNF::from_rational({vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1)});
    switch (name) {
        case GroupName::P432:
            g.listed_lattice = t1;
            g.generators = {r_y(C), r_z(C), r_xy(), r_xyz()};
            break;
        case GroupName::F4_132:
            g.listed_lattice =
                SubgroupHNF::from_rational({vec3(2, 0, 0), vec3(1, 1, 0), vec3(1, 0, 1)});
            g.generators = {r_y(C), r_z(C), shifted(t_half(), r_xy()), r_xyz()};
            break;
        case GroupName::I4_132:
            g.listed_lattice =
                SubgroupHNF::from_rational({vec3(2, 0, 0), vec3(0, 2, 0), vec3(1, 1, 1)});
            g.generators = {shifted(t_z(C) + t_y(), r_y(C)), shifted(t_x(C) + t_z(C), r_z(C)),
                            shifted(t_x(C) + t_half(), r_xy()), r_xyz()};
            break;
        case GroupName::I432:
            g.listed_lattice = SubgroupHNF::from_rational({vec3(1, 0, 0), vec3(0, 1, 0), t_half()});
            g.generators = {r_y(C), r_z(C), r_xy(), r_xyz()};
            break;
        case GroupName::P4_232:
            g.listed_lattice = t1;
            g.generators = {r_y(C), r_z(C), shifted(t_half(), r_xy()), r_xyz()};
            break;
        case GroupName::P622: {
            constexpr auto H = FrameKind::Hexagonal;
            g.frame = Frame::hexagonal();
            g.listed_lattice = t1;
            g.generators = {r_y(H), r_z(H), r_omega()};
            break;
        }
    }
    const auto all = g.all_generators();
    g.t0 = maximal_translation_lattice(all);
    g.cosets = point_group_cosets(all, g.t0);
    g.point_order = static_cast<int>(g.cosets.size());
    g.t0_basis = g.t0.matrix();
    g.t0_inverse = g.t0_basis.inverse();
    return g;
}

std::vector<Isometry> point_group_cosets(std::span<const Isometry> generators,
                                         const SubgroupHNF& t0) {
    if (generators.empty()) throw DomainError("no generators");
    const FrameKind frame = generators.front().frame;
    std::map<std::pair<Mat3, Vec3>, std::size_t> seen;
    std::vector<Isometry> out{identity(frame)};
    seen.emplace(std::pair{out[0].rot, out[0].trans}, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& g : generators) {
            Isometry h = compose(g, out[i]);
            h.trans = t0.reduce(h.trans);
            if (seen.contains({h.rot, h.trans})) continue;
            if (out.size() == 96) throw ClosureOverflow("more than 96 cosets; T0 is too small");
            seen.emplace(std::pair{h.rot, h.trans}, out.size());
            out.push_back(std::move(h));
        }
    }
    return out;
}

SubgroupHNF maximal_translation_lattice(std::span<const Isometry> generators) {
    if (generators.empty()) return {};
    const FrameKind frame = generators.front().frame;
    std::vector<Vec3> pure;
    for (const auto& g : generators) {
        if (g.rot.is_identity()) pure.push_back(g.trans);
    }
    SubgroupHNF lattice = SubgroupHNF::from_rational(pure);
    for (;;) {
        // One translation class per rotation part; a second class for the same
        // rotation exposes a translation missing from the lattice.
        std::map<Mat3, Vec3> table{{Mat3::identity(), Vec3{}}};
        std::vector<Isometry> queue{identity(frame)};
        std::optional<Vec3> missing;
        for (std::size_t i = 0; i < queue.size() && !missing; ++i) {
            for (const auto& g : generators) {
                Isometry h = compose(g, queue[i]);
                h.trans = lattice.reduce(h.trans);
                const auto it = table.find(h.rot);
                if (it != table.end()) {
                    if (it->second != h.trans) {
                        missing = h.trans - it->second;
                        break;
                    }
                    continue;
                }
                if (table.size() == 96) throw ClosureOverflow("point group larger than 96");
                table.emplace(h.rot, h.trans);
                queue.push_back(std::move(h));
            }
        }
        if (!missing) return lattice;
        lattice = join(lattice, SubgroupHNF::from_rational({*missing}));
    }
}

bool Axis::contains(const Vec3& p) const {
    const Vec3 d = p - base;
    const Vec3 u(direction);
    return d[1] * u[2] == d[2] * u[1] && d[2] * u[0] == d[0] * u[2] && d[0] * u[1] == d[1] * u[0];
}

std::optional<Axis> fixed_axis(const Isometry& g) {
    if (g.rot.is_identity()) throw DomainError("fixed_axis of a translation");
    const auto sol = solve(g.rot - Mat3::identity(), -g.trans);
    if (!sol) return std::nullopt;
    if (sol->kernel.size() != 1) throw DomainError("not a rotation: " + to_string(g.rot));
    Axis axis;
    axis.direction = lex_positive(primitive_direction(sol->kernel[0]));
    axis.order = rotation_order(g.rot);
    const Vec3 d(axis.direction);
    std::size_t i = 0;
    while (d[i] == 0) ++i;
    axis.base = sol->particular - (sol->particular[i] / d[i]) * d;
    return axis;
}

std::vector<Isometry> stabilizer(const Vec3& p, const SpaceGroup& group) {
    std::vector<Isometry> out;
    for (const auto& c : group.cosets) {
        const Vec3 tau = p - c.rot * p - c.trans;
        if (group.t0.contains(tau)) out.push_back({c.frame, c.rot, c.trans + tau});
    }
    return out;
}

int stabilizer_order(const Vec3& p, const SpaceGroup& group) {
    return static_cast<int>(stabilizer(p, group).size());
}

std::vector<SignedShift> sign_normalizer(const SpaceGroup& group) {
    // In T0 coordinates: x -> sign*x + s normalizes G iff for every generator
    // (R, t): (I - R) s == (sign == 1 ? 0 : 2t) modulo Z^3.
    std::vector<std::array<Rational, 3>> rows;
    std::vector<Rational> rhs_plus, rhs_minus;
    for (const auto& g : group.generators) {
        const Mat3 r = group.t0_inverse * g.rot * group.t0_basis;
        const Vec3 t = group.t0_inverse * g.trans;
        const Mat3 a = Mat3::identity() - r;
        for (std::size_t i = 0; i < 3; ++i) {
            rows.push_back({a(i, 0), a(i, 1), a(i, 2)});
            rhs_plus.emplace_back(0);
            rhs_minus.push_back(2 * t[i]);
        }
    }
    // Any nonsingular 3-row minor bounds the denominators of s.
    std::array<std::size_t, 3> pick{};
    Mat3 minor;
    bool found = false;
    for (std::size_t i = 0; i < rows.size() && !found; ++i) {
        for (std::size_t j = i + 1; j < rows.size() && !found; ++j) {
            for (std::size_t k = j + 1; k < rows.size() && !found; ++k) {
                Mat3 m;
                for (std::size_t c = 0; c < 3; ++c) {
                    m(0, c) = rows[i][c];
                    m(1, c) = rows[j][c];
                    m(2, c) = rows[k][c];
                }
                if (m.determinant() != 0) {
                    pick = {i, j, k};
                    minor = m;
                    found = true;
                }
            }
        }
    }
    if (!found) throw DomainError("point group fixes a direction; normalizer is not finite mod T0");
    const Mat3 minor_inv = minor.inverse();
    std::vector<IntVec3> cols;
    for (std::size_t j = 0; j < 3; ++j) cols.push_back(minor.column(j).to_integer());
    const SubgroupHNF image = hnf(cols);
    const SubgroupHNF z3 = hnf({IntVec3(1, 0, 0), IntVec3(0, 1, 0), IntVec3(0, 0, 1)});
    const auto ks = coset_reps(image, z3);

    std::vector<SignedShift> out;
    for (int sign : {1, -1}) {
        const auto& rhs = sign == 1 ? rhs_plus : rhs_minus;
        const Vec3 c_pick{rhs[pick[0]], rhs[pick[1]], rhs[pick[2]]};
        std::vector<Vec3> found_shifts;
        for (const auto& k : ks) {
            const Vec3 s = (minor_inv * (c_pick + k)).frac();
            bool ok = true;
            for (std::size_t r = 0; r < rows.size() && ok; ++r) {
                const Rational v = rows[r][0] * s[0] + rows[r][1] * s[1] + rows[r][2] * s[2] - rhs[r];
                ok = is_integral(v);
            }
            if (ok && std::find(found_shifts.begin(), found_shifts.end(), s) == found_shifts.end()) {
                found_shifts.push_back(s);
            }
        }
        std::sort(found_shifts.begin(), found_shifts.end());
        for (const auto& s : found_shifts) out.push_back({sign, group.to_frame(s)});
    }
    return out;
}

}  // namespace maxsym
