#include "maxsym/sublattices.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace maxsym {

std::string_view to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::CubicPrimitive: return "CUBIC_PRIMITIVE";
        case FamilyTag::CubicFace: return "CUBIC_FACE";
        case FamilyTag::CubicBody: return "CUBIC_BODY";
        case FamilyTag::HexPrimitive: return "HEX_PRIMITIVE";
        case FamilyTag::HexRot: return "HEX_ROT";
    }
    return "?";
}

bool is_hexagonal(FamilyTag tag) { return tag == FamilyTag::HexPrimitive || tag == FamilyTag::HexRot; }

std::string to_string(const LatticeFamily& family) {
    std::string s = std::string(to_string(family.tag)) + "(n=" + std::to_string(family.n);
    if (family.m) s += ", m=" + std::to_string(*family.m);
    return s + ")";
}

SubgroupHNF instantiate(const LatticeFamily& family) {
    const long n = family.n;
    if (n < 1) throw DomainError("family parameter n must be positive");
    if (is_hexagonal(family.tag)) {
        const long m = family.m.value_or(1);
        if (m < 1) throw DomainError("family parameter m must be positive");
        if (family.tag == FamilyTag::HexPrimitive) {
            return SubgroupHNF::from_rational({vec3(n, 0, 0), vec3(0, n, 0), vec3(0, 0, m)});
        }
        return SubgroupHNF::from_rational({vec3(2 * n, n, 0), vec3(n, 2 * n, 0), vec3(0, 0, m)});
    }
    switch (family.tag) {
        case FamilyTag::CubicPrimitive:
            return SubgroupHNF::from_rational({vec3(n, 0, 0), vec3(0, n, 0), vec3(0, 0, n)});
        case FamilyTag::CubicFace:
            return SubgroupHNF::from_rational({vec3(2 * n, 0, 0), vec3(n, n, 0), vec3(n, 0, n)});
        default: {
            const Rational h = make_rational(n, 2);
            return SubgroupHNF::from_rational({vec3(n, 0, 0), vec3(0, n, 0), Vec3{h, h, h}});
        }
    }
}

namespace {

// Exact k-th root of a positive integer, if there is one.
std::optional<long> exact_root(const Rational& value, unsigned k) {
    if (value <= 0 || !is_integral(value)) return std::nullopt;
    Integer root;
    if (mpz_root(root.get_mpz_t(), value.get_num_mpz_t(), k) == 0) return std::nullopt;
    if (!root.fits_slong_p()) return std::nullopt;
    return root.get_si();
}

}  // namespace

LatticeFamily match_family(const SubgroupHNF& l, const Frame& frame) {
    if (l.rank() != 3) throw UnmatchedLattice("rank-" + std::to_string(l.rank()) + " subgroup " + to_string(l));
    const Rational vol = l.covolume();
    std::vector<LatticeFamily> candidates;
    if (frame.kind == FrameKind::Cubic) {
        if (auto n = exact_root(vol, 3)) candidates.push_back({FamilyTag::CubicPrimitive, *n, {}});
        if (auto n = exact_root(vol / 2, 3)) candidates.push_back({FamilyTag::CubicFace, *n, {}});
        if (auto n = exact_root(2 * vol, 3)) candidates.push_back({FamilyTag::CubicBody, *n, {}});
    } else if (is_integral(vol)) {
        const long v = vol.get_num().get_si();
        for (long m = 1; m <= v; ++m) {
            if (v % m != 0) continue;
            if (auto n = exact_root(Rational(v / m), 2)) candidates.push_back({FamilyTag::HexPrimitive, *n, m});
            if ((v / m) % 3 == 0) {
                if (auto n = exact_root(Rational(v / m / 3), 2)) candidates.push_back({FamilyTag::HexRot, *n, m});
            }
        }
    }
    std::vector<LatticeFamily> hits;
    for (const auto& c : candidates) {
        if (instantiate(c) == l) hits.push_back(c);
    }
    if (hits.size() != 1) {
        throw UnmatchedLattice(to_string(l) + (hits.empty() ? " matches no family" : " matches several families"));
    }
    return hits.front();
}

SubgroupHNF TriangularBasis::lattice() const {
    return hnf({IntVec3(a, b, d), IntVec3(0, c, e), IntVec3(0, 0, f)});
}

namespace {

struct Shape {
    std::int64_t a, b, c, f;
};

// (a, b, c, f) for every index up to max_index, ordered by (index, a, c, b).
std::vector<Shape> shapes_up_to(long max_index) {
    std::vector<Shape> out;
    for (long idx = 1; idx <= max_index; ++idx) {
        for (long a = 1; a <= idx; ++a) {
            if (idx % a != 0) continue;
            for (long c = 1; c <= idx / a; ++c) {
                if ((idx / a) % c != 0) continue;
                for (long b = 0; b < c; ++b) out.push_back({a, b, c, idx / a / c});
            }
        }
    }
    return out;
}

}  // namespace

std::vector<TriangularBasis> invariant_sublattices(std::span<const kernels::IntMat> rots,
                                                   long max_index, kernels::Backend backend,
                                                   unsigned threads) {
    const auto shapes = shapes_up_to(max_index);
    std::vector<std::vector<TriangularBasis>> found(shapes.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, shapes.size())));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        std::vector<std::uint8_t> ok;
        for (std::size_t i = next++; i < shapes.size(); i = next++) {
            const Shape& s = shapes[i];
            ok.resize(static_cast<std::size_t>(s.f * s.f));
            kernels::invariant_tails(rots, s.a, s.b, s.c, s.f, ok.data(), backend);
            for (std::int64_t d = 0; d < s.f; ++d)
                for (std::int64_t e = 0; e < s.f; ++e)
                    if (ok[static_cast<std::size_t>(d * s.f + e)]) found[i].push_back({s.a, s.b, s.c, d, e, s.f});
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    std::vector<TriangularBasis> out;
    for (auto& v : found) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<SubgroupHNF> enumerate_sublattices(const SubgroupHNF& t0, long d) {
    if (t0.rank() != 3) throw RankDeficient("enumerate_sublattices needs a rank-3 lattice");
    if (d < 1) throw DomainError("index must be positive");
    const Mat3 basis = t0.matrix();
    std::vector<SubgroupHNF> out;
    for (const auto& s : shapes_up_to(d)) {
        if (s.a * s.c * s.f != d) continue;
        for (std::int64_t dd = 0; dd < s.f; ++dd)
            for (std::int64_t e = 0; e < s.f; ++e)
                out.push_back(transform(basis, TriangularBasis{s.a, s.b, s.c, dd, e, s.f}.lattice()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_invariant(const SubgroupHNF& l, const SpaceGroup& group) {
    if (!group.t0.contains(l)) throw NotASubgroup(to_string(l) + " is not contained in T0");
    for (const auto& c : group.cosets) {
        for (const auto& b : l.vectors()) {
            if (!l.contains(conjugate_translation(c, b))) return false;
        }
    }
    return true;
}

std::vector<kernels::IntMat> rotations_in_t0(const SpaceGroup& group) {
    std::vector<kernels::IntMat> out;
    for (const auto& g : group.generators) {
        const Mat3 m = group.t0_inverse * g.rot * group.t0_basis;
        if (!m.is_integral()) throw DomainError("T0 is not invariant under " + to_string(g.rot));
        kernels::IntMat r{};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) r[i * 3 + j] = m(i, j).get_num().get_si();
        out.push_back(r);
    }
    return out;
}

LatticeFamily FamilySeries::member(long n, long m) const {
    LatticeFamily f{tag, step * n, {}};
    if (is_hexagonal(tag)) f.m = m;
    return f;
}

std::vector<FamilySeries> family_series(const SpaceGroup& group) {
    const bool hex = group.frame.kind == FrameKind::Hexagonal;
    const std::vector<FamilyTag> tags =
        hex ? std::vector<FamilyTag>{FamilyTag::HexPrimitive, FamilyTag::HexRot}
            : std::vector<FamilyTag>{FamilyTag::CubicPrimitive, FamilyTag::CubicFace, FamilyTag::CubicBody};
    std::vector<FamilySeries> out;
    for (FamilyTag tag : tags) {
        // Members inside T0 are exactly the multiples of the least such step,
        // since member(gcd(j, k)) is an integer combination of member(j) and member(k).
        FamilySeries s{tag, 0, {}, {}, {}};
        for (long k = 1; k <= 64 && s.step == 0; ++k) {
            LatticeFamily f{tag, k, {}};
            if (hex) f.m = 1;
            if (group.t0.contains(instantiate(f))) s.step = k;
        }
        if (s.step == 0) throw DomainError("no member of " + std::string(to_string(tag)) + " lies in T0");
        s.coefficient = instantiate(s.member(1)).covolume();
        s.pi1_coefficient = s.coefficient / group.t0.covolume() * group.point_order;
        if (hex) {
            s.name = s.coefficient == 1 ? "T^w_{n^2}" : "T^w_{" + to_string(s.coefficient) + "n^2}";
        } else if (s.coefficient == make_rational(1, 2)) {
            s.name = "T_{n^3/2}";
        } else if (s.coefficient == 1) {
            s.name = "T_{n^3}";
        } else {
            s.name = "T_{" + to_string(s.coefficient) + "n^3}";
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<NormalSubgroup> normal_translation_subgroups(const SpaceGroup& group, long max_index,
                                                         kernels::Backend backend, unsigned threads) {
    const auto rots = rotations_in_t0(group);
    const auto series = family_series(group);
    std::vector<NormalSubgroup> out;
    for (const auto& tri : invariant_sublattices(rots, max_index, backend, threads)) {
        NormalSubgroup ns;
        ns.lattice = transform(group.t0_basis, tri.lattice());
        ns.family = match_family(ns.lattice, group.frame);
        const auto it = std::find_if(series.begin(), series.end(),
                                     [&](const FamilySeries& s) { return s.tag == ns.family.tag; });
        if (it == series.end() || ns.family.n % it->step != 0) {
            throw UnmatchedLattice(to_string(ns.family) + " is not a member of any series inside T0");
        }
        ns.series = static_cast<std::size_t>(it - series.begin());
        ns.n = ns.family.n / it->step;
        ns.lattice_index = tri.index();
        ns.pi1_index = Integer(group.point_order) * tri.index();
        out.push_back(std::move(ns));
    }
    std::sort(out.begin(), out.end(), [](const NormalSubgroup& x, const NormalSubgroup& y) {
        if (x.lattice_index != y.lattice_index) return x.lattice_index < y.lattice_index;
        return x.lattice < y.lattice;
    });
    return out;
}

}  // namespace maxsym
