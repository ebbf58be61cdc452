#include "maxsym/lattice.hpp"

#include <algorithm>

namespace maxsym {

namespace {

Integer abs_of(const Integer& z) { return z < 0 ? Integer(-z) : z; }

}  // namespace

SubgroupHNF SubgroupHNF::from_integer(std::span<const IntVec3> generators) {
    std::vector<IntVec3> rest;
    for (const auto& g : generators) {
        if (!g.is_zero()) rest.push_back(g);
    }
    SubgroupHNF out;
    for (int row = 0; row < 3 && !rest.empty(); ++row) {
        // Euclid across columns until at most one has a nonzero entry in this row.
        for (;;) {
            std::size_t best = rest.size();
            std::size_t nonzero = 0;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                if (rest[i][row] == 0) continue;
                ++nonzero;
                if (best == rest.size() || abs_of(rest[i][row]) < abs_of(rest[best][row])) best = i;
            }
            if (nonzero == 0) break;
            if (nonzero == 1) {
                IntVec3 col = rest[best];
                if (col[row] < 0) col = -col;
                out.basis_.push_back(std::move(col));
                out.pivots_.push_back(row);
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
                break;
            }
            const Integer pivot = rest[best][row];
            for (std::size_t i = 0; i < rest.size(); ++i) {
                if (i == best || rest[i][row] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rest[i][row].get_mpz_t(), pivot.get_mpz_t());
                rest[i] = rest[i] - q * rest[best];
            }
            std::erase_if(rest, [](const IntVec3& v) { return v.is_zero(); });
        }
    }
    // Reduce entries left of each pivot into [0, pivot).
    for (std::size_t j = 0; j < out.basis_.size(); ++j) {
        const int pr = out.pivots_[j];
        const Integer pivot = out.basis_[j][pr];
        for (std::size_t i = 0; i < j; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), out.basis_[i][pr].get_mpz_t(), pivot.get_mpz_t());
            if (q != 0) out.basis_[i] = out.basis_[i] - q * out.basis_[j];
        }
    }
    return out;
}

SubgroupHNF SubgroupHNF::from_rational(std::span<const Vec3> generators) {
    Integer k = 1;
    for (const auto& g : generators) k = lcm(k, g.denominator());
    std::vector<IntVec3> ints;
    ints.reserve(generators.size());
    for (const auto& g : generators) ints.push_back((Rational(k) * g).to_integer());
    SubgroupHNF out = from_integer(ints);
    out.scale_ = make_rational(Integer(1), k);
    out.canonicalize();
    return out;
}

void SubgroupHNF::canonicalize() {
    if (basis_.empty()) {
        scale_ = 1;
        return;
    }
    Integer k = scale_.get_den();
    Integer g = k;
    for (const auto& col : basis_) {
        for (std::size_t i = 0; i < 3; ++i) g = gcd(g, col[i]);
    }
    if (g == 1) return;
    for (auto& col : basis_) {
        for (std::size_t i = 0; i < 3; ++i) col[i] /= g;
    }
    scale_ = make_rational(Integer(1), k / g);
}

std::vector<Vec3> SubgroupHNF::vectors() const {
    std::vector<Vec3> out;
    out.reserve(basis_.size());
    for (const auto& col : basis_) out.push_back(scale_ * Vec3(col));
    return out;
}

Vec3 SubgroupHNF::reduce(const Vec3& v) const {
    const Rational k(scale_.get_den());
    Vec3 w = k * v;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        const int pr = pivots_[j];
        const Integer q = floor_of(w[pr] / Rational(basis_[j][pr]));
        if (q != 0) w -= Rational(q) * Vec3(basis_[j]);
    }
    return scale_ * w;
}

bool SubgroupHNF::contains(const Vec3& v) const { return reduce(v).is_zero(); }

bool SubgroupHNF::contains(const SubgroupHNF& other) const {
    for (const auto& v : other.vectors()) {
        if (!contains(v)) return false;
    }
    return true;
}

Rational SubgroupHNF::covolume() const {
    if (rank() != 3) throw RankDeficient("covolume of a rank-" + std::to_string(rank()) + " subgroup");
    Integer det = basis_[0][0] * basis_[1][1] * basis_[2][2];
    return Rational(det) * scale_ * scale_ * scale_;
}

Mat3 SubgroupHNF::matrix() const {
    if (rank() != 3) throw RankDeficient("matrix of a rank-" + std::to_string(rank()) + " subgroup");
    const auto v = vectors();
    return Mat3::from_columns(v[0], v[1], v[2]);
}

bool operator<(const SubgroupHNF& a, const SubgroupHNF& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    if (a.scale_ != b.scale_) return a.scale_ < b.scale_;
    return std::lexicographical_compare(a.basis_.begin(), a.basis_.end(), b.basis_.begin(),
                                        b.basis_.end());
}

std::string to_string(const SubgroupHNF& l) {
    std::string s = "<";
    const auto v = l.vectors();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ">";
}

SubgroupHNF hnf(std::span<const IntVec3> generators) { return SubgroupHNF::from_integer(generators); }

bool member(const Vec3& v, const SubgroupHNF& l) { return l.contains(v); }

Integer index(const SubgroupHNF& sub, const SubgroupHNF& sup) {
    if (sub.rank() != 3 || sup.rank() != 3) throw RankDeficient("index needs two rank-3 subgroups");
    if (!sup.contains(sub)) throw NotASubgroup(to_string(sub) + " is not contained in " + to_string(sup));
    const Rational ratio = sub.covolume() / sup.covolume();
    if (!is_integral(ratio)) throw NotASubgroup("non-integral index");
    return ratio.get_num();
}

SubgroupHNF join(const SubgroupHNF& a, const SubgroupHNF& b) {
    auto gens = a.vectors();
    const auto vb = b.vectors();
    gens.insert(gens.end(), vb.begin(), vb.end());
    return SubgroupHNF::from_rational(gens);
}

std::vector<Vec3> coset_reps(const SubgroupHNF& sub, const SubgroupHNF& sup) {
    const Integer n = index(sub, sup);
    const Mat3 sup_basis = sup.matrix();
    const Mat3 rel = sup_basis.inverse() * sub.matrix();
    std::vector<IntVec3> cols;
    for (std::size_t j = 0; j < 3; ++j) cols.push_back(rel.column(j).to_integer());
    const SubgroupHNF h = hnf(cols);
    // Lower-triangular HNF: the box of pivot sizes is a transversal of Z^3 / h.
    const long p0 = h.basis()[0][0].get_si();
    const long p1 = h.basis()[1][1].get_si();
    const long p2 = h.basis()[2][2].get_si();
    std::vector<Vec3> out;
    out.reserve(n.get_ui());
    for (long x = 0; x < p0; ++x) {
        for (long y = 0; y < p1; ++y) {
            for (long z = 0; z < p2; ++z) out.push_back(sub.reduce(sup_basis * vec3(x, y, z)));
        }
    }
    return out;
}

SubgroupHNF scaled(const SubgroupHNF& l, const Rational& s) {
    auto v = l.vectors();
    for (auto& x : v) x = s * x;
    return SubgroupHNF::from_rational(v);
}

SubgroupHNF transform(const Mat3& m, const SubgroupHNF& l) {
    auto v = l.vectors();
    for (auto& x : v) x = m * x;
    return SubgroupHNF::from_rational(v);
}

}  // namespace maxsym
