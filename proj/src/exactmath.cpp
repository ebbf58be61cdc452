#include "maxsym/exactmath.hpp"

#include <sstream>

namespace maxsym {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
    Rational r;
    try {
        r = Rational(std::string(text), 10);
    } catch (const std::invalid_argument&) {
        throw DomainError("not a rational: " + std::string(text));
    }
    if (r.get_den() == 0) throw DomainError("rational with zero denominator");
    r.canonicalize();
    return r;
}

Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rational frac_of(const Rational& r) { return r - Rational(floor_of(r)); }

bool is_integral(const Rational& r) { return r.get_den() == 1; }

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

bool Vec3::is_integral() const {
    return c[0].get_den() == 1 && c[1].get_den() == 1 && c[2].get_den() == 1;
}

IntVec3 Vec3::to_integer() const {
    if (!is_integral()) throw DomainError("vector is not integral: " + to_string(*this));
    return {c[0].get_num(), c[1].get_num(), c[2].get_num()};
}

IntVec3 Vec3::floor() const { return {floor_of(c[0]), floor_of(c[1]), floor_of(c[2])}; }

Vec3 Vec3::frac() const { return {frac_of(c[0]), frac_of(c[1]), frac_of(c[2])}; }

Integer Vec3::denominator() const {
    return lcm(lcm(c[0].get_den(), c[1].get_den()), c[2].get_den());
}

Vec3& Vec3::operator+=(const Vec3& o) {
    for (std::size_t i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
}

Vec3& Vec3::operator-=(const Vec3& o) {
    for (std::size_t i = 0; i < 3; ++i) c[i] -= o.c[i];
    return *this;
}

Vec3 vec3(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }

Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

std::string to_string(const Vec3& v) {
    return "(" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + ")";
}

std::string to_string(const IntVec3& v) {
    return "(" + v[0].get_str() + "," + v[1].get_str() + "," + v[2].get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) { return os << to_string(v); }
std::ostream& operator<<(std::ostream& os, const IntVec3& v) { return os << to_string(v); }

IntVec3 primitive_direction(const Vec3& v) {
    if (v.is_zero()) throw DomainError("direction of the zero vector");
    const Integer den = v.denominator();
    IntVec3 w;
    for (std::size_t i = 0; i < 3; ++i) w[i] = Rational(v[i] * den).get_num();
    const Integer g = gcd(gcd(w[0], w[1]), w[2]);
    for (std::size_t i = 0; i < 3; ++i) w[i] /= g;
    return w;
}

IntVec3 lex_positive(const IntVec3& v) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (v[i] != 0) return v[i] > 0 ? v : -v;
    }
    return v;
}

Mat3 Mat3::identity() {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) m(i, i) = 1;
    return m;
}

Mat3 Mat3::from_rows(std::array<std::array<long, 3>, 3> rows) {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) {
        m(i, 0) = c0[i];
        m(i, 1) = c1[i];
        m(i, 2) = c2[i];
    }
    return m;
}

Vec3 Mat3::column(std::size_t j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }

Mat3 Mat3::transpose() const {
    Mat3 t;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
    }
    return t;
}

Rational Mat3::determinant() const {
    const Mat3& a = *this;
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Mat3 Mat3::inverse() const {
    const Rational det = determinant();
    if (det == 0) throw DomainError("singular matrix");
    const Mat3& a = *this;
    Mat3 adj;
    adj(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
    adj(0, 1) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
    adj(0, 2) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
    adj(1, 0) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
    adj(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
    adj(1, 2) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
    adj(2, 0) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
    adj(2, 1) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
    adj(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    return Rational(1) / det * adj;
}

bool Mat3::is_integral() const {
    for (const auto& x : m_) {
        if (x.get_den() != 1) return false;
    }
    return true;
}

bool Mat3::is_identity() const { return *this == identity(); }

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
        }
    }
    return r;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
    Vec3 r;
    for (std::size_t i = 0; i < 3; ++i) r[i] = a(i, 0) * v[0] + a(i, 1) * v[1] + a(i, 2) * v[2];
    return r;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = a(i, j) - b(i, j);
    }
    return r;
}

Mat3 operator*(const Rational& s, const Mat3& a) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = s * a(i, j);
    }
    return r;
}

std::string to_string(const Mat3& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) os << ",";
        os << "[" << to_string(m(i, 0)) << "," << to_string(m(i, 1)) << "," << to_string(m(i, 2))
           << "]";
    }
    os << "]";
    return os.str();
}

std::optional<LinearSolution> solve(const Mat3& a, const Vec3& b) {
    // Reduced row echelon form of [a | b].
    std::array<std::array<Rational, 4>, 3> m;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = a(i, j);
        m[i][3] = b[i];
    }
    std::array<int, 3> pivot_col{-1, -1, -1};
    std::size_t row = 0;
    for (std::size_t col = 0; col < 3 && row < 3; ++col) {
        std::size_t p = row;
        while (p < 3 && m[p][col] == 0) ++p;
        if (p == 3) continue;
        std::swap(m[p], m[row]);
        const Rational pv = m[row][col];
        for (auto& x : m[row]) x /= pv;
        for (std::size_t i = 0; i < 3; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = 0; j < 4; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col[row] = static_cast<int>(col);
        ++row;
    }
    for (std::size_t i = row; i < 3; ++i) {
        if (m[i][3] != 0) return std::nullopt;
    }
    LinearSolution sol;
    std::array<bool, 3> is_pivot{false, false, false};
    for (std::size_t i = 0; i < row; ++i) {
        sol.particular[pivot_col[i]] = m[i][3];
        is_pivot[pivot_col[i]] = true;
    }
    for (std::size_t f = 0; f < 3; ++f) {
        if (is_pivot[f]) continue;
        Vec3 k;
        k[f] = 1;
        for (std::size_t i = 0; i < row; ++i) k[pivot_col[i]] = -m[i][f];
        sol.kernel.push_back(k);
    }
    return sol;
}

}  // namespace maxsym
