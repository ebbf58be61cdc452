#pragma once

// Exact scalar, vector and matrix arithmetic over the rationals.
//
// Integers and rationals are GMP values; a Rational is always kept in lowest
// terms with a positive denominator (mpq_class arithmetic guarantees this, and
// every constructor in this header canonicalizes).

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "maxsym/errors.hpp"

namespace maxsym {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);
Rational parse_rational(std::string_view text);

Integer floor_of(const Rational& r);
Rational frac_of(const Rational& r);  // r - floor(r), in [0,1)
bool is_integral(const Rational& r);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Three-component integer vector (lattice coordinates).
struct IntVec3 {
    std::array<Integer, 3> c{};

    IntVec3() = default;
    IntVec3(Integer x, Integer y, Integer z) : c{std::move(x), std::move(y), std::move(z)} {}

    Integer& operator[](std::size_t i) { return c[i]; }
    const Integer& operator[](std::size_t i) const { return c[i]; }

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }

    friend bool operator==(const IntVec3& a, const IntVec3& b) { return a.c == b.c; }
    friend bool operator<(const IntVec3& a, const IntVec3& b) {
        for (std::size_t i = 0; i < 3; ++i) {
            if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
        }
        return false;
    }
    friend IntVec3 operator+(const IntVec3& a, const IntVec3& b) {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
    }
    friend IntVec3 operator-(const IntVec3& a, const IntVec3& b) {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    }
    friend IntVec3 operator-(const IntVec3& a) { return {-a[0], -a[1], -a[2]}; }
    friend IntVec3 operator*(const Integer& s, const IntVec3& a) {
        return {s * a[0], s * a[1], s * a[2]};
    }
};

/// Three-component rational vector, coordinates in the active frame basis.
struct Vec3 {
    std::array<Rational, 3> c{};

    Vec3() = default;
    Vec3(Rational x, Rational y, Rational z) : c{std::move(x), std::move(y), std::move(z)} {}
    explicit Vec3(const IntVec3& v) : c{Rational(v[0]), Rational(v[1]), Rational(v[2])} {}

    Rational& operator[](std::size_t i) { return c[i]; }
    const Rational& operator[](std::size_t i) const { return c[i]; }

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
    bool is_integral() const;
    IntVec3 to_integer() const;  // throws DomainError unless is_integral()
    IntVec3 floor() const;
    Vec3 frac() const;
    /// Least common multiple of the component denominators.
    Integer denominator() const;

    Vec3& operator+=(const Vec3& o);
    Vec3& operator-=(const Vec3& o);

    friend bool operator==(const Vec3& a, const Vec3& b) { return a.c == b.c; }
    friend bool operator<(const Vec3& a, const Vec3& b) {
        for (std::size_t i = 0; i < 3; ++i) {
            if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
        }
        return false;
    }
    friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
    friend Vec3 operator*(const Rational& s, const Vec3& a) {
        return {s * a[0], s * a[1], s * a[2]};
    }
};

Vec3 vec3(long x, long y, long z);
Rational dot(const Vec3& a, const Vec3& b);
std::string to_string(const Vec3& v);
std::string to_string(const IntVec3& v);
std::ostream& operator<<(std::ostream& os, const Vec3& v);
std::ostream& operator<<(std::ostream& os, const IntVec3& v);

/// Primitive integer vector on the ray of v (gcd 1, same direction). v != 0.
IntVec3 primitive_direction(const Vec3& v);
/// Flip sign so the first nonzero entry is positive.
IntVec3 lex_positive(const IntVec3& v);

/// 3x3 rational matrix. Column j is the image of the j-th basis vector.
class Mat3 {
public:
    Mat3() = default;

    static Mat3 identity();
    static Mat3 from_rows(std::array<std::array<long, 3>, 3> rows);
    static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);

    Rational& operator()(std::size_t row, std::size_t col) { return m_[row * 3 + col]; }
    const Rational& operator()(std::size_t row, std::size_t col) const { return m_[row * 3 + col]; }

    Vec3 column(std::size_t j) const;
    Mat3 transpose() const;
    Rational determinant() const;
    Mat3 inverse() const;  // throws DomainError when singular
    bool is_integral() const;
    bool is_identity() const;

    friend bool operator==(const Mat3& a, const Mat3& b) { return a.m_ == b.m_; }
    friend bool operator<(const Mat3& a, const Mat3& b) {
        for (std::size_t i = 0; i < 9; ++i) {
            if (a.m_[i] != b.m_[i]) return a.m_[i] < b.m_[i];
        }
        return false;
    }
    friend Mat3 operator*(const Mat3& a, const Mat3& b);
    friend Vec3 operator*(const Mat3& a, const Vec3& v);
    friend Mat3 operator-(const Mat3& a, const Mat3& b);
    friend Mat3 operator*(const Rational& s, const Mat3& a);

private:
    std::array<Rational, 9> m_{};
};

std::string to_string(const Mat3& m);

/// Result of solving A x = b: a particular solution plus a basis of ker A.
struct LinearSolution {
    Vec3 particular;
    std::vector<Vec3> kernel;
};

/// Exact Gaussian elimination on a 3x3 system; nullopt when inconsistent.
std::optional<LinearSolution> solve(const Mat3& a, const Vec3& b);

}  // namespace maxsym
