#include "doctest.h"

#include <random>

#include "maxsym/exactmath.hpp"

using namespace maxsym;

TEST_CASE("rationals stay in lowest terms") {
    const Rational r = make_rational(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(to_string(make_rational(0, 5)) == "0");
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
}

TEST_CASE("floor and fractional part round toward minus infinity") {
    CHECK(floor_of(make_rational(-1, 2)) == -1);
    CHECK(frac_of(make_rational(-1, 4)) == make_rational(3, 4));
    CHECK(floor_of(make_rational(7, 3)) == 2);
}

TEST_CASE("matrix inverse agrees with the identity on random integer matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-5, 5);
    int checked = 0;
    while (checked < 50) {
        Mat3 m;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = d(rng);
        if (m.determinant() == 0) {
            CHECK_THROWS_AS(m.inverse(), DomainError);
            continue;
        }
        CHECK((m * m.inverse()).is_identity());
        CHECK((m.inverse() * m).is_identity());
        ++checked;
    }
}

TEST_CASE("solve returns a particular solution and a kernel basis") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        Mat3 a;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = d(rng);
        if (trial % 3 == 0) {
            for (std::size_t j = 0; j < 3; ++j) a(2, j) = a(0, j) + a(1, j);
        }
        const Vec3 b = vec3(d(rng), d(rng), d(rng));
        const auto sol = solve(a, b);
        if (!sol) {
            // Inconsistent only when a is singular.
            CHECK(a.determinant() == 0);
            continue;
        }
        CHECK(a * sol->particular == b);
        for (const auto& k : sol->kernel) CHECK((a * k).is_zero());
        const std::size_t rank = 3 - sol->kernel.size();
        CHECK((a.determinant() != 0) == (rank == 3));
    }
}

TEST_CASE("primitive directions") {
    CHECK(primitive_direction(Vec3{make_rational(1, 2), make_rational(-1, 2), 0}) == IntVec3(1, -1, 0));
    CHECK(lex_positive(IntVec3(0, -2, 1)) == IntVec3(0, 2, -1));
    CHECK_THROWS_AS(primitive_direction(Vec3{}), DomainError);
}
