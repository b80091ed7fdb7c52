#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "agk/rational.hpp"

using agk::Rational;

TEST_CASE("construction normalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, -7) == Rational(0));
    CHECK(Rational(-3, -9) == Rational(1, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic matches brute-force integer arithmetic") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> nd(-1000, 1000), dd(1, 1000);
    for (int i = 0; i < 10000; ++i) {
        const std::int64_t p = nd(rng), q = dd(rng), r = nd(rng), s = dd(rng);
        Rational a(p, q), b(r, s);

        Rational sum = a + b;
        CHECK(sum == Rational(p * s + r * q, q * s));
        Rational diff = a - b;
        CHECK(diff == Rational(p * s - r * q, q * s));
        Rational prod = a * b;
        CHECK(prod == Rational(p * r, q * s));
        if (r != 0) CHECK(a / b == Rational(p * s, q * r));

        for (const Rational& v : {sum, diff, prod}) {
            CHECK(v.den() > 0);
            CHECK(std::gcd(std::abs(v.num()), v.den()) == 1);
        }
    }
}

TEST_CASE("ordering is exact") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 5) > Rational(4, 3));
    CHECK(Rational(2, 6) <= Rational(1, 3));
}

TEST_CASE("overflow throws instead of wrapping") {
    Rational big(std::int64_t(1) << 62);
    CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
    CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("parse") {
    CHECK(*Rational::parse("1/3") == Rational(1, 3));
    CHECK(*Rational::parse("-7/2") == Rational(-7, 2));
    CHECK(*Rational::parse("  5 ") == Rational(5));
    CHECK(*Rational::parse("0.5") == Rational(1, 2));
    CHECK(*Rational::parse("-0.125") == Rational(-1, 8));
    CHECK(*Rational::parse("2.50") == Rational(5, 2));
    CHECK(!Rational::parse("1/0"));
    CHECK(!Rational::parse("abc"));
    CHECK(!Rational::parse(""));
    CHECK(!Rational::parse("1.2.3"));
}

TEST_CASE("from_double snaps within tolerance") {
    CHECK(*Rational::from_double(0.5) == Rational(1, 2));
    CHECK(*Rational::from_double(1.0 / 3.0) == Rational(1, 3));
    CHECK(*Rational::from_double(-2.75) == Rational(-11, 4));
    auto pi = Rational::from_double(3.14159265358979323846);
    REQUIRE(pi.has_value());
    CHECK(pi->den() <= 1000000);
    CHECK(std::abs(pi->to_double() - 3.14159265358979323846) < 1e-9);
    CHECK(!Rational::from_double(std::nan("")));
}

TEST_CASE("exact square roots") {
    CHECK(*Rational(4, 9).exact_sqrt() == Rational(2, 3));
    CHECK(*Rational(0).exact_sqrt() == Rational(0));
    CHECK(!Rational(2).exact_sqrt());
    CHECK(!Rational(-4).exact_sqrt());
    CHECK(*Rational(49).exact_sqrt() == Rational(7));
}
