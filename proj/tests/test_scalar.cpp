#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgrow/scalar.hpp"

#include <cstdint>

using namespace qgrow;

namespace {

// Small deterministic generator for property checks.
struct Rng {
    uint64_t s = 0x9e3779b97f4a7c15ULL;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long pick(long lo, long hi) { return lo + long(next() % uint64_t(hi - lo + 1)); }
};

Laurent random_laurent(Rng& rng, int den) {
    Laurent r;
    int terms = int(rng.pick(0, 4));
    for (int t = 0; t < terms; ++t) {
        Rational c(rng.pick(-9, 9), rng.pick(1, 5));
        c.canonicalize();
        r += Laurent::monomial(c, rng.pick(-6, 6), den);
    }
    return r;
}

const int D = 4;  // session denominator for n = 2

Laurent q(const Rational& e = 1) { return Laurent::q_power(e, D); }

} // namespace

TEST_CASE("laurent monomial exponent arithmetic") {
    CHECK(q(Rational(1, 2)) * q(Rational(1, 2)) == q(1));
    CHECK(q(Rational(-1, 2)) * q(Rational(1, 2)) == Laurent(1));
    CHECK_THROWS_AS(Laurent::q_power(Rational(1, 3), D), DomainError);
}

TEST_CASE("laurent product of binomials") {
    Laurent a = q(1) - q(-1);
    Laurent b = q(1) + q(-1);
    CHECK(a * b == q(2) - q(-2));
}

TEST_CASE("exact cancellation through division") {
    Laurent num = q(2) - Laurent(1);   // q^2 - 1
    Laurent den = q(1) - Laurent(1);   // q - 1
    RatFn r = RatFn(num) / RatFn(den);
    CHECK(r.is_laurent());
    CHECK(r.num() == q(1) + Laurent(1));
}

TEST_CASE("division by zero and session mixing are errors") {
    CHECK_THROWS_AS(RatFn(q()) / RatFn(), DivisionByZero);
    Laurent other = Laurent::q_power(Rational(1, 3), 6);
    CHECK_THROWS_AS(q() * other, SessionMismatch);
    CHECK_NOTHROW(q() * Laurent(5));  // constants are session-free
}

TEST_CASE("ring axioms on random triples") {
    Rng rng;
    for (int it = 0; it < 200; ++it) {
        Laurent a = random_laurent(rng, D);
        Laurent b = random_laurent(rng, D);
        Laurent c = random_laurent(rng, D);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("rational function canonical form is unique") {
    Rng rng;
    int checked = 0;
    for (int it = 0; it < 200 && checked < 80; ++it) {
        Laurent a = random_laurent(rng, D);
        Laurent b = random_laurent(rng, D);
        Laurent c = random_laurent(rng, D);
        if (b.is_zero() || c.is_zero()) continue;
        RatFn lhs(a, b);
        RatFn rhs(a * c, b * c);
        CHECK(lhs == rhs);
        CHECK(lhs.num() == rhs.num());
        CHECK(lhs.den() == rhs.den());
        ++checked;
    }
    CHECK(checked >= 50);
}

TEST_CASE("rational function field identities") {
    Rng rng;
    for (int it = 0; it < 100; ++it) {
        Laurent a = random_laurent(rng, D);
        Laurent b = random_laurent(rng, D);
        if (a.is_zero() || b.is_zero()) continue;
        RatFn x(a, b);
        CHECK((x * x.inverse()).is_one());
        CHECK((x - x).is_zero());
    }
}

TEST_CASE("signed q-power recognition") {
    auto r = (q(Rational(3, 2))).as_signed_q_power();
    REQUIRE(r.has_value());
    CHECK(r->first == 1);
    CHECK(r->second == Rational(3, 2));
    auto s = (-q(Rational(-1, 2))).as_signed_q_power();
    REQUIRE(s.has_value());
    CHECK(s->first == -1);
    CHECK(s->second == Rational(-1, 2));
    CHECK(!(q(1) + Laurent(1)).as_signed_q_power().has_value());
    CHECK(!(q(1).scaled(2)).as_signed_q_power().has_value());
}

TEST_CASE("specialization evaluates exactly") {
    Laurent a = q(1) - q(-1);
    // v = 2, den 4: q = v^4 = 16.
    CHECK(a.eval_v(2) == Rational(16) - Rational(1, 16));
}
