#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgrow/lattice.hpp"

#include <cstdint>

using namespace qgrow;
using namespace qgrow::lattice;

namespace {

struct Rng {
    uint64_t s = 0xdeadbeefcafef00dULL;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long pick(long lo, long hi) { return lo + long(next() % uint64_t(hi - lo + 1)); }
};

Weight random_weight(Rng& rng, int rank) {
    Weight w;
    for (int i = 0; i < rank; ++i) {
        Rational c(rng.pick(-6, 6), rng.pick(1, 4));
        c.canonicalize();
        w.coords.push_back(c);
    }
    return w;
}

} // namespace

TEST_CASE("fundamental weight coordinates") {
    Weight w = fundamental_weight(2, 1);
    CHECK(w.coords == std::vector<Rational>{Rational(1, 2)});

    w = fundamental_weight(3, 1);
    CHECK(w.coords == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});

    w = fundamental_weight(4, 2);
    CHECK(w.coords == std::vector<Rational>{Rational(1, 2), Rational(1), Rational(1, 2)});

    CHECK_THROWS_AS(fundamental_weight(4, 4), DomainError);
    CHECK_THROWS_AS(fundamental_weight(4, 0), DomainError);
}

TEST_CASE("inner product values") {
    int n = 3;
    CHECK(inner(simple_root(n, 1), simple_root(n, 1)) == 2);
    CHECK(inner(simple_root(n, 1), simple_root(n, 2)) == -1);
    CHECK(inner(fundamental_weight(n, 1), simple_root(n, 1)) == 1);
    CHECK(inner(fundamental_weight(n, 1), fundamental_weight(n, 1)) == Rational(2, 3));
}

TEST_CASE("inner is symmetric and bilinear") {
    Rng rng;
    for (int it = 0; it < 100; ++it) {
        int rank = int(rng.pick(1, 6));
        Weight a = random_weight(rng, rank);
        Weight b = random_weight(rng, rank);
        Weight c = random_weight(rng, rank);
        Rational s(rng.pick(-4, 4), rng.pick(1, 3));
        s.canonicalize();
        CHECK(inner(a, b) == inner(b, a));
        CHECK(inner(a + b, c) == inner(a, c) + inner(b, c));
        CHECK(inner(a.scaled(s), b) == s * inner(a, b));
    }
}

TEST_CASE("fundamental weights are dual to simple roots") {
    for (int n = 2; n <= 8; ++n)
        for (int i = 1; i <= n - 1; ++i)
            for (int j = 1; j <= n - 1; ++j) {
                Rational v = 2 * inner(fundamental_weight(n, i), simple_root(n, j)) /
                             inner(simple_root(n, j), simple_root(n, j));
                CHECK(v == (i == j ? 1 : 0));
            }
}

TEST_CASE("fundamental weights match the inverse Cartan matrix") {
    // Independent oracle: exact Gauss-Jordan inversion of the A_{n-1} Cartan
    // matrix; column i must reproduce the alpha-coordinates of lambda_i.
    for (int n = 2; n <= 6; ++n) {
        int r = n - 1;
        std::vector<std::vector<Rational>> a(r, std::vector<Rational>(2 * r, 0));
        for (int i = 0; i < r; ++i) {
            a[i][i] = 2;
            if (i > 0) a[i][i - 1] = -1;
            if (i + 1 < r) a[i][i + 1] = -1;
            a[i][r + i] = 1;
        }
        for (int c = 0; c < r; ++c) {
            int piv = c;
            while (a[piv][c] == 0) ++piv;
            std::swap(a[piv], a[c]);
            Rational d = a[c][c];
            for (int j = 0; j < 2 * r; ++j) a[c][j] /= d;
            for (int i = 0; i < r; ++i) {
                if (i == c || a[i][c] == 0) continue;
                Rational f = a[i][c];
                for (int j = 0; j < 2 * r; ++j) a[i][j] -= f * a[c][j];
            }
        }
        for (int i = 1; i <= r; ++i) {
            Weight w = fundamental_weight(n, i);
            for (int j = 0; j < r; ++j) CHECK(w.coords[j] == a[j][r + i - 1]);
        }
    }
}

TEST_CASE("central components") {
    Weight mu = fundamental_weight(3, 1).scaled(-1);
    Weight v;
    v.coords.assign(2, 0);
    v.central = Rational(4, 3);
    Weight alpha_n = mu + v;
    CHECK(inner(alpha_n, mu) == inner(mu, mu));          // v orthogonal to mu
    CHECK(inner(alpha_n, simple_root(3, 1)) == inner(mu, simple_root(3, 1)));
    CHECK(inner(alpha_n, alpha_n) == inner(mu, mu) + Rational(4, 3));
}

TEST_CASE("reference Cartan matrices") {
    using M = std::vector<std::vector<long>>;
    CHECK(reference_cartan(Series::B, 2) == M{{2, -1}, {-2, 2}});
    CHECK(reference_cartan(Series::C, 3) == M{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
    CHECK(reference_cartan(Series::D, 4) ==
          M{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
    CHECK_THROWS_AS(reference_cartan(Series::D, 3), DomainError);
    CHECK_THROWS_AS(reference_cartan(Series::B, 1), DomainError);
}
