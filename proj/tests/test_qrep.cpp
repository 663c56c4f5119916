#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgrow/qrep.hpp"

using namespace qgrow;
using namespace qgrow::qrep;

namespace {

Laurent q(const Rational& e, int den) { return Laurent::q_power(e, den); }

// Tensor-square action on V⊗V with the coproducts E |-> E⊗K + 1⊗E and
// F |-> F⊗1 + K^-1⊗F; independent oracle for the sym2/wedge2 tables.
PolyMatrix tensor_e(const Rep& v, int k) {
    PolyMatrix kk = torus_action(v, k, 1);
    return v.actE[k - 1].kron(kk) + PolyMatrix::identity(v.dim).kron(v.actE[k - 1]);
}

PolyMatrix tensor_f(const Rep& v, int k) {
    PolyMatrix kinv = torus_action(v, k, -1);
    return v.actF[k - 1].kron(PolyMatrix::identity(v.dim)) + kinv.kron(v.actF[k - 1]);
}

// Embedding of a pair representation into V⊗V: sym2 uses
// x_i⊗x_j + q^-1 x_j⊗x_i, wedge2 uses x_i⊗x_j - q x_j⊗x_i (i < j), both
// with x_m⊗x_m for sym2 diagonals.
PolyMatrix embedding(const Rep& rep) {
    int n = rep.n;
    PolyMatrix io(n * n, rep.dim);
    for (int c = 0; c < rep.dim; ++c) {
        auto [i, j] = rep.pairs[c];
        if (i == j) {
            io.set((i - 1) * n + (j - 1), c, RatFn(1));
        } else if (rep.kind == RepKind::sym2) {
            io.set((i - 1) * n + (j - 1), c, RatFn(1));
            io.set((j - 1) * n + (i - 1), c, RatFn(q(-1, rep.den)));
        } else {
            io.set((i - 1) * n + (j - 1), c, RatFn(1));
            io.set((j - 1) * n + (i - 1), c, RatFn(-q(1, rep.den)));
        }
    }
    return io;
}

} // namespace

TEST_CASE("vector representation actions and weights") {
    Rep v = vector_rep(2);
    CHECK(v.actE[0].at(1, 0) == RatFn(1));   // E_1 x_1 = x_2
    CHECK(v.actF[0].at(0, 1) == RatFn(1));   // F_1 x_2 = x_1
    PolyMatrix k1 = torus_action(v, 1, 1);
    CHECK(k1.at(0, 0) == RatFn(q(-1, v.den)));  // K_1 x_1 = q^-1 x_1
    CHECK(k1.at(1, 1) == RatFn(q(1, v.den)));
    CHECK(v.weights[0] == lattice::fundamental_weight(2, 1).scaled(-1));
    CHECK_THROWS_AS(vector_rep(1), DomainError);
}

TEST_CASE("fractional torus powers") {
    Rep v = vector_rep(2);
    PolyMatrix khalf = torus_action(v, 1, Rational(1, 2));
    CHECK(khalf.at(0, 0) == RatFn(q(Rational(-1, 2), v.den)));
    Rep s = sym2_rep(2);
    PolyMatrix k1 = torus_action(s, 1, 1);
    CHECK(k1.at(0, 0) == RatFn(q(-2, s.den)));  // x_1⊗x_1 has weight -2*lambda_1 = -alpha_1
}

TEST_CASE("sym2 dimensions and actions") {
    CHECK(sym2_rep(3).dim == 6);
    Rep s = sym2_rep(3);
    int den = s.den;
    // E_m(x_m⊗x_m) = x_m⊗x_{m+1} + q^-1 x_{m+1}⊗x_m, one basis step.
    CHECK(s.actE[0].at(s.pair_index(1, 2), s.pair_index(1, 1)) == RatFn(1));
    // E_i on the (i, i+1) pair: coefficient q + q^-1 into x_{i+1}⊗x_{i+1}.
    CHECK(s.actE[0].at(s.pair_index(2, 2), s.pair_index(1, 2)) ==
          RatFn(q(1, den) + q(-1, den)));
    // E_i squared is nonzero on sym2: E_1^2 (x_1⊗x_1) = (q+q^-1) x_2⊗x_2.
    PolyMatrix e1sq = s.actE[0] * s.actE[0];
    CHECK(e1sq.at(s.pair_index(2, 2), s.pair_index(1, 1)) == RatFn(q(1, den) + q(-1, den)));
}

TEST_CASE("wedge2 dimensions, actions, nilpotence") {
    CHECK_THROWS_WITH_AS(wedge2_rep(3), doctest::Contains("n ≥ 4"), DomainError);
    Rep w = wedge2_rep(4);
    CHECK(w.dim == 6);
    // E_k(x_i∧x_j) = x_{i+1}∧x_j for k = i, j > i+1.
    CHECK(w.actE[0].at(w.pair_index(2, 3), w.pair_index(1, 3)) == RatFn(1));
    // E_i^2 = 0 for every i.
    for (int k = 1; k <= w.n - 1; ++k) CHECK((w.actE[k - 1] * w.actE[k - 1]).is_zero());
}

TEST_CASE("triangularity in the canonical order") {
    for (const Rep& rep : {vector_rep(3), sym2_rep(3), wedge2_rep(4), sym2_rep(4)}) {
        for (int k = 0; k < rep.n - 1; ++k) {
            for (int r = 0; r < rep.dim; ++r) {
                for (const auto& [c, v] : rep.actE[k].row(r)) {
                    (void)v;
                    CHECK(r > c);  // E strictly raises the basis index
                }
                for (const auto& [c, v] : rep.actF[k].row(r)) {
                    (void)v;
                    CHECK(r < c);  // F strictly lowers it
                }
            }
        }
    }
}

TEST_CASE("K-E commutation: K_j E_i = q^((alpha_j, alpha_i)) E_i K_j") {
    for (const Rep& rep : {vector_rep(3), sym2_rep(3), wedge2_rep(4)}) {
        for (int i = 1; i <= rep.n - 1; ++i)
            for (int j = 1; j <= rep.n - 1; ++j) {
                for (const Rational& c : {Rational(1), Rational(1, rep.n)}) {
                    PolyMatrix kj = torus_action(rep, j, c);
                    Rational e = -c * lattice::inner(lattice::simple_root(rep.n, j),
                                                     lattice::simple_root(rep.n, i));
                    PolyMatrix lhs = rep.actE[i - 1] * kj;
                    PolyMatrix rhs = (kj * rep.actE[i - 1]).scaled(RatFn(q(e, rep.den)));
                    CHECK(lhs == rhs);
                }
            }
    }
}

TEST_CASE("sl2 strings: [E_i, F_i] is the K-weight difference quotient") {
    for (const Rep& rep : {vector_rep(2), vector_rep(3), sym2_rep(3), wedge2_rep(4)}) {
        Laurent dq = q(1, rep.den) - q(-1, rep.den);
        for (int i = 1; i <= rep.n - 1; ++i) {
            PolyMatrix comm = rep.actE[i - 1] * rep.actF[i - 1] - rep.actF[i - 1] * rep.actE[i - 1];
            PolyMatrix expect = (torus_action(rep, i, 1) - torus_action(rep, i, -1))
                                    .scaled(RatFn(Laurent(1), dq));
            CHECK(comm == expect);
        }
    }
}

TEST_CASE("sym2 and wedge2 exhaust the tensor square") {
    for (int n : {2, 4}) {
        Rep v = vector_rep(n);
        int total = n * n;
        int dims = n * (n + 1) / 2 + n * (n - 1) / 2;
        CHECK(dims == total);
        if (n < 4) continue;
        Rep s = sym2_rep(n);
        Rep w = wedge2_rep(n);
        PolyMatrix es = embedding(s), ew = embedding(w);
        for (int k = 1; k <= n - 1; ++k) {
            // Stability plus agreement with the tabulated actions: the
            // tensor-square action restricted along the embedding equals the
            // embedded tabulated action.
            CHECK(tensor_e(v, k) * es == es * s.actE[k - 1]);
            CHECK(tensor_f(v, k) * es == es * s.actF[k - 1]);
            CHECK(tensor_e(v, k) * ew == ew * w.actE[k - 1]);
            CHECK(tensor_f(v, k) * ew == ew * w.actF[k - 1]);
        }
    }
}

TEST_CASE("torus exponents off the session lattice are rejected") {
    Rep v = vector_rep(3);
    CHECK_THROWS_AS(torus_action(v, 1, Rational(1, 5)), DomainError);
    CHECK_NOTHROW(torus_action(v, 1, Rational(1, 3)));
}
