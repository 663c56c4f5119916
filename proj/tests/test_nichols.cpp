#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgrow/nichols.hpp"
#include "qgrow/rmx.hpp"

using namespace qgrow;
using namespace qgrow::nichols;

namespace {

Laurent qp(const Rational& e, int den) { return Laurent::q_power(e, den); }

// Plain Gaussian elimination rank of the specialization at v = v0;
// independent oracle for kernel dimensions.
int specialized_rank(const PolyMatrix& m, const Rational& v0) {
    int nr = m.nrows(), nc = m.ncols();
    std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc, 0));
    for (int i = 0; i < nr; ++i)
        for (const auto& [j, v] : m.row(i)) a[i][j] = v.eval_v(v0);
    int rank = 0;
    for (int c = 0; c < nc && rank < nr; ++c) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int r = 0; r < nr; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[rank][c];
            for (int j = c; j < nc; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("braiding values of the standard matrix") {
    int n = 3, den = 2 * n;
    PolyMatrix r = rmx::standard_vector_rmatrix(n);
    // Psi(e^k (x) e^k) = q e^k (x) e^k.
    WordLin in{{Word{2, 2}, RatFn(1)}};
    WordLin out = braid_apply(r, in, 1);
    REQUIRE(out.size() == 1);
    CHECK(out[Word{2, 2}] == RatFn(qp(1, den)));
    // m < n: plain transposition.
    in = {{Word{1, 3}, RatFn(1)}};
    out = braid_apply(r, in, 1);
    REQUIRE(out.size() == 1);
    CHECK(out[Word{3, 1}] == RatFn(1));
    // m > n: transposition plus (q - q^-1) correction.
    in = {{Word{3, 1}, RatFn(1)}};
    out = braid_apply(r, in, 1);
    REQUIRE(out.size() == 2);
    CHECK(out[Word{1, 3}] == RatFn(1));
    CHECK(out[Word{3, 1}] == RatFn(qp(1, den) - qp(-1, den)));
}

TEST_CASE("coproduct components") {
    int n = 2, den = 2 * n;
    PolyMatrix r = rmx::standard_vector_rmatrix(n);
    Laurent q1 = qp(1, den);
    // (1,1) component of d(e^k e^k) = (1+q) e^k (x) e^k.
    SplitLin c = coproduct_component(r, Word{1, 1}, 1);
    REQUIRE(c.size() == 1);
    CHECK(c[{Word{1}, Word{1}}] == RatFn(Laurent(1) + q1));
    // m > n: (1+q-q^-1) e^m (x) e^n + e^n (x) e^m.
    c = coproduct_component(r, Word{2, 1}, 1);
    REQUIRE(c.size() == 2);
    CHECK(c[{Word{2}, Word{1}}] == RatFn(Laurent(1) + q1 - qp(-1, den)));
    CHECK(c[{Word{1}, Word{2}}] == RatFn(1));
    // m < n: both coefficients 1.
    c = coproduct_component(r, Word{1, 2}, 1);
    REQUIRE(c.size() == 2);
    CHECK(c[{Word{1}, Word{2}}] == RatFn(1));
    CHECK(c[{Word{2}, Word{1}}] == RatFn(1));
    // (1,2) component of d((e^k)^3) = (1+q+q^2) e^k (x) (e^k)^2.
    c = coproduct_component(r, Word{1, 1, 1}, 1);
    REQUIRE(c.size() == 1);
    CHECK(c[{Word{1}, Word{1, 1}}] == RatFn(Laurent(1) + q1 + qp(2, den)));
    // (2,1) component symmetric count.
    c = coproduct_component(r, Word{1, 1, 1}, 2);
    REQUIRE(c.size() == 1);
    CHECK(c[{Word{1, 1}, Word{1}}] == RatFn(Laurent(1) + q1 + qp(2, den)));
}

TEST_CASE("degree-3 coproduct expansions with two letters") {
    // d((e^i)^2 e^j) for i > j, (1,2) split: coefficient of e^i (x) e^i e^j
    // is q + q^2 and of e^i (x) e^j e^i is q - q^-1; e^j picks coefficient 1.
    int n = 2, den = 4;
    PolyMatrix r = rmx::standard_vector_rmatrix(n);
    SplitLin c = coproduct_component(r, Word{2, 2, 1}, 1);
    CHECK(c[{Word{2}, Word{2, 1}}] == RatFn(qp(1, den) + qp(2, den)));
    CHECK(c[{Word{2}, Word{1, 2}}] == RatFn(qp(1, den) - qp(-1, den)));
    CHECK(c[{Word{1}, Word{2, 2}}] == RatFn(1));
    // (2,1) split: coefficient of (e^i)^2 (x) e^j is q + q^2 - q^-1.
    c = coproduct_component(r, Word{2, 2, 1}, 2);
    CHECK(c[{Word{2, 2}, Word{1}}] == RatFn(qp(1, den) + qp(2, den) - qp(-1, den)));
}

TEST_CASE("pairing calibration in degree 2") {
    for (int n : {2, 3}) {
        int den = 2 * n;
        PolyMatrix r = rmx::standard_vector_rmatrix(n);
        PairingMatrix pm = pairing_matrix(r, 2);
        Laurent q1 = qp(1, den);
        int m = n;
        for (int k = 1; k <= m; ++k) {
            long idx = word_index({k, k}, m);
            CHECK(pm.mat.at(int(idx), int(idx)) == RatFn(Laurent(1) + q1));
        }
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                if (i == j) continue;
                long fe = word_index({i, j}, m);
                // <f_i f_j, e^i e^j> = 1 + q - q^-1 if i > j else 1.
                RatFn expect = i > j ? RatFn(Laurent(1) + q1 - qp(-1, den)) : RatFn(1);
                CHECK(pm.mat.at(int(fe), int(fe)) == expect);
                // <f_j f_i, e^i e^j> = 1 either way.
                CHECK(pm.mat.at(int(word_index({j, i}, m)), int(fe)) == RatFn(1));
            }
    }
}

TEST_CASE("degree-1 pairing is the identity") {
    PolyMatrix r = rmx::standard_vector_rmatrix(3);
    CHECK(pairing_matrix(r, 1).mat == PolyMatrix::identity(3));
}

TEST_CASE("degree-2 radicals are empty, degree-3 matches the expected list") {
    for (int n : {2, 3}) {
        PolyMatrix r = rmx::standard_vector_rmatrix(n);
        RadicalReport d2 = radical_basis(r, 2);
        CHECK(d2.right.empty());
        CHECK(d2.left.empty());
        RadicalReport d3 = radical_basis(r, 3);
        for (const auto& v : d3.right_verdicts) CHECK(v.member);
        for (const auto& v : d3.left_verdicts) CHECK(v.member);
        if (n == 2) {
            // The exact cubic kernel is two-dimensional: besides the i > j
            // element it contains q*(e^i)^2 e^j + e^j (e^i)^2 - (1+q) e^i e^j e^i
            // for i < j. The specialization oracle pins the rank at 6.
            CHECK(d3.right.size() == 2);
            CHECK(d3.left.size() == 2);
            PairingMatrix pm = pairing_matrix(r, 3);
            CHECK(specialized_rank(pm.mat, Rational(3, 2)) == 6);
            int den = 2 * n;
            std::vector<RatFn> mirror(8);
            mirror[word_index({1, 1, 2}, 2)] = RatFn(qp(1, den));
            mirror[word_index({2, 1, 1}, 2)] = RatFn(1);
            mirror[word_index({1, 2, 1}, 2)] = RatFn(-(Laurent(1) + qp(1, den)));
            std::vector<RatFn> paired = pm.mat.apply(mirror);
            for (const auto& v : paired) CHECK(v.is_zero());
        }
    }
}

TEST_CASE("degree-3 kernel for n=3 is reported in full") {
    PolyMatrix r = rmx::standard_vector_rmatrix(3);
    RadicalReport d3 = radical_basis(r, 3);
    CHECK(d3.right_verdicts.size() == 3);  // pairs (2,1), (3,1), (3,2)
    // The kernel contains at least the expected elements; any excess is
    // surfaced by the dimension.
    CHECK(d3.right.size() >= 3);
    PairingMatrix pm = pairing_matrix(r, 3);
    CHECK(int(d3.right.size()) == 27 - specialized_rank(pm.mat, Rational(3, 2)));
}

TEST_CASE("coassociativity at component level") {
    for (int n : {2, 3}) {
        PolyMatrix r = rmx::standard_vector_rmatrix(n);
        for (int d = 2; d <= 4; ++d) {
            long dim = 1;
            for (int i = 0; i < d; ++i) dim *= n;
            for (long wi = 0; wi < dim; ++wi) {
                Word w = index_word(wi, n, d);
                // Route A: (1, d-1) then (1, d-2) on the right factor.
                std::map<std::tuple<Word, Word, Word>, RatFn> a, b;
                for (const auto& [s, c] : coproduct_component(r, w, 1))
                    for (const auto& [s2, c2] : coproduct_component(r, s.second, 1)) {
                        auto key = std::make_tuple(s.first, s2.first, s2.second);
                        auto it = a.find(key);
                        if (it == a.end())
                            a[key] = c * c2;
                        else {
                            it->second += c * c2;
                            if (it->second.is_zero()) a.erase(it);
                        }
                    }
                // Route B: (2, d-2) then (1, 1) on the left factor.
                for (const auto& [s, c] : coproduct_component(r, w, 2))
                    for (const auto& [s2, c2] : coproduct_component(r, s.first, 1)) {
                        auto key = std::make_tuple(s2.first, s2.second, s.second);
                        auto it = b.find(key);
                        if (it == b.end())
                            b[key] = c * c2;
                        else {
                            it->second += c * c2;
                            if (it->second.is_zero()) b.erase(it);
                        }
                    }
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("braid relation on degree-3 words") {
    for (int n : {2, 3}) {
        PolyMatrix r = rmx::standard_vector_rmatrix(n);
        long dim = long(n) * n * n;
        for (long wi = 0; wi < dim; ++wi) {
            WordLin w{{index_word(wi, n, 3), RatFn(1)}};
            WordLin lhs = braid_apply(r, braid_apply(r, braid_apply(r, w, 1), 2), 1);
            WordLin rhs = braid_apply(r, braid_apply(r, braid_apply(r, w, 2), 1), 2);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("flip braiding degenerates the pairing to shuffle counts") {
    // The braiding formula reads Psi(e^i (x) e^j) = sum R^{(ji)}_{(ab)}
    // e^a (x) e^b, so the plain transposition braiding corresponds to the
    // identity matrix argument.
    int m = 2;
    PolyMatrix p = PolyMatrix::identity(m * m);
    PairingMatrix d2 = pairing_matrix(p, 2);
    CHECK(d2.mat.at(int(word_index({1, 1}, m)), int(word_index({1, 1}, m))) == RatFn(2));
    CHECK(d2.mat.at(int(word_index({1, 2}, m)), int(word_index({1, 2}, m))) == RatFn(1));
    CHECK(d2.mat.at(int(word_index({2, 1}, m)), int(word_index({1, 2}, m))) == RatFn(1));
    // All entries are nonnegative integers.
    PairingMatrix d3 = pairing_matrix(p, 3);
    for (int i = 0; i < d3.mat.nrows(); ++i)
        for (const auto& [j, v] : d3.mat.row(i)) {
            (void)j;
            CHECK(v.is_laurent());
            CHECK(v.num().is_constant());
            CHECK(v.num().trailing_coeff() > 0);
            CHECK(rat_is_integer(v.num().trailing_coeff()));
        }
    // <f_k f_k f_k, e^k e^k e^k> counts all shuffles: 3! = 6.
    CHECK(d3.mat.at(0, 0) == RatFn(6));
}

TEST_CASE("radical multiples stay in the radical (degree 4 pairing)") {
    int n = 2;
    PolyMatrix r = rmx::standard_vector_rmatrix(n);
    RadicalReport d3 = radical_basis(r, 3);
    REQUIRE(d3.right.size() == 2);
    PairingMatrix m4 = pairing_matrix(r, 4);
    for (const auto& x : d3.right)
        for (int k = 1; k <= n; ++k) {
            std::vector<RatFn> left(16), rightv(16);
            for (int wi = 0; wi < 8; ++wi) {
                if (x[wi].is_zero()) continue;
                Word w = index_word(wi, n, 3);
                Word kw(w);
                kw.insert(kw.begin(), k);
                Word wk(w);
                wk.push_back(k);
                left[word_index(kw, n)] += x[wi];
                rightv[word_index(wk, n)] += x[wi];
            }
            for (const auto& y : {left, rightv}) {
                std::vector<RatFn> paired = m4.mat.apply(y);
                for (const auto& v : paired) CHECK(v.is_zero());
            }
        }
}

TEST_CASE("quadratic relations from R' = P are empty") {
    QuadraticRelations rel(PolyMatrix::flip(3));
    CHECK(rel.relation_count() == 0);
}

TEST_CASE("sym2 quadratic relations imply the corner q-commutation") {
    for (int n : {2, 3}) {
        auto b = rmx::cable_bundle(n, qrep::RepKind::sym2);
        int N = b.rep.dim, den = b.rep.den;
        QuadraticRelations rel(rmx::convert_convention(*b.Rprime));
        CHECK(rel.implies(N, N - 1, RatFn(qp(2, den)), N - 1, N));
        // Not implied with the wrong power.
        CHECK(!rel.implies(N, N - 1, RatFn(qp(1, den)), N - 1, N));
    }
}

TEST_CASE("wedge2 quadratic relations imply the corner q-commutation") {
    auto b = rmx::cable_bundle(4, qrep::RepKind::wedge2);
    int N = b.rep.dim, den = b.rep.den;
    QuadraticRelations rel(rmx::convert_convention(*b.Rprime));
    CHECK(rel.implies(N, N - 1, RatFn(qp(1, den)), N - 1, N));
    CHECK(!rel.implies(N, N - 1, RatFn(qp(2, den)), N - 1, N));
}

TEST_CASE("pairing size cap") {
    PolyMatrix r = rmx::standard_vector_rmatrix(3);
    CHECK_THROWS_AS(pairing_matrix(r, 3, 10), DomainError);
}
