#include "qgrow/rmx.hpp"

#include <cmath>
#include <sstream>

namespace qgrow {
namespace rmx {

namespace {

int tensor_sqrt(int d2) {
    int d = int(std::lround(std::sqrt(double(d2))));
    if (d * d != d2) throw DimensionMismatch("matrix size is not a perfect square");
    return d;
}

std::string entry_name(int d, int idx) {
    return "(" + std::to_string(idx / d + 1) + "," + std::to_string(idx % d + 1) + ")";
}

} // namespace

PolyMatrix standard_vector_rmatrix(int n) {
    if (n < 2) throw DomainError("standard_vector_rmatrix: n must be >= 2");
    int den = 2 * n;
    PolyMatrix r(n * n, n * n);
    Laurent dq = Laurent::q_power(1, den) - Laurent::q_power(-1, den);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            r.set(i * n + j, i * n + j, RatFn(Laurent::q_power(i == j ? 1 : 0, den)));
            if (i < j) r.add_to(i * n + j, j * n + i, RatFn(dq));
        }
    return r;
}

PolyMatrix convert_convention(const PolyMatrix& m) {
    int d = tensor_sqrt(m.nrows());
    PolyMatrix p = PolyMatrix::flip(d);
    return p * m * p;
}

PolyMatrix universal_vector_rmatrix(int n, int max_r) {
    qrep::Rep v = qrep::vector_rep(n);
    int den = v.den;
    Laurent q1 = Laurent::q_power(1, den);
    Laurent qm1 = Laurent::q_power(-1, den);

    // Root vectors E_beta, F_beta for beta = alpha_a + ... + alpha_b by
    // q-commutator recursion.
    std::vector<std::vector<PolyMatrix>> ebeta(n), fbeta(n);
    for (int a = 1; a <= n - 1; ++a) {
        ebeta[a].resize(n);
        fbeta[a].resize(n);
        ebeta[a][a] = v.actE[a - 1];
        fbeta[a][a] = v.actF[a - 1];
        for (int b = a + 1; b <= n - 1; ++b) {
            const PolyMatrix& eb = v.actE[b - 1];
            const PolyMatrix& fb = v.actF[b - 1];
            ebeta[a][b] = eb * ebeta[a][b - 1] - (ebeta[a][b - 1] * eb).scaled(RatFn(qm1));
            fbeta[a][b] = fbeta[a][b - 1] * fb - (fb * fbeta[a][b - 1]).scaled(RatFn(q1));
        }
    }

    // Ordered product over positive roots of sum_r c_r E^r (x) F^r with
    // c_r = (1 - q^-2)^r q^(r(r+1)/2) / [r]_q!; the sum truncates by
    // nilpotency. Root order is lexicographic on (a, b); on the vector
    // representation the factors commute, the order is fixed for
    // determinism only.
    PolyMatrix acc = PolyMatrix::identity(n * n);
    RatFn one_minus_qm2 = RatFn(Laurent(1) - Laurent::q_power(-2, den));
    for (int a = 1; a <= n - 1; ++a)
        for (int b = a; b <= n - 1; ++b) {
            PolyMatrix factor(n * n, n * n);
            PolyMatrix epow = PolyMatrix::identity(n);
            PolyMatrix fpow = PolyMatrix::identity(n);
            RatFn coeff(1);
            RatFn qfact(1);  // [r]_q!
            for (int r = 0;; ++r) {
                if (r > 0) {
                    epow = epow * ebeta[a][b];
                    fpow = fpow * fbeta[a][b];
                    if (epow.is_zero() || fpow.is_zero()) break;
                    Laurent qr = Laurent::q_power(r, den) - Laurent::q_power(-r, den);
                    qfact *= RatFn(qr) / RatFn(q1 - qm1);
                    coeff = one_minus_qm2;
                    for (int t = 1; t < r; ++t) coeff *= one_minus_qm2;
                    coeff = coeff * RatFn(Laurent::q_power(frac(long(r) * (r + 1), 2), den)) / qfact;
                }
                if (max_r >= 0 && r > max_r) break;
                factor = factor + epow.kron(fpow).scaled(r == 0 ? RatFn(1) : coeff);
            }
            acc = factor * acc;
        }

    // Cartan factor: v_i (x) v_j |-> q^((mu_i, mu_j)) v_i (x) v_j.
    PolyMatrix bvv(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational e = lattice::inner(v.weights[i], v.weights[j]);
            bvv.set(i * n + j, i * n + j, RatFn(Laurent::q_power(e, den)));
        }
    return bvv * acc;
}

Laurent pair_eigenvalue(int n, qrep::RepKind sub) {
    int den = 2 * n;
    if (sub == qrep::RepKind::sym2)
        return Laurent::q_power(Rational(n - 1, n), den);
    if (sub == qrep::RepKind::wedge2)
        return -Laurent::q_power(Rational(-(n + 1), n), den);
    throw DomainError("pair_eigenvalue: pair representation required");
}

PolyMatrix pr_quoted(const RMatrixBundle& b) {
    int N = b.rep.dim;
    return PolyMatrix::flip(N) * convert_convention(b.Rvv);
}

PolyMatrix r_quoted(const RMatrixBundle& b) { return convert_convention(b.Rvv); }

RMatrixBundle vector_bundle(int n) {
    RMatrixBundle b;
    b.rep = qrep::vector_rep(n);
    PolyMatrix rstar_op = convert_convention(standard_vector_rmatrix(n));
    b.Rvv = rstar_op.scaled(RatFn(Laurent::q_power(Rational(-1, n), b.rep.den)));
    spectrum(b);
    normalize_and_rprime(b);
    return b;
}

RMatrixBundle cable_bundle(int n, qrep::RepKind sub) {
    RMatrixBundle b;
    b.rep = sub == qrep::RepKind::sym2 ? qrep::sym2_rep(n) : qrep::wedge2_rep(n);
    int den = b.rep.den;
    int N = b.rep.dim;

    PolyMatrix seed = convert_convention(standard_vector_rmatrix(n))
                          .scaled(RatFn(Laurent::q_power(Rational(-1, n), den)));
    PolyMatrix rhat = PolyMatrix::flip(n) * seed;

    // The embedded pair subspace must be an eigenspace of the braiding.
    PolyMatrix io = qrep::pair_embedding(b.rep);
    Laurent eig = pair_eigenvalue(n, sub);
    if (rhat * io != io.scaled(RatFn(eig)))
        throw ConventionFault("pair subspace is not a braiding eigenspace");

    // Columns of the embedding, as sparse vectors on V(x)V.
    std::vector<std::map<long, RatFn>> cols(N);
    for (int r = 0; r < n * n; ++r)
        for (const auto& [c, val] : io.row(r)) cols[c][r] = val;

    // Leg operators of the braid word on V(x)4.
    PolyMatrix r1 = rhat.embed_legs(n, 4, 1, 2);
    PolyMatrix r2 = rhat.embed_legs(n, 4, 2, 3);
    PolyMatrix r3 = rhat.embed_legs(n, 4, 3, 4);

    long n2 = long(n) * n;
    PolyMatrix rww(N * N, N * N);
    for (int a = 0; a < N; ++a)
        for (int c = 0; c < N; ++c) {
            // Image of w_a (x) w_c under Rhat_2 Rhat_1 Rhat_3 Rhat_2.
            std::map<long, RatFn> vec;
            for (const auto& [i1, v1] : cols[a])
                for (const auto& [i2, v2] : cols[c]) vec[i1 * n2 + i2] = v1 * v2;
            vec = r2.apply_sparse(vec);
            vec = r3.apply_sparse(vec);
            vec = r1.apply_sparse(vec);
            vec = r2.apply_sparse(vec);
            // Coordinates along W(x)W: the leading tensor component of each
            // pair basis vector has coefficient 1 and identifies it.
            std::map<long, RatFn> recon;
            for (int ap = 0; ap < N; ++ap) {
                auto [i, j] = b.rep.pairs[ap];
                long lead_a = (i - 1) * n + (j - 1);
                for (int cp = 0; cp < N; ++cp) {
                    auto [k, l] = b.rep.pairs[cp];
                    long lead_c = (k - 1) * n + (l - 1);
                    auto it = vec.find(lead_a * n2 + lead_c);
                    if (it == vec.end()) continue;
                    RatFn coeff = it->second;
                    rww.set(ap * N + cp, a * N + c, coeff);
                    for (const auto& [u1, w1] : cols[ap])
                        for (const auto& [u2, w2] : cols[cp]) {
                            RatFn add = coeff * w1 * w2;
                            auto jt = recon.find(u1 * n2 + u2);
                            if (jt == recon.end())
                                recon[u1 * n2 + u2] = add;
                            else {
                                jt->second += add;
                                if (jt->second.is_zero()) recon.erase(jt);
                            }
                        }
                }
            }
            if (recon != vec)
                throw ConventionFault("cabled braiding does not stabilize the pair subspace");
        }

    b.Rvv = PolyMatrix::flip(N) * rww;

    // Cartan-factor consistency at both corners: the lowest and highest
    // basis vectors are annihilated by every F (resp. E), so the diagonal
    // entry there is the pure weight factor.
    for (int corner : {0, N - 1}) {
        Rational e = lattice::inner(b.rep.weights[corner], b.rep.weights[corner]);
        if (b.Rvv.at(corner * N + corner, corner * N + corner) !=
            RatFn(Laurent::q_power(e, den)))
            throw ConventionFault("corner diagonal entry disagrees with the weight factor");
    }

    spectrum(b);
    normalize_and_rprime(b);
    return b;
}

CheckResult check_qybe(const PolyMatrix& r, Mode mode) {
    int d = tensor_sqrt(r.nrows());
    if (r.ncols() != r.nrows()) throw DimensionMismatch("check_qybe: square matrix required");
    PolyMatrix r12 = r.embed_legs(d, 3, 1, 2);
    PolyMatrix r13 = r.embed_legs(d, 3, 1, 3);
    PolyMatrix r23 = r.embed_legs(d, 3, 2, 3);
    CheckResult res;
    if (mode == Mode::exhaustive) {
        if (d > 8) throw DomainError("exhaustive mode allowed only for d <= 8");
        PolyMatrix lhs = r12 * (r13 * r23);
        PolyMatrix rhs = r23 * (r13 * r12);
        if (auto diff = lhs.first_difference(rhs)) {
            res.pass = false;
            std::ostringstream os;
            os << "mismatch at row " << diff->first << " col " << diff->second << ": "
               << lhs.at(diff->first, diff->second).str() << " vs "
               << rhs.at(diff->first, diff->second).str();
            res.detail = os.str();
        } else {
            res.pass = true;
        }
        return res;
    }
    long dim = long(d) * d * d;
    long stride = std::max(1L, dim / 16);
    res.pass = true;
    for (int k = 0; k < 16; ++k) {
        long idx = k * stride;
        if (idx >= dim) break;
        std::map<long, RatFn> e{{idx, RatFn(1)}};
        auto lhs = r12.apply_sparse(r13.apply_sparse(r23.apply_sparse(e)));
        auto rhs = r23.apply_sparse(r13.apply_sparse(r12.apply_sparse(e)));
        if (lhs != rhs) {
            res.pass = false;
            res.detail = "probe " + std::to_string(idx) + " separates the two sides";
            break;
        }
    }
    return res;
}

void spectrum(RMatrixBundle& b) {
    int N = b.rep.dim;
    PolyMatrix pr = PolyMatrix::flip(N) * b.Rvv;
    FPoly mp = minpoly_probe(pr);
    auto roots = factor_signed_q_powers(mp, b.rep.den);
    if (!roots)
        throw ConventionFault("minimal polynomial does not split into signed q-powers: " +
                              fp_str(mp));
    b.eigenvalues = *roots;
    PolyMatrix prt = pr.transpose();
    if (auto diff = pr.first_difference(prt)) {
        b.pr_symmetric = false;
        b.asym_witness = diff;
    } else {
        b.pr_symmetric = true;
        b.asym_witness.reset();
    }
}

void normalize_and_rprime(RMatrixBundle& b) {
    int den = b.rep.den;
    int n = b.rep.n;
    if (b.rep.kind == qrep::RepKind::vector) {
        // Hecke normalization: Rnorm is the standard matrix, with braiding
        // eigenvalues q and -q^-1; the quadratic relations stay free.
        b.lambda = Laurent::q_power(Rational(-1, n), den);
        b.Rnorm = b.Rvv.scaled(RatFn(Laurent::q_power(Rational(1, n), den)));
        b.Rprime.reset();
        std::vector<SignedPower> expect{{1, Rational(1) - Rational(1, n)},
                                        {-1, Rational(-1) - Rational(1, n)}};
        if (b.eigenvalues != expect)
            throw ConventionFault("vector braiding does not satisfy the quadratic relation");
        return;
    }
    std::vector<SignedPower> neg;
    for (const auto& ev : b.eigenvalues)
        if (ev.sign < 0) neg.push_back(ev);
    if (neg.size() != 1)
        throw DomainError("normalization needs exactly one negative eigenvalue, found " +
                          std::to_string(neg.size()));
    b.lambda = Laurent::q_power(neg[0].exp, den);
    RatFn linv(Laurent::q_power(-neg[0].exp, den));
    b.Rnorm = b.Rvv.scaled(linv);
    int N = b.rep.dim;
    PolyMatrix p = PolyMatrix::flip(N);
    PolyMatrix prn = p * b.Rnorm;
    PolyMatrix prod = PolyMatrix::identity(N * N);
    for (const auto& ev : b.eigenvalues) {
        if (ev.sign < 0) continue;
        RatFn x(Laurent::q_power(ev.exp - neg[0].exp, den).scaled(ev.sign));
        prod = prod * (prn - PolyMatrix::identity(N * N).scaled(x));
    }
    b.Rprime = p + p * prod;
}

CheckResult check_rprime_conditions(const PolyMatrix& r, const PolyMatrix& rp, Mode mode) {
    if (r.nrows() != rp.nrows() || r.ncols() != rp.ncols())
        throw DimensionMismatch("check_rprime_conditions: dimension mismatch");
    int d = tensor_sqrt(r.nrows());
    PolyMatrix p = PolyMatrix::flip(d);
    CheckResult res;
    res.pass = true;

    // (ii) quadratic annihilation.
    PolyMatrix pr = p * r, prp = p * rp;
    int d2 = d * d;
    PolyMatrix id = PolyMatrix::identity(d2);
    if (!((pr + id) * (prp - id)).is_zero()) {
        res.pass = false;
        res.detail = "(ii) (PR+1)(PR'-1) != 0";
        return res;
    }

    // (iii) 21/12 exchange: R21 R'12 = R'21 R12 with X21 = P X P.
    if (p * r * p * rp != p * rp * p * r) {
        res.pass = false;
        res.detail = "(iii) R21 R'12 != R'21 R12";
        return res;
    }

    // (i) both mixed Yang-Baxter identities.
    PolyMatrix r12 = r.embed_legs(d, 3, 1, 2);
    PolyMatrix r13 = r.embed_legs(d, 3, 1, 3);
    PolyMatrix r23 = r.embed_legs(d, 3, 2, 3);
    PolyMatrix rp12 = rp.embed_legs(d, 3, 1, 2);
    PolyMatrix rp23 = rp.embed_legs(d, 3, 2, 3);
    auto check_pair = [&](const PolyMatrix& a1, const PolyMatrix& a2, const PolyMatrix& a3,
                          const PolyMatrix& b1, const PolyMatrix& b2, const PolyMatrix& b3,
                          const std::string& name) {
        if (!res.pass) return;
        if (mode == Mode::exhaustive) {
            if (d > 8) throw DomainError("exhaustive mode allowed only for d <= 8");
            if (a1 * (a2 * a3) != b1 * (b2 * b3)) {
                res.pass = false;
                res.detail = name + " fails";
            }
            return;
        }
        long dim = long(d) * d * d;
        long stride = std::max(1L, dim / 16);
        for (int k = 0; k < 16; ++k) {
            long idx = k * stride;
            if (idx >= dim) break;
            std::map<long, RatFn> e{{idx, RatFn(1)}};
            auto lhs = a1.apply_sparse(a2.apply_sparse(a3.apply_sparse(e)));
            auto rhs = b1.apply_sparse(b2.apply_sparse(b3.apply_sparse(e)));
            if (lhs != rhs) {
                res.pass = false;
                res.detail = name + " fails at probe " + std::to_string(idx);
                return;
            }
        }
    };
    check_pair(r12, r13, rp23, rp23, r13, r12, "(i) R12 R13 R'23 = R'23 R13 R12");
    check_pair(r23, r13, rp12, rp12, r13, r23, "(i) R23 R13 R'12 = R'12 R13 R23");
    return res;
}

PolyMatrix rmatrix_inverse(const PolyMatrix& r) {
    int d2 = r.nrows();
    int d = tensor_sqrt(d2);
    PolyMatrix p = PolyMatrix::flip(d);
    PolyMatrix pr = p * r;
    FPoly mp = minpoly_probe(pr);
    if (mp.empty() || mp[0].is_zero()) throw DomainError("matrix is singular");
    // x * (-(c1 + c2 x + ...)/c0) = 1 mod minpoly.
    PolyMatrix acc(d2, d2);
    PolyMatrix id = PolyMatrix::identity(d2);
    RatFn c0inv = mp[0].inverse();
    for (int k = int(mp.size()) - 1; k >= 1; --k) {
        acc = acc * pr;
        if (!mp[k].is_zero()) acc = acc + id.scaled(mp[k]);
    }
    return acc.scaled(-c0inv) * p;
}

} // namespace rmx
} // namespace qgrow
