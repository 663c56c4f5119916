#include "qgrow/grow.hpp"

#include <sstream>

namespace qgrow {
namespace grow {

using lattice::Series;
using lattice::Weight;
using qrep::Rep;
using qrep::RepKind;
using rmx::RMatrixBundle;

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::add(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass, detail});
}

void Report::merge(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
}

Laurent normalization_constant(const rmx::RMatrixBundle& b) {
    std::vector<SignedPower> neg;
    for (const auto& ev : b.eigenvalues)
        if (ev.sign < 0) neg.push_back(ev);
    if (b.rep.kind == RepKind::vector) {
        // The vector branch fixes lambda through the Hecke normalization;
        // the stored value is authoritative and unique.
        return b.lambda;
    }
    if (neg.size() != 1)
        throw DomainError("normalization constant needs a unique negative eigenvalue");
    Laurent l = Laurent::q_power(neg[0].exp, b.rep.den);
    if (l != b.lambda) throw ConventionFault("stored lambda disagrees with the spectrum");
    return l;
}

namespace {

Laurent dq(int den) { return Laurent::q_power(1, den) - Laurent::q_power(-1, den); }
Laurent qq(int den) { return Laurent::q_power(1, den) + Laurent::q_power(-1, den); }

Rep make_rep(RepKind kind, int n) {
    switch (kind) {
    case RepKind::vector: return qrep::vector_rep(n);
    case RepKind::sym2: return qrep::sym2_rep(n);
    case RepKind::wedge2: return qrep::wedge2_rep(n);
    }
    throw DomainError("unknown representation");
}

RMatrixBundle make_bundle(RepKind kind, int n) {
    return kind == RepKind::vector ? rmx::vector_bundle(n) : rmx::cable_bundle(n, kind);
}

Weight negated(const Weight& w) { return w.scaled(-1); }

} // namespace

std::vector<MPlusEntry> mplus_closed_form(RepKind kind, int n) {
    Rep rep = make_rep(kind, n);
    int den = rep.den;
    std::vector<MPlusEntry> out;
    auto diag = [&](int i) {
        MPlusEntry e;
        e.row = e.col = i;
        e.prefactor = Laurent(1);
        e.kpart = negated(rep.weights[i - 1]);
        out.push_back(e);
    };
    // Minor-diagonal entries reference a diagonal K-string: the column's
    // for the string entries, the row's for the wedge2 off-string entry.
    auto minor = [&](int row, int col, const Laurent& pref, int efac, int diag_ref,
                     const Weight& extra) {
        MPlusEntry e;
        e.row = row;
        e.col = col;
        e.prefactor = pref;
        e.efactor = efac;
        e.kpart = negated(rep.weights[diag_ref - 1]) + extra;
        out.push_back(e);
    };
    Weight zero;
    zero.coords.assign(n - 1, 0);
    switch (kind) {
    case RepKind::vector:
        for (int i = 1; i <= n; ++i) diag(i);
        for (int i = 1; i <= n - 1; ++i) minor(i, i + 1, dq(den), i, i + 1, zero);
        break;
    case RepKind::sym2: {
        for (int i = 1; i <= n; ++i) diag(i);
        diag(rep.dim);
        // (m+)^1_2 carries the (q + q^-1) from the doubled string endpoint.
        minor(1, 2, qq(den) * dq(den), 1, 2, zero);
        for (int j = 3; j <= n; ++j) minor(j - 1, j, dq(den), j - 1, j, zero);
        break;
    }
    case RepKind::wedge2: {
        for (int i = 1; i <= n - 1; ++i) diag(i);
        diag(rep.dim);
        for (int i = 2; i <= n - 1; ++i) minor(i - 1, i, dq(den), i, i, zero);
        // The off-string entry (m+)^{n-1}_{2n-3} = (q - q^-1) E_1 K_1^-1 (m+)^{n-1}_{n-1}.
        minor(n - 1, 2 * n - 3, dq(den), 1, n - 1, negated(lattice::simple_root(n, 1)));
        break;
    }
    }
    return out;
}

namespace {

PolyMatrix evaluate_entry(const Rep& rep, const MPlusEntry& e, int k_sign, bool minus_side) {
    PolyMatrix m = qrep::torus_weight_action(rep, e.kpart, k_sign);
    if (e.efactor) {
        const PolyMatrix& gen =
            minus_side ? rep.actF[*e.efactor - 1] : rep.actE[*e.efactor - 1];
        // m+ entries carry the E factor on the left of the K string; the
        // mirrored m- entries carry the K string on the left of F.
        m = minus_side ? m * gen : gen * m;
    }
    return m.scaled(RatFn(e.prefactor));
}

MPlusEntry mirror_entry(const Rep& rep, const MPlusEntry& e) {
    // m- mirror: transposed position, negated K exponents, F in place of E.
    // Relative to the K-string-then-F evaluation order, the minor prefactor
    // is -(q - q^-1), shifted by half the pairing of any extra K against the
    // generator root (the wedge2 off-string entry carries an extra K_1^-1).
    MPlusEntry f;
    f.row = e.col;
    f.col = e.row;
    f.kpart = e.kpart.scaled(-1);
    if (e.efactor) {
        int den = rep.den;
        f.efactor = e.efactor;
        // String entries (row = col-1) reference the column diagonal; the
        // off-string entry references the row diagonal plus a -alpha_1 shift.
        Weight extra = e.kpart + rep.weights[e.row == e.col - 1 ? e.col - 1 : e.row - 1];
        Rational shift =
            lattice::inner(extra, lattice::simple_root(rep.n, *e.efactor)) / 2;
        f.prefactor = -(dq(den) * Laurent::q_power(shift, den));
    } else {
        f.prefactor = Laurent(1);
    }
    return f;
}

} // namespace

Report verify_mplus_pairing(const RMatrixBundle& b, const std::vector<MPlusEntry>& entries,
                            PairingConvention* recorded) {
    const Rep& rep = b.rep;
    int N = rep.dim;
    PolyMatrix r_op = b.Rvv;
    PolyMatrix r_mj = rmx::convert_convention(b.Rvv);
    PolyMatrix rinv_op = rmx::rmatrix_inverse(b.Rvv);
    PolyMatrix rinv_mj = rmx::convert_convention(rinv_op);

    auto plus_expected = [&](const PairingConvention& cv, int i, int j, int k, int l) {
        // <(m+)^i_j, t^k_l> = Rvv^{ik}_{jl} in the quoted layout.
        const PolyMatrix& r = cv.quoted_layout ? r_mj : r_op;
        return r.at((i - 1) * N + (k - 1), (j - 1) * N + (l - 1));
    };
    auto minus_expected = [&](const PairingConvention& cv, int i, int j, int k, int l) {
        // <(m-)^i_j, t^k_l> = (Rvv^-1)^{ki}_{lj} in the quoted layout.
        const PolyMatrix& r = cv.quoted_layout ? rinv_mj : rinv_op;
        return r.at((k - 1) * N + (i - 1), (l - 1) * N + (j - 1));
    };

    auto try_convention = [&](const PairingConvention& cv, Report* rep_out) {
        bool ok = true;
        for (const auto& e : entries) {
            PolyMatrix val = evaluate_entry(rep, e, cv.k_sign, false);
            bool epass = true;
            std::string detail;
            for (int k = 1; k <= N && epass; ++k)
                for (int l = 1; l <= N; ++l) {
                    RatFn expect = plus_expected(cv, e.row, e.col, k, l);
                    if (val.at(k - 1, l - 1) != expect) {
                        epass = false;
                        std::ostringstream os;
                        os << "(m+)^" << e.row << "_" << e.col << " at (" << k << "," << l
                           << "): " << val.at(k - 1, l - 1).str() << " vs " << expect.str();
                        detail = os.str();
                        break;
                    }
                }
            if (rep_out)
                rep_out->add("m+ entry (" + std::to_string(e.row) + "," +
                                 std::to_string(e.col) + ") pairing",
                             epass, detail);
            ok = ok && epass;

            MPlusEntry me = mirror_entry(rep, e);
            PolyMatrix mval = evaluate_entry(rep, me, cv.k_sign, true);
            bool mpass = true;
            detail.clear();
            for (int k = 1; k <= N && mpass; ++k)
                for (int l = 1; l <= N; ++l) {
                    RatFn expect = minus_expected(cv, me.row, me.col, k, l);
                    if (mval.at(k - 1, l - 1) != expect) {
                        mpass = false;
                        std::ostringstream os;
                        os << "(m-)^" << me.row << "_" << me.col << " at (" << k << "," << l
                           << "): " << mval.at(k - 1, l - 1).str() << " vs " << expect.str();
                        detail = os.str();
                        break;
                    }
                }
            if (rep_out)
                rep_out->add("m- entry (" + std::to_string(me.row) + "," +
                                 std::to_string(me.col) + ") pairing",
                             mpass, detail);
            ok = ok && mpass;
        }
        return ok;
    };

    // A single global convention must satisfy every entry at once.
    std::vector<PairingConvention> candidates{
        {-1, true}, {+1, true}, {-1, false}, {+1, false}};
    for (const auto& cv : candidates) {
        if (!try_convention(cv, nullptr)) continue;
        Report out;
        std::ostringstream os;
        os << "k_sign=" << cv.k_sign << ", layout=" << (cv.quoted_layout ? "quoted" : "operator");
        out.add("pairing convention recorded", true, os.str());
        try_convention(cv, &out);
        // Counit sanity: diagonal entries evaluate to pure q-power diagonals.
        bool counit = true;
        for (const auto& e : entries) {
            if (e.efactor) continue;
            PolyMatrix val = evaluate_entry(rep, e, cv.k_sign, false);
            for (int k = 0; k < N && counit; ++k) {
                RatFn v = val.at(k, k);
                counit = v.is_laurent() && v.num().as_signed_q_power().has_value() &&
                         v.num().as_signed_q_power()->first == 1;
            }
        }
        out.add("counit sanity: diagonal entries are pure q-powers", counit);
        if (recorded) *recorded = cv;
        return out;
    }
    Report out;
    out.add("pairing convention recorded", false,
            "no single convention satisfies all entries");
    try_convention(candidates[0], &out);
    return out;
}

NewRootData new_root_data(RepKind kind, int n, const Laurent& lambda) {
    Rep rep = make_rep(kind, n);
    auto entries = mplus_closed_form(kind, n);
    NewRootData d;
    bool found = false;
    for (const auto& e : entries)
        if (e.row == rep.dim && e.col == rep.dim) {
            d.mu = e.kpart;
            found = true;
        }
    if (!found) throw DomainError("missing last diagonal entry");
    auto sp = lambda.as_signed_q_power();
    if (!sp || sp->first != 1 || sp->second > 0)
        throw DomainError("lambda is not of the form q^(-s) with s >= 0");
    d.vnorm = -sp->second;
    Weight v;
    v.coords.assign(n - 1, 0);
    v.central = d.vnorm;
    d.alphaN = d.mu + v;
    for (int i = 1; i <= n - 1; ++i)
        d.inner_alpha.push_back(lattice::inner(d.mu, lattice::simple_root(n, i)));
    d.inner_nn = lattice::inner(d.mu, d.mu) + d.vnorm;
    return d;
}

GrowthResult extended_cartan(RepKind kind, int n) {
    GrowthResult g;
    g.rep = kind;
    g.n = n;
    g.base = lattice::type_a_datum(n - 1);
    RMatrixBundle b = make_bundle(kind, n);
    g.lambda = normalization_constant(b);
    g.root = new_root_data(kind, n, g.lambda);
    int N = b.rep.dim;

    // Route A: Prop-style formulas from the m+ readout.
    std::vector<Rational> a_in(n), a_ni(n);  // column and row entries, i = 1..n-1
    for (int i = 1; i <= n - 1; ++i) {
        a_in[i - 1] = g.root.inner_alpha[i - 1];  // 2(alpha_i, mu)/(alpha_i, alpha_i), d_i = 1
        a_ni[i - 1] = 2 * g.root.inner_alpha[i - 1] / g.root.inner_nn;
    }

    // Route B: exponents read from the R-matrix and the representation.
    // Corner diagonal: lambda^-1 Rvv^{pp}_{pp} = q^((alpha_n, alpha_n)).
    RatFn corner = b.Rvv.at((N - 1) * N + (N - 1), (N - 1) * N + (N - 1)) *
                   RatFn(g.lambda).inverse();
    std::optional<std::pair<int, Rational>> csp;
    if (corner.is_laurent()) csp = corner.num().as_signed_q_power();
    if (!csp || csp->first != 1)
        throw ConventionFault("corner entry of Rvv is not a positive q-power");
    Rational nn_b = csp->second;
    std::vector<Rational> s_b(n - 1);
    const Weight& top = b.rep.weights[N - 1];
    for (int i = 1; i <= n - 1; ++i)
        s_b[i - 1] = lattice::inner(lattice::simple_root(n, i).scaled(-1), top);

    bool routes_agree = nn_b == g.root.inner_nn;
    for (int i = 0; i < n - 1; ++i) routes_agree = routes_agree && s_b[i] == a_in[i];
    if (!routes_agree) {
        std::ostringstream os;
        os << "route A vs route B: (alpha_n, alpha_n) " << rat_str(g.root.inner_nn) << " vs "
           << rat_str(nn_b);
        throw ConventionFault("extended Cartan routes disagree: " + os.str());
    }

    // Assemble and check integrality.
    g.ext_cartan.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) g.ext_cartan[i][j] = g.base.cartan[i][j];
    g.ext_cartan[n - 1][n - 1] = 2;
    for (int i = 0; i < n - 1; ++i) {
        if (!rat_is_integer(a_in[i]) || !rat_is_integer(a_ni[i]))
            throw ConventionFault("extended Cartan entries are not integers");
        g.ext_cartan[i][n - 1] = long(a_in[i].get_num().get_si());
        g.ext_cartan[n - 1][i] = long(a_ni[i].get_num().get_si());
    }

    g.report.add("route A equals route B", true);
    g.series = kind == RepKind::vector ? Series::B
               : kind == RepKind::sym2 ? Series::C
                                       : Series::D;
    bool ref_ok = g.ext_cartan == lattice::reference_cartan(g.series, n);
    g.report.add("matches the reference " + lattice::series_name(g.series) +
                     std::to_string(n) + " Cartan matrix",
                 ref_ok);

    // Symmetrizability with d_i = (alpha_i, alpha_i)/2 from the root data.
    std::vector<Rational> d(n, 1);
    d[n - 1] = g.root.inner_nn / 2;
    bool sym = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            sym = sym && d[i] * g.ext_cartan[i][j] == d[j] * g.ext_cartan[j][i];
    g.report.add("symmetrizable with d_i from the root data", sym);

    // Lambda consistency: (v, v) = -deg_q(lambda) and the corner exponent
    // reproduces (mu, mu) + (v, v).
    auto lsp = g.lambda.as_signed_q_power();
    bool lam_ok = lsp && lsp->first == 1 && g.root.vnorm == -lsp->second && nn_b == g.root.inner_nn;
    g.report.add("lambda consistency (v,v) = -deg_q(lambda)", lam_ok);

    PairingConvention cv;
    Report pairing = verify_mplus_pairing(b, mplus_closed_form(kind, n), &cv);
    g.report.add("m+/m- pairing verification", pairing.all_pass(),
                 pairing.all_pass() ? "" : "see detailed pairing report");
    return g;
}

Report relation_instances(RepKind kind, int n) {
    Report rep;
    RMatrixBundle b = make_bundle(kind, n);
    int N = b.rep.dim;
    int den = b.rep.den;
    GrowthResult g = extended_cartan(kind, n);

    // (a) E_n K_n exponent: lambda^-1 Rvv^{pp}_{pp} = q^((alpha_n, alpha_n)),
    // with the series values q, q^4, q^2.
    Rational expect_nn = kind == RepKind::vector ? Rational(1)
                         : kind == RepKind::sym2 ? Rational(4)
                                                 : Rational(2);
    RatFn corner =
        b.Rvv.at((N - 1) * N + (N - 1), (N - 1) * N + (N - 1)) * RatFn(b.lambda).inverse();
    bool a_ok = corner == RatFn(Laurent::q_power(expect_nn, den)) && g.root.inner_nn == expect_nn;
    rep.add("(a) E_n K_n exponent q^" + rat_str(expect_nn), a_ok,
            "corner value " + corner.str());

    // (b) K_n E_i exponent table q^((mu_{i..} - mu_{..}, mu_top)).
    const lattice::Weight& top = b.rep.weights[N - 1];
    bool b_ok = true;
    std::ostringstream bdetail;
    for (int i = 1; i <= n - 1; ++i) {
        Rational s = lattice::inner(lattice::simple_root(n, i).scaled(-1), top);
        Rational expect = 0;
        if (kind == RepKind::vector && i == n - 1) expect = -1;
        if (kind == RepKind::sym2 && i == n - 1) expect = -2;
        if (kind == RepKind::wedge2 && i == n - 2) expect = -1;
        if (s != expect) {
            b_ok = false;
            bdetail << "i=" << i << ": q^" << rat_str(s) << " vs q^" << rat_str(expect) << "; ";
        }
    }
    rep.add("(b) K_n E_i exponent table", b_ok, bdetail.str());

    // (c) corner quadratic instance from R'.
    if (kind == RepKind::vector) {
        rep.add("(c) quadratic instance (free braided algebra, none)", !b.Rprime.has_value());
    } else {
        nichols::QuadraticRelations qr(rmx::convert_convention(*b.Rprime));
        Rational half = g.root.inner_nn / 2;
        bool c_ok = qr.implies(N, N - 1, RatFn(Laurent::q_power(half, den)), N - 1, N);
        rep.add("(c) e^p e^{p-1} = q^" + rat_str(half) + " e^{p-1} e^p", c_ok);
    }

    // (d) q-Serre degrees 1 - a_ij against the displayed relations.
    int other = kind == RepKind::wedge2 ? n - 2 : n - 1;  // the attached node
    long deg_new = 1 - g.ext_cartan[n - 1][other - 1];    // degree in E_n
    long deg_old = 1 - g.ext_cartan[other - 1][n - 1];    // degree in E_other
    long expect_new = kind == RepKind::vector ? 3 : 2;
    long expect_old = kind == RepKind::sym2 ? 3 : 2;
    bool d_ok = deg_new == expect_new && deg_old == expect_old;
    std::string qstar = kind == RepKind::vector ? "q^(1/2)"
                        : kind == RepKind::sym2 ? "q^2"
                                                : "q";
    rep.add("(d) q-Serre degrees (E_n: " + std::to_string(expect_new) +
                ", E_" + std::to_string(other) + ": " + std::to_string(expect_old) +
                "), q_* = " + qstar,
            d_ok);
    return rep;
}

Tree build_tree(int max_rank) {
    if (max_rank < 1) throw DomainError("tree needs max rank >= 1");
    Tree t;
    t.max_rank = max_rank;
    auto node = [&](Series s, int r) { return lattice::series_name(s) + std::to_string(r); };
    for (int r = 1; r <= max_rank; ++r) t.nodes.push_back(node(Series::A, r));
    for (int r = 2; r <= max_rank; ++r) t.nodes.push_back(node(Series::B, r));
    for (int r = 2; r <= max_rank; ++r) t.nodes.push_back(node(Series::C, r));
    for (int r = 4; r <= max_rank; ++r) t.nodes.push_back(node(Series::D, r));
    // Rank-induction edges, cited from the companion construction.
    for (int r = 1; r + 1 <= max_rank; ++r) {
        TreeEdge e;
        e.from = node(Series::A, r);
        e.to = node(Series::A, r + 1);
        e.rep = RepKind::vector;
        e.verified = false;
        t.edges.push_back(e);
    }
    auto grown = [&](RepKind kind, Series s, int n) {
        GrowthResult g = extended_cartan(kind, n);
        TreeEdge e;
        e.from = node(Series::A, n - 1);
        e.to = node(s, n);
        e.rep = kind;
        e.lambda = g.lambda;
        e.verified = g.report.all_pass() && g.ext_cartan == lattice::reference_cartan(s, n);
        t.edges.push_back(e);
    };
    for (int n = 2; n <= max_rank; ++n) grown(RepKind::vector, Series::B, n);
    for (int n = 2; n <= max_rank; ++n) grown(RepKind::sym2, Series::C, n);
    for (int n = 4; n <= max_rank; ++n) grown(RepKind::wedge2, Series::D, n);
    return t;
}

std::string growth_series_name(const GrowthResult& g) {
    return lattice::series_name(g.series) + std::to_string(g.n);
}

} // namespace grow
} // namespace qgrow
