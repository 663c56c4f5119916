#include "qgrow/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qgrow {

int fp_deg(const FPoly& p) {
    for (int i = int(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

FPoly fp_trim(FPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

FPoly fp_add(const FPoly& a, const FPoly& b) {
    FPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return fp_trim(r);
}

FPoly fp_sub(const FPoly& a, const FPoly& b) {
    FPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    return fp_trim(r);
}

FPoly fp_mul(const FPoly& a, const FPoly& b) {
    if (fp_deg(a) < 0 || fp_deg(b) < 0) return {};
    FPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return fp_trim(r);
}

std::pair<FPoly, FPoly> fp_divmod(const FPoly& a, const FPoly& b) {
    int db = fp_deg(b);
    if (db < 0) throw DivisionByZero("polynomial division by zero");
    FPoly rem = fp_trim(a);
    int dr = fp_deg(rem);
    if (dr < db) return {FPoly{}, rem};
    FPoly quot(dr - db + 1);
    while ((dr = fp_deg(rem)) >= db) {
        RatFn c = rem[dr] / b[db];
        quot[dr - db] = c;
        for (int i = 0; i <= db; ++i) rem[dr - db + i] -= c * b[i];
    }
    return {fp_trim(quot), fp_trim(rem)};
}

FPoly fp_monic(FPoly p) {
    p = fp_trim(p);
    int d = fp_deg(p);
    if (d < 0) return p;
    RatFn lead = p[d];
    if (lead.is_one()) return p;
    for (auto& c : p) c /= lead;
    return p;
}

FPoly fp_gcd(FPoly a, FPoly b) {
    a = fp_trim(a);
    b = fp_trim(b);
    while (fp_deg(b) >= 0) {
        FPoly r = fp_divmod(a, b).second;
        a = std::move(b);
        b = fp_monic(std::move(r));
    }
    return fp_monic(a);
}

FPoly fp_lcm(const FPoly& a, const FPoly& b) {
    if (fp_deg(a) < 0) return fp_trim(b);
    if (fp_deg(b) < 0) return fp_trim(a);
    FPoly g = fp_gcd(a, b);
    return fp_monic(fp_mul(a, fp_divmod(b, g).first));
}

RatFn fp_eval(const FPoly& p, const RatFn& x) {
    RatFn acc;
    for (int i = int(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

PolyMatrix fp_eval_matrix(const FPoly& p, const PolyMatrix& m) {
    if (m.nrows() != m.ncols()) throw DimensionMismatch("fp_eval_matrix: square matrix required");
    int n = m.nrows();
    PolyMatrix acc(n, n);
    for (int i = int(p.size()) - 1; i >= 0; --i) {
        acc = acc * m;
        if (!p[i].is_zero()) acc = acc + PolyMatrix::identity(n).scaled(p[i]);
    }
    return acc;
}

std::string fp_str(const FPoly& p) {
    std::ostringstream os;
    int d = fp_deg(p);
    if (d < 0) return "0";
    for (int i = d; i >= 0; --i) {
        if (p[i].is_zero()) continue;
        if (i < d) os << " + ";
        os << "(" << p[i].str() << ")";
        if (i > 0) os << "*x^" << i;
    }
    return os.str();
}

namespace {

// Clear row denominators: returns a Laurent-valued dense copy with the same
// kernel as m.
std::vector<std::vector<Laurent>> cleared_rows(const PolyMatrix& m) {
    std::vector<std::vector<Laurent>> a(m.nrows(), std::vector<Laurent>(m.ncols()));
    for (int i = 0; i < m.nrows(); ++i) {
        Laurent l(1);
        for (const auto& [j, v] : m.row(i)) {
            if (v.den().is_one()) continue;
            Laurent g = laurent_gcd(l, v.den());
            l = *(l * v.den()).try_divide(g);
        }
        for (const auto& [j, v] : m.row(i)) a[i][j] = v.num() * *l.try_divide(v.den());
    }
    return a;
}

struct Echelon {
    std::vector<std::vector<Laurent>> rows;  // pivot rows, in pivot-column order
    std::vector<int> pivot_cols;
};

// Fraction-free Bareiss forward elimination. Deterministic: pivots are found
// by scanning columns left to right and remaining rows top to bottom.
Echelon bareiss(std::vector<std::vector<Laurent>> a) {
    int nr = int(a.size());
    int nc = nr ? int(a[0].size()) : 0;
    Echelon e;
    std::vector<bool> used(nr, false);
    Laurent prev(1);
    for (int c = 0; c < nc; ++c) {
        int piv = -1;
        for (int r = 0; r < nr; ++r)
            if (!used[r] && !a[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        used[piv] = true;
        for (int r = 0; r < nr; ++r) {
            if (used[r]) continue;
            // One-step fraction-free update; the division by the previous
            // pivot is exact (Sylvester identity) as long as every remaining
            // row is updated at every step, including rows with a zero in
            // the pivot column.
            for (int j = c + 1; j < nc; ++j) {
                Laurent t = a[piv][c] * a[r][j] - a[r][c] * a[piv][j];
                a[r][j] = t.is_zero() ? t : *t.try_divide(prev);
            }
            a[r][c] = Laurent();
        }
        // Rows that were already pivots keep their entries; Bareiss only
        // needs the lower part for rank/kernel structure.
        prev = a[piv][c];
        e.rows.push_back(a[piv]);
        e.pivot_cols.push_back(c);
    }
    return e;
}

std::vector<RatFn> canonical_kernel_vector(std::vector<RatFn> x) {
    // Denominator-clear.
    Laurent l(1);
    for (const auto& v : x) {
        if (v.is_zero() || v.den().is_one()) continue;
        Laurent g = laurent_gcd(l, v.den());
        l = *(l * v.den()).try_divide(g);
    }
    std::vector<Laurent> y(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] = x[i].num() * *l.try_divide(x[i].den());
    // Shift the common v-power and divide out the rational content.
    bool any = false;
    long shift = 0;
    Rational content = 0;
    for (const auto& v : y) {
        if (v.is_zero()) continue;
        shift = any ? std::min(shift, v.min_exp()) : v.min_exp();
        content = rat_gcd(content, v.content());
        any = true;
    }
    if (!any) return x;
    int sign = 1;
    for (const auto& v : y)
        if (!v.is_zero()) {
            sign = v.trailing_coeff() < 0 ? -1 : 1;
            break;
        }
    Rational scale = Rational(sign) / content;
    std::vector<RatFn> out(y.size());
    for (size_t i = 0; i < y.size(); ++i)
        if (!y[i].is_zero()) out[i] = RatFn(y[i].shifted(-shift).scaled(scale));
    return out;
}

} // namespace

std::vector<std::vector<RatFn>> nullspace(const PolyMatrix& m, Side side) {
    const PolyMatrix& mm = m;
    if (side == Side::left) return nullspace(m.transpose(), Side::right);
    Echelon e = bareiss(cleared_rows(mm));
    int nc = m.ncols();
    std::vector<bool> is_pivot(nc, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<RatFn>> basis;
    for (int f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        std::vector<RatFn> x(nc);
        x[f] = RatFn(1);
        for (int r = int(e.pivot_cols.size()) - 1; r >= 0; --r) {
            int p = e.pivot_cols[r];
            if (p > f) continue;  // echelon: columns right of f beyond pivots are zero in x
            RatFn acc;
            for (int j = p + 1; j < nc; ++j)
                if (!x[j].is_zero() && !e.rows[r][j].is_zero()) acc += RatFn(e.rows[r][j]) * x[j];
            x[p] = -(acc / RatFn(e.rows[r][p]));
        }
        basis.push_back(canonical_kernel_vector(std::move(x)));
    }
    return basis;
}

FPoly minpoly_probe(const PolyMatrix& m) {
    if (m.nrows() != m.ncols()) throw DimensionMismatch("minpoly: square matrix required");
    int n = m.nrows();
    if (n == 0) return FPoly{RatFn(1)};
    FPoly acc;  // running lcm
    auto annihilates = [&](const FPoly& p) {
        return fp_deg(p) >= 0 && fp_eval_matrix(p, m).is_zero();
    };
    for (int probe = 0; probe < n; ++probe) {
        // Krylov sequence of e_probe with on-line Gaussian reduction.
        std::vector<std::vector<RatFn>> basis;       // reduced vectors
        std::vector<int> pivots;                     // their pivot indices
        std::vector<FPoly> combos;                   // expression in Krylov terms
        std::vector<RatFn> kry(n);
        kry[probe] = RatFn(1);
        FPoly ann;
        for (int step = 0;; ++step) {
            std::vector<RatFn> w = kry;
            FPoly combo(step + 1);
            combo[step] = RatFn(1);
            for (size_t b = 0; b < basis.size(); ++b) {
                if (w[pivots[b]].is_zero()) continue;
                RatFn f = w[pivots[b]] / basis[b][pivots[b]];
                for (int i = 0; i < n; ++i)
                    if (!basis[b][i].is_zero()) w[i] -= f * basis[b][i];
                FPoly scaled;
                scaled.reserve(combos[b].size());
                for (const auto& c : combos[b]) scaled.push_back(c * f);
                combo = fp_sub(combo, scaled);
            }
            int piv = -1;
            for (int i = 0; i < n; ++i)
                if (!w[i].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) {
                ann = fp_monic(combo);
                break;
            }
            basis.push_back(std::move(w));
            pivots.push_back(piv);
            combos.push_back(std::move(combo));
            kry = m.apply(kry);
        }
        FPoly next = acc.empty() ? ann : fp_lcm(acc, ann);
        bool stable = !acc.empty() && fp_deg(next) == fp_deg(acc);
        acc = std::move(next);
        if (stable && annihilates(acc)) return acc;
    }
    if (!annihilates(acc))
        throw ConventionFault("minpoly probes failed to annihilate the matrix");
    return acc;
}

std::optional<std::vector<SignedPower>> factor_signed_q_powers(const FPoly& p, int den) {
    FPoly rem = fp_monic(fp_trim(p));
    int d = fp_deg(rem);
    if (d < 0) return std::nullopt;
    std::vector<SignedPower> roots;
    while (fp_deg(rem) > 0) {
        // Candidate root valuations from the Newton polygon: all integer
        // slopes between pairs of nonzero coefficients.
        std::set<long> cands;
        std::vector<std::pair<int, long>> pts;  // (degree, v-valuation of coefficient)
        for (int i = 0; i <= fp_deg(rem); ++i) {
            if (rem[i].is_zero()) continue;
            long val = rem[i].num().min_exp() - (rem[i].den().is_one() ? 0 : rem[i].den().min_exp());
            pts.emplace_back(i, val);
        }
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) {
                long dk = pts[j].first - pts[i].first;
                long dv = pts[i].second - pts[j].second;
                if (dv % dk == 0) cands.insert(dv / dk);
            }
        bool found = false;
        for (long mexp : cands) {
            for (int sign : {1, -1}) {
                RatFn root(Laurent::monomial(sign, mexp, den));
                if (!fp_eval(rem, root).is_zero()) continue;
                // Synthetic division by (x - root).
                int dr = fp_deg(rem);
                FPoly quot(dr);
                RatFn carry;
                for (int i = dr; i >= 1; --i) {
                    carry = rem[i] + root * carry;
                    quot[i - 1] = carry;
                }
                rem = quot;
                Rational e(mexp, den);
                e.canonicalize();
                roots.push_back({sign, e});
                found = true;
                break;
            }
            if (found) break;
        }
        if (!found) return std::nullopt;
    }
    std::sort(roots.begin(), roots.end(), [](const SignedPower& a, const SignedPower& b) {
        if (a.sign != b.sign) return a.sign > b.sign;
        return a.exp > b.exp;
    });
    return roots;
}

} // namespace qgrow
