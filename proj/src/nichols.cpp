#include "qgrow/nichols.hpp"

#include <cmath>
#include <sstream>

namespace qgrow {
namespace nichols {

long word_index(const Word& w, int m) {
    long idx = 0;
    for (int letter : w) {
        if (letter < 1 || letter > m) throw DomainError("letter out of alphabet range");
        idx = idx * m + (letter - 1);
    }
    return idx;
}

Word index_word(long idx, int m, int degree) {
    Word w(degree);
    for (int p = degree - 1; p >= 0; --p) {
        w[p] = int(idx % m) + 1;
        idx /= m;
    }
    return w;
}

std::string word_str(const Word& w, const char* gen) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << "*";
        os << gen << w[i];
    }
    return os.str();
}

void add_term(WordLin& acc, const Word& w, const RatFn& c) {
    if (c.is_zero()) return;
    auto it = acc.find(w);
    if (it == acc.end()) {
        acc[w] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

void add_term(SplitLin& acc, const Split& s, const RatFn& c) {
    if (c.is_zero()) return;
    auto it = acc.find(s);
    if (it == acc.end()) {
        acc[s] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

WordLin braid_apply(const PolyMatrix& rmaj, const WordLin& lin, int pos) {
    int m = int(std::lround(std::sqrt(double(rmaj.nrows()))));
    if (m * m != rmaj.nrows()) throw DimensionMismatch("braiding matrix must be m^2 square");
    WordLin out;
    for (const auto& [w, c] : lin) {
        if (pos < 1 || pos + 1 > int(w.size())) throw DomainError("braid position out of range");
        int i = w[pos - 1], j = w[pos];
        // Psi(e^i (x) e^j) = sum R^{(ji)}_{(ab)} e^a (x) e^b.
        int row = (j - 1) * m + (i - 1);
        for (const auto& [col, val] : rmaj.row(row)) {
            Word nw(w);
            nw[pos - 1] = col / m + 1;
            nw[pos] = col % m + 1;
            add_term(out, nw, c * val);
        }
    }
    return out;
}

namespace {

// Psi_{V, X}: braid the first letter of each word through the next k
// positions (to the end), as the composite of adjacent braidings at
// positions 1, 2, ..., k.
WordLin braid_first_past(const PolyMatrix& rmaj, const Word& w, int k) {
    WordLin cur{{w, RatFn(1)}};
    for (int p = 1; p <= k; ++p) cur = braid_apply(rmaj, cur, p);
    return cur;
}

struct CoproductCache {
    const PolyMatrix& rmaj;
    std::map<std::pair<Word, int>, SplitLin> memo;

    const SplitLin& component(const Word& w, int k) {
        auto key = std::make_pair(w, k);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        SplitLin out;
        int d = int(w.size());
        if (k < 0 || k > d) {
            // empty
        } else if (d == 0) {
            out[{Word{}, Word{}}] = RatFn(1);
        } else {
            int head = w[0];
            Word tail(w.begin() + 1, w.end());
            // (e^head (x) 1) * component(tail, k-1)
            for (const auto& [split, c] : component(tail, k - 1)) {
                Word x(split.first);
                x.insert(x.begin(), head);
                add_term(out, {x, split.second}, c);
            }
            // (1 (x) e^head) * component(tail, k): braid e^head past the
            // left factor, then multiply into the right factor.
            if (k <= d - 1) {
                // Memo safety: take a copy, component() may rehash the map.
                SplitLin rhs = component(tail, k);
                for (const auto& [split, c] : rhs) {
                    Word hx(split.first);
                    hx.insert(hx.begin(), head);
                    WordLin moved = braid_first_past(rmaj, hx, k);
                    for (const auto& [u, cu] : moved) {
                        Word x(u.begin(), u.begin() + k);
                        Word y(split.second);
                        y.insert(y.begin(), u[k]);
                        add_term(out, {x, y}, c * cu);
                    }
                }
            }
        }
        return memo[key] = std::move(out);
    }
};

long ipow(int m, int d) {
    long r = 1;
    for (int i = 0; i < d; ++i) r *= m;
    return r;
}

} // namespace

SplitLin coproduct_component(const PolyMatrix& rmaj, const Word& w, int k) {
    if (k < 0 || k > int(w.size())) throw DomainError("invalid coproduct split");
    CoproductCache cache{rmaj, {}};
    return cache.component(w, k);
}

PairingMatrix pairing_matrix(const PolyMatrix& rmaj, int degree, long size_cap) {
    if (degree < 1) throw DomainError("pairing degree must be >= 1");
    int m = int(std::lround(std::sqrt(double(rmaj.nrows()))));
    if (ipow(m, degree) > size_cap)
        throw DomainError("pairing matrix size " + std::to_string(ipow(m, degree)) +
                          " exceeds the size cap " + std::to_string(size_cap));
    PairingMatrix pm;
    pm.degree = degree;
    pm.alphabet = m;
    PolyMatrix prev = PolyMatrix::identity(m);
    CoproductCache cache{rmaj, {}};
    for (int d = 2; d <= degree; ++d) {
        long dim = ipow(m, d), sub = ipow(m, d - 1);
        PolyMatrix prev_t = prev.transpose();  // column access of M_{d-1}
        PolyMatrix cur{int(dim), int(dim)};
        for (long col = 0; col < dim; ++col) {
            Word we = index_word(col, m, d);
            for (const auto& [split, c] : cache.component(we, 1)) {
                int j = split.first[0];
                long rest = word_index(split.second, m);
                for (const auto& [wf, val] : prev_t.row(int(rest)))
                    cur.add_to(int((j - 1) * sub + wf), int(col), c * val);
            }
        }
        prev = std::move(cur);
    }
    pm.mat = degree == 1 ? PolyMatrix::identity(m) : prev;
    return pm;
}

std::vector<RatFn> serre_element_right(int m, int i, int j, int den) {
    std::vector<RatFn> x(ipow(m, 3));
    Laurent q1 = Laurent::q_power(1, den);
    x[word_index({i, i, j}, m)] = RatFn(1);
    x[word_index({j, i, i}, m)] = RatFn(q1);
    x[word_index({i, j, i}, m)] = RatFn(-(Laurent(1) + q1));
    return x;
}

std::vector<RatFn> serre_element_left(int m, int i, int j, int den) {
    std::vector<RatFn> x(ipow(m, 3));
    Laurent qm1 = Laurent::q_power(-1, den);
    x[word_index({j, i, i}, m)] = RatFn(1);
    x[word_index({i, i, j}, m)] = RatFn(qm1);
    x[word_index({i, j, i}, m)] = RatFn(-(Laurent(1) + qm1));
    return x;
}

namespace {

bool in_span(const std::vector<std::vector<RatFn>>& basis, std::vector<RatFn> x) {
    // Echelonize a copy of the basis, then reduce x against it.
    std::vector<std::vector<RatFn>> rows;
    std::vector<int> pivots;
    auto reduce = [&](std::vector<RatFn>& v) {
        for (size_t b = 0; b < rows.size(); ++b) {
            if (v[pivots[b]].is_zero()) continue;
            RatFn f = v[pivots[b]] / rows[b][pivots[b]];
            for (size_t i = 0; i < v.size(); ++i)
                if (!rows[b][i].is_zero()) v[i] -= f * rows[b][i];
        }
    };
    for (const auto& src : basis) {
        std::vector<RatFn> v = src;
        reduce(v);
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                pivots.push_back(int(i));
                rows.push_back(std::move(v));
                break;
            }
    }
    reduce(x);
    for (const auto& v : x)
        if (!v.is_zero()) return false;
    return true;
}

int detect_den(const PolyMatrix& m) {
    for (int r = 0; r < m.nrows(); ++r)
        for (const auto& [c, v] : m.row(r)) {
            (void)c;
            if (v.num().den() != 0) return v.num().den();
            if (v.den().den() != 0) return v.den().den();
        }
    return 0;
}

} // namespace

RadicalReport radical_basis(const PolyMatrix& rmaj, int degree, long size_cap) {
    PairingMatrix pm = pairing_matrix(rmaj, degree, size_cap);
    RadicalReport rep;
    rep.degree = degree;
    rep.alphabet = pm.alphabet;
    rep.right = nullspace(pm.mat, Side::right);
    rep.left = nullspace(pm.mat, Side::left);
    int den = detect_den(rmaj);
    if (degree == 3 && den > 0) {
        int m = pm.alphabet;
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j < i; ++j) {
                std::ostringstream osr;
                osr << "e" << i << "^2*e" << j << " + q*e" << j << "*e" << i << "^2 - (1+q)*e"
                    << i << "*e" << j << "*e" << i;
                rep.right_verdicts.push_back(
                    {osr.str(), in_span(rep.right, serre_element_right(m, i, j, den))});
                std::ostringstream osl;
                osl << "f" << j << "*f" << i << "^2 + q^-1*f" << i << "^2*f" << j
                    << " - (1+q^-1)*f" << i << "*f" << j << "*f" << i;
                rep.left_verdicts.push_back(
                    {osl.str(), in_span(rep.left, serre_element_left(m, i, j, den))});
            }
    }
    return rep;
}

QuadraticRelations::QuadraticRelations(const PolyMatrix& rprime_maj) {
    m_ = int(std::lround(std::sqrt(double(rprime_maj.nrows()))));
    if (m_ * m_ != rprime_maj.nrows())
        throw DimensionMismatch("relation matrix must be m^2 square");
    int dim = m_ * m_;
    std::vector<std::vector<RatFn>> rows;
    for (int i = 1; i <= m_; ++i)
        for (int j = 1; j <= m_; ++j) {
            std::vector<RatFn> rel(dim);
            rel[(i - 1) * m_ + (j - 1)] = RatFn(1);
            int row = (j - 1) * m_ + (i - 1);
            for (const auto& [col, val] : rprime_maj.row(row)) {
                int a = col / m_ + 1, b = col % m_ + 1;
                rel[(a - 1) * m_ + (b - 1)] -= val;
            }
            bool zero = true;
            for (const auto& v : rel)
                if (!v.is_zero()) {
                    zero = false;
                    break;
                }
            if (!zero) rows.push_back(std::move(rel));
        }
    // Row reduce (Gauss-Jordan over the fraction field, first-pivot order).
    for (size_t r = 0; r < rows.size();) {
        int p = -1;
        for (int c = 0; c < dim; ++c)
            if (!rows[r][c].is_zero()) {
                p = c;
                break;
            }
        if (p < 0) {
            rows.erase(rows.begin() + long(r));
            continue;
        }
        RatFn inv = rows[r][p].inverse();
        for (auto& v : rows[r]) v *= inv;
        for (size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 == r || rows[r2][p].is_zero()) continue;
            RatFn f = rows[r2][p];
            for (int c = 0; c < dim; ++c)
                if (!rows[r][c].is_zero()) rows[r2][c] -= f * rows[r][c];
        }
        ++r;
    }
    // Deduplicate zero rows produced late.
    for (auto it = rows.begin(); it != rows.end();) {
        bool zero = true;
        for (const auto& v : *it)
            if (!v.is_zero()) {
                zero = false;
                break;
            }
        it = zero ? rows.erase(it) : it + 1;
    }
    for (const auto& r : rows) {
        int p = -1;
        for (int c = 0; c < dim; ++c)
            if (!r[c].is_zero()) {
                p = c;
                break;
            }
        pivots_.push_back(p);
    }
    rref_ = std::move(rows);
}

bool QuadraticRelations::implies(int a, int b, const RatFn& c, int a2, int b2) const {
    std::vector<RatFn> x(m_ * m_);
    x[(a - 1) * m_ + (b - 1)] += RatFn(1);
    x[(a2 - 1) * m_ + (b2 - 1)] -= c;
    for (size_t r = 0; r < rref_.size(); ++r) {
        if (pivots_[r] < 0 || x[pivots_[r]].is_zero()) continue;
        RatFn f = x[pivots_[r]] / rref_[r][pivots_[r]];
        for (int i = 0; i < m_ * m_; ++i)
            if (!rref_[r][i].is_zero()) x[i] -= f * rref_[r][i];
    }
    for (const auto& v : x)
        if (!v.is_zero()) return false;
    return true;
}

} // namespace nichols
} // namespace qgrow
