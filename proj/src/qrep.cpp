#include "qgrow/qrep.hpp"

#include <map>
#include <set>

namespace qgrow {
namespace qrep {

std::string rep_name(RepKind k) {
    switch (k) {
    case RepKind::vector: return "vector";
    case RepKind::sym2: return "sym2";
    case RepKind::wedge2: return "wedge2";
    }
    return "?";
}

int Rep::pair_index(int i, int j) const {
    for (size_t k = 0; k < pairs.size(); ++k)
        if (pairs[k] == std::make_pair(i, j)) return int(k);
    throw DomainError("basis pair out of range");
}

namespace {

lattice::Weight vector_weight(int n, int k) {
    // weight(x_1) = -lambda_1, weight(x_k) = -lambda_1 + alpha_1 + ... + alpha_{k-1}
    lattice::Weight w = lattice::fundamental_weight(n, 1).scaled(-1);
    for (int a = 1; a < k; ++a) w = w + lattice::simple_root(n, a);
    return w;
}

void check_rep(const Rep& rep) {
    // Distinct weights and strict raising/lowering in the canonical order,
    // with the weight moved by exactly +-alpha_k.
    std::set<std::string> seen;
    for (const auto& w : rep.weights)
        if (!seen.insert(w.str()).second) throw ConventionFault("repeated weight in basis");
    for (int k = 1; k <= rep.n - 1; ++k) {
        lattice::Weight alpha = lattice::simple_root(rep.n, k);
        for (int r = 0; r < rep.dim; ++r) {
            for (const auto& [c, v] : rep.actE[k - 1].row(r)) {
                (void)v;
                if (r <= c) throw ConventionFault("E does not raise the canonical order");
                if (!(rep.weights[r] == rep.weights[c] + alpha))
                    throw ConventionFault("E action moves weight incorrectly");
            }
            for (const auto& [c, v] : rep.actF[k - 1].row(r)) {
                (void)v;
                if (r >= c) throw ConventionFault("F does not lower the canonical order");
                if (!(rep.weights[r] + alpha == rep.weights[c]))
                    throw ConventionFault("F action moves weight incorrectly");
            }
        }
    }
}

} // namespace

Rep vector_rep(int n) {
    if (n < 2) throw DomainError("vector_rep: n must be >= 2");
    Rep rep;
    rep.kind = RepKind::vector;
    rep.n = n;
    rep.den = 2 * n;
    rep.dim = n;
    for (int k = 1; k <= n; ++k) {
        rep.labels.push_back("x" + std::to_string(k));
        rep.weights.push_back(vector_weight(n, k));
    }
    for (int k = 1; k <= n - 1; ++k) {
        PolyMatrix e(n, n), f(n, n);
        e.set(k, k - 1, RatFn(1));  // E_k x_k = x_{k+1}
        f.set(k - 1, k, RatFn(1));  // F_k x_{k+1} = x_k
        rep.actE.push_back(e);
        rep.actF.push_back(f);
    }
    check_rep(rep);
    return rep;
}

Rep sym2_rep(int n) {
    if (n < 2) throw DomainError("sym2_rep: n must be >= 2");
    Rep rep;
    rep.kind = RepKind::sym2;
    rep.n = n;
    rep.den = 2 * n;
    rep.dim = n * (n + 1) / 2;
    std::map<std::pair<int, int>, int> idx;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            idx[{i, j}] = int(rep.pairs.size());
            rep.pairs.emplace_back(i, j);
            rep.labels.push_back("s(" + std::to_string(i) + "," + std::to_string(j) + ")");
            rep.weights.push_back(vector_weight(n, i) + vector_weight(n, j));
        }
    Laurent qq = Laurent::q_power(1, rep.den) + Laurent::q_power(-1, rep.den);  // q + q^-1
    for (int k = 1; k <= n - 1; ++k) {
        PolyMatrix e(rep.dim, rep.dim), f(rep.dim, rep.dim);
        for (int c = 0; c < rep.dim; ++c) {
            auto [i, j] = rep.pairs[c];
            if (i == j) {
                if (k == i) e.set(idx[{i, i + 1}], c, RatFn(1));
                if (k == i - 1) f.set(idx[{i - 1, i}], c, RatFn(1));
                continue;
            }
            if (k == i) {
                if (j == i + 1)
                    e.set(idx[{i + 1, i + 1}], c, RatFn(qq));
                else
                    e.set(idx[{i + 1, j}], c, RatFn(1));
            } else if (k == j && j < n) {
                e.set(idx[{i, j + 1}], c, RatFn(1));
            }
            if (k == i - 1) {
                f.set(idx[{i - 1, j}], c, RatFn(1));
            } else if (k == j - 1) {
                if (j == i + 1)
                    f.set(idx[{i, i}], c, RatFn(qq));
                else
                    f.set(idx[{i, j - 1}], c, RatFn(1));
            }
        }
        rep.actE.push_back(e);
        rep.actF.push_back(f);
    }
    check_rep(rep);
    return rep;
}

Rep wedge2_rep(int n) {
    if (n < 4)
        throw DomainError("wedge2 requires n ≥ 4 (the squared module splits into three "
                          "summands only when n ≥ 4)");
    Rep rep;
    rep.kind = RepKind::wedge2;
    rep.n = n;
    rep.den = 2 * n;
    rep.dim = n * (n - 1) / 2;
    std::map<std::pair<int, int>, int> idx;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            idx[{i, j}] = int(rep.pairs.size());
            rep.pairs.emplace_back(i, j);
            rep.labels.push_back("w(" + std::to_string(i) + "," + std::to_string(j) + ")");
            rep.weights.push_back(vector_weight(n, i) + vector_weight(n, j));
        }
    for (int k = 1; k <= n - 1; ++k) {
        PolyMatrix e(rep.dim, rep.dim), f(rep.dim, rep.dim);
        for (int c = 0; c < rep.dim; ++c) {
            auto [i, j] = rep.pairs[c];
            if (k == i && j > i + 1) e.set(idx[{i + 1, j}], c, RatFn(1));
            if (k == j && j < n) e.set(idx[{i, j + 1}], c, RatFn(1));
            if (k == i - 1) f.set(idx[{i - 1, j}], c, RatFn(1));
            if (k == j - 1 && j > i + 1) f.set(idx[{i, j - 1}], c, RatFn(1));
        }
        rep.actE.push_back(e);
        rep.actF.push_back(f);
    }
    check_rep(rep);
    return rep;
}

PolyMatrix torus_action(const Rep& rep, int i, const Rational& c) {
    if (i < 1 || i > rep.n - 1) throw DomainError("torus_action: simple index out of range");
    lattice::Weight alpha = lattice::simple_root(rep.n, i);
    PolyMatrix m(rep.dim, rep.dim);
    for (int b = 0; b < rep.dim; ++b) {
        Rational e = c * lattice::inner(alpha, rep.weights[b]);
        m.set(b, b, RatFn(Laurent::q_power(e, rep.den)));
    }
    return m;
}

PolyMatrix torus_weight_action(const Rep& rep, const lattice::Weight& w, int sign) {
    PolyMatrix m(rep.dim, rep.dim);
    for (int b = 0; b < rep.dim; ++b) {
        Rational e = sign * lattice::inner(w, rep.weights[b]);
        m.set(b, b, RatFn(Laurent::q_power(e, rep.den)));
    }
    return m;
}

PolyMatrix pair_embedding(const Rep& rep) {
    if (rep.kind == RepKind::vector) throw DomainError("pair_embedding: pair representation required");
    int n = rep.n;
    PolyMatrix io(n * n, rep.dim);
    for (int c = 0; c < rep.dim; ++c) {
        auto [i, j] = rep.pairs[c];
        if (i == j) {
            io.set((i - 1) * n + (j - 1), c, RatFn(1));
        } else if (rep.kind == RepKind::sym2) {
            io.set((i - 1) * n + (j - 1), c, RatFn(1));
            io.set((j - 1) * n + (i - 1), c, RatFn(Laurent::q_power(-1, rep.den)));
        } else {
            io.set((i - 1) * n + (j - 1), c, RatFn(1));
            io.set((j - 1) * n + (i - 1), c, RatFn(-Laurent::q_power(1, rep.den)));
        }
    }
    return io;
}

} // namespace qrep
} // namespace qgrow
