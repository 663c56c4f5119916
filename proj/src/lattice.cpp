#include "qgrow/lattice.hpp"

#include <sstream>

namespace qgrow {
namespace lattice {

Weight Weight::operator+(const Weight& o) const {
    if (coords.size() != o.coords.size()) throw DimensionMismatch("weight add: rank mismatch");
    Weight r(*this);
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    // Central parts of the same generator do not add here; growth only ever
    // forms mu + v with mu central-free.
    if (central != 0 && o.central != 0)
        throw DomainError("adding two weights with central parts is not supported");
    r.central = central + o.central;
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    if (coords.size() != o.coords.size()) throw DimensionMismatch("weight sub: rank mismatch");
    if (o.central != 0) throw DomainError("subtracting a weight with a central part");
    Weight r(*this);
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    return r;
}

Weight Weight::scaled(const Rational& c) const {
    if (central != 0) throw DomainError("scaling a weight with a central part");
    Weight r(*this);
    for (auto& x : r.coords) x *= c;
    return r;
}

Rational Weight::height() const {
    Rational h = 0;
    for (const auto& c : coords) h += c;
    return h;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ", ";
        os << rat_str(coords[i]);
    }
    os << ")";
    if (central != 0) os << " + v[(v,v)=" << rat_str(central) << "]";
    return os.str();
}

RootDatum type_a_datum(int rank) {
    if (rank < 1) throw DomainError("type A rank must be >= 1");
    RootDatum d;
    d.rank = rank;
    d.cartan.assign(rank, std::vector<long>(rank, 0));
    d.lengths.assign(rank, Rational(2));
    for (int i = 0; i < rank; ++i) {
        d.cartan[i][i] = 2;
        if (i > 0) d.cartan[i][i - 1] = -1;
        if (i + 1 < rank) d.cartan[i][i + 1] = -1;
    }
    return d;
}

Weight simple_root(int n, int i) {
    if (i < 1 || i > n - 1) throw DomainError("simple root index out of range");
    Weight w;
    w.coords.assign(n - 1, 0);
    w.coords[i - 1] = 1;
    return w;
}

Weight fundamental_weight(int n, int i) {
    if (n < 2) throw DomainError("fundamental_weight: n must be >= 2");
    if (i < 1 || i > n - 1) throw DomainError("fundamental weight index out of range");
    Weight w;
    w.coords.assign(n - 1, 0);
    for (int j = 1; j <= n - 1; ++j) {
        long num = j <= i ? long(j) * (n - i) : long(i) * (n - j);
        Rational c(num, n);
        c.canonicalize();
        w.coords[j - 1] = c;
    }
    return w;
}

Rational inner(const Weight& a, const Weight& b) {
    if (a.coords.size() != b.coords.size()) throw DimensionMismatch("inner: rank mismatch");
    int rank = int(a.coords.size());
    Rational acc = 0;
    // Type A Gram matrix: 2 on the diagonal, -1 on the off-diagonals.
    for (int i = 0; i < rank; ++i) {
        if (a.coords[i] == 0) continue;
        acc += a.coords[i] * 2 * b.coords[i];
        if (i > 0) acc -= a.coords[i] * b.coords[i - 1];
        if (i + 1 < rank) acc -= a.coords[i] * b.coords[i + 1];
    }
    if (a.central != 0 && b.central != 0) {
        if (a.central != b.central)
            throw DomainError("central generators from different growth steps");
        acc += a.central;
    }
    return acc;
}

std::vector<std::vector<long>> reference_cartan(Series s, int rank) {
    auto chain = [&](int r) {
        std::vector<std::vector<long>> m(r, std::vector<long>(r, 0));
        for (int i = 0; i < r; ++i) {
            m[i][i] = 2;
            if (i > 0) m[i][i - 1] = -1;
            if (i + 1 < r) m[i][i + 1] = -1;
        }
        return m;
    };
    switch (s) {
    case Series::A:
        if (rank < 1) throw DomainError("type A needs rank >= 1");
        return chain(rank);
    case Series::B: {
        if (rank < 2) throw DomainError("type B needs rank >= 2");
        auto m = chain(rank);
        m[rank - 1][rank - 2] = -2;  // short last node
        return m;
    }
    case Series::C: {
        if (rank < 2) throw DomainError("type C needs rank >= 2");
        auto m = chain(rank);
        m[rank - 2][rank - 1] = -2;  // long last node
        return m;
    }
    case Series::D: {
        if (rank < 4) throw DomainError("type D needs rank >= 4");
        auto m = chain(rank);
        // Last node forks off node rank-2.
        m[rank - 1][rank - 2] = 0;
        m[rank - 2][rank - 1] = 0;
        m[rank - 1][rank - 3] = -1;
        m[rank - 3][rank - 1] = -1;
        return m;
    }
    }
    throw DomainError("unknown series");
}

std::string series_name(Series s) {
    switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    }
    return "?";
}

} // namespace lattice
} // namespace qgrow
