#include "qgrow/matrix.hpp"

namespace qgrow {

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.rows_[i][i] = RatFn(1);
    return m;
}

PolyMatrix PolyMatrix::flip(int d) {
    PolyMatrix m(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m.rows_[j * d + i][i * d + j] = RatFn(1);
    return m;
}

RatFn PolyMatrix::at(int i, int j) const {
    auto it = rows_[i].find(j);
    return it == rows_[i].end() ? RatFn() : it->second;
}

void PolyMatrix::set(int i, int j, const RatFn& v) {
    if (v.is_zero())
        rows_[i].erase(j);
    else
        rows_[i][j] = v;
}

void PolyMatrix::add_to(int i, int j, const RatFn& v) {
    if (v.is_zero()) return;
    auto it = rows_[i].find(j);
    if (it == rows_[i].end()) {
        rows_[i][j] = v;
    } else {
        it->second += v;
        if (it->second.is_zero()) rows_[i].erase(it);
    }
}

long PolyMatrix::nnz() const {
    long c = 0;
    for (const auto& r : rows_) c += long(r.size());
    return c;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (nrows_ != o.nrows_ || ncols_ != o.ncols_)
        throw DimensionMismatch("matrix add: dimension mismatch");
    PolyMatrix m(*this);
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [j, v] : o.rows_[i]) m.add_to(i, j, v);
    return m;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (nrows_ != o.nrows_ || ncols_ != o.ncols_)
        throw DimensionMismatch("matrix sub: dimension mismatch");
    PolyMatrix m(*this);
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [j, v] : o.rows_[i]) m.add_to(i, j, -v);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (ncols_ != o.nrows_)
        throw DimensionMismatch("matrix mul: inner dimensions " + std::to_string(ncols_) +
                                " vs " + std::to_string(o.nrows_));
    PolyMatrix m(nrows_, o.ncols_);
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [k, a] : rows_[i])
            for (const auto& [j, b] : o.rows_[k]) m.add_to(i, j, a * b);
    return m;
}

PolyMatrix PolyMatrix::scaled(const RatFn& c) const {
    PolyMatrix m(nrows_, ncols_);
    if (c.is_zero()) return m;
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [j, v] : rows_[i]) m.rows_[i][j] = v * c;
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix m(ncols_, nrows_);
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [j, v] : rows_[i]) m.rows_[j][i] = v;
    return m;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    if (nrows_ != o.nrows_ || ncols_ != o.ncols_) return false;
    return rows_ == o.rows_;
}

bool PolyMatrix::is_zero() const {
    for (const auto& r : rows_)
        if (!r.empty()) return false;
    return true;
}

std::optional<std::pair<int, int>> PolyMatrix::first_difference(const PolyMatrix& o) const {
    for (int i = 0; i < nrows_; ++i) {
        if (rows_[i] == o.rows_[i]) continue;
        for (int j = 0; j < ncols_; ++j)
            if (at(i, j) != o.at(i, j)) return std::make_pair(i, j);
    }
    return std::nullopt;
}

std::vector<RatFn> PolyMatrix::apply(const std::vector<RatFn>& v) const {
    if (int(v.size()) != ncols_) throw DimensionMismatch("matrix apply: dimension mismatch");
    std::vector<RatFn> r(nrows_);
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [j, a] : rows_[i])
            if (!v[j].is_zero()) r[i] += a * v[j];
    return r;
}

std::map<long, RatFn> PolyMatrix::apply_sparse(const std::map<long, RatFn>& v) const {
    // Column access pattern: iterate matrix entries against vector support.
    std::map<long, RatFn> r;
    for (int i = 0; i < nrows_; ++i) {
        RatFn acc;
        bool any = false;
        for (const auto& [j, a] : rows_[i]) {
            auto it = v.find(j);
            if (it != v.end()) {
                acc += a * it->second;
                any = true;
            }
        }
        if (any && !acc.is_zero()) r[i] = acc;
    }
    return r;
}

PolyMatrix PolyMatrix::kron(const PolyMatrix& o) const {
    PolyMatrix m(nrows_ * o.nrows_, ncols_ * o.ncols_);
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [j, a] : rows_[i])
            for (int k = 0; k < o.nrows_; ++k)
                for (const auto& [l, b] : o.rows_[k])
                    m.rows_[i * o.nrows_ + k][j * o.ncols_ + l] = a * b;
    return m;
}

PolyMatrix PolyMatrix::embed_legs(int d, int k, int p, int q) const {
    if (nrows_ != d * d || ncols_ != d * d) throw DimensionMismatch("embed_legs: need d^2 square");
    if (!(1 <= p && p < q && q <= k)) throw DomainError("embed_legs: bad leg indices");
    long dim = 1;
    for (int i = 0; i < k; ++i) dim *= d;
    PolyMatrix m{int(dim), int(dim)};
    // Strides of legs p and q in the row-major index.
    long sp = 1, sq = 1;
    for (int i = p; i < k; ++i) sp *= d;
    for (int i = q; i < k; ++i) sq *= d;
    // Fill by columns: for each source column (a,b) and each surrounding
    // context, copy the 2-leg column.
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            // Collect column (a,b) of the 2-leg operator.
            std::vector<std::pair<int, RatFn>> col;
            for (int r = 0; r < d * d; ++r) {
                auto it = rows_[r].find(a * d + b);
                if (it != rows_[r].end()) col.emplace_back(r, it->second);
            }
            if (col.empty()) continue;
            for (long idx = 0; idx < dim; ++idx) {
                if (int(idx / sp) % d != a || int(idx / sq) % d != b) continue;
                long base = idx - a * sp - b * sq;
                for (const auto& [r, v] : col) {
                    int i2 = r / d, j2 = r % d;
                    m.add_to(int(base + i2 * sp + j2 * sq), int(idx), v);
                }
            }
        }
    return m;
}

} // namespace qgrow
