#pragma once

#include <functional>
#include <map>
#include <vector>

#include "qgrow/scalar.hpp"

namespace qgrow {

/// Sparse matrix over the Laurent fraction field. Rows hold only nonzero
/// entries; all operations are exact and deterministic.
class PolyMatrix {
public:
    PolyMatrix() : nrows_(0), ncols_(0) {}
    PolyMatrix(int nrows, int ncols) : nrows_(nrows), ncols_(ncols), rows_(nrows) {}

    static PolyMatrix identity(int n);
    /// Flip operator on V (x) V for dim(V) = d: (i,j) |-> (j,i), size d^2.
    static PolyMatrix flip(int d);

    int nrows() const { return nrows_; }
    int ncols() const { return ncols_; }

    RatFn at(int i, int j) const;
    void set(int i, int j, const RatFn& v);
    void add_to(int i, int j, const RatFn& v);
    const std::map<int, RatFn>& row(int i) const { return rows_[i]; }
    long nnz() const;

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix scaled(const RatFn& c) const;
    PolyMatrix transpose() const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    /// First position where this and o differ, if any (row-major scan).
    std::optional<std::pair<int, int>> first_difference(const PolyMatrix& o) const;

    std::vector<RatFn> apply(const std::vector<RatFn>& v) const;
    std::map<long, RatFn> apply_sparse(const std::map<long, RatFn>& v) const;

    PolyMatrix kron(const PolyMatrix& o) const;

    /// View this d^2 x d^2 matrix as an operator on legs (p, q) of V^(x)k,
    /// 1-based legs, p < q; returns the d^k x d^k matrix.
    PolyMatrix embed_legs(int d, int k, int p, int q) const;

private:
    int nrows_, ncols_;
    std::vector<std::map<int, RatFn>> rows_;
};

/// Exact matrix product with dimension check (module-level entry point).
inline PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) { return a * b; }

} // namespace qgrow
