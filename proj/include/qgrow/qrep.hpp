#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qgrow/lattice.hpp"
#include "qgrow/matrix.hpp"

namespace qgrow {
namespace qrep {

enum class RepKind { vector, sym2, wedge2 };

std::string rep_name(RepKind k);

/// Weight-basis representation of U_q(sl_n). Basis vectors are sorted in the
/// canonical raising order (lexicographic on the underlying index pairs; for
/// the vector representation, plain index order); every simple E strictly
/// raises the basis index and every F strictly lowers it. Action matrices
/// act on column vectors: entry (r, c) is the coefficient of basis r in the
/// image of basis c.
struct Rep {
    RepKind kind;
    int n;    // base rank parameter: representation of U_q(sl_n)
    int den;  // session denominator, 2n
    int dim;
    std::vector<std::string> labels;
    std::vector<lattice::Weight> weights;
    std::vector<std::pair<int, int>> pairs;  // 1-based (i, j) for sym2/wedge2
    std::vector<PolyMatrix> actE, actF;      // index k-1 for simple root k

    int pair_index(int i, int j) const;  // index of basis pair (i, j)
};

/// The n-dimensional vector representation.
Rep vector_rep(int n);

/// The quantum symmetric square, dimension n(n+1)/2.
Rep sym2_rep(int n);

/// The second quantum exterior power, dimension n(n-1)/2; requires n >= 4.
Rep wedge2_rep(int n);

/// Diagonal action of K_i^c: multiplies a weight-mu basis vector by
/// q^(c*(alpha_i, mu)). The exponent must land on the session lattice.
PolyMatrix torus_action(const Rep& rep, int i, const Rational& c);

/// Diagonal action of the K-monomial with exponent vector w, with an overall
/// sign on the exponent: basis vector of weight mu gets q^(sign*(w, mu)).
PolyMatrix torus_weight_action(const Rep& rep, const lattice::Weight& w, int sign);

/// Embedding of a pair representation into V (x) V as an n^2 x dim matrix:
/// sym2 basis (i, j) |-> x_i(x)x_j + q^-1 x_j(x)x_i (i < j) and x_m(x)x_m;
/// wedge2 basis (i, j) |-> x_i(x)x_j - q x_j(x)x_i. Leading tensor component
/// (i, j) with i <= j has coefficient 1, which makes coordinate extraction
/// along the embedding a plain lookup.
PolyMatrix pair_embedding(const Rep& rep);

} // namespace qrep
} // namespace qgrow
