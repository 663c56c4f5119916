#pragma once

#include <optional>
#include <vector>

#include "qgrow/matrix.hpp"

namespace qgrow {

/// Univariate polynomial over the Laurent fraction field; index = degree.
using FPoly = std::vector<RatFn>;

int fp_deg(const FPoly& p);  // -1 for the zero polynomial
FPoly fp_trim(FPoly p);
FPoly fp_add(const FPoly& a, const FPoly& b);
FPoly fp_sub(const FPoly& a, const FPoly& b);
FPoly fp_mul(const FPoly& a, const FPoly& b);
std::pair<FPoly, FPoly> fp_divmod(const FPoly& a, const FPoly& b);
FPoly fp_monic(FPoly p);
FPoly fp_gcd(FPoly a, FPoly b);
FPoly fp_lcm(const FPoly& a, const FPoly& b);
RatFn fp_eval(const FPoly& p, const RatFn& x);
PolyMatrix fp_eval_matrix(const FPoly& p, const PolyMatrix& m);
std::string fp_str(const FPoly& p);

enum class Side { left, right };

/// Exact kernel basis (right: M x = 0, left: x^T M = 0) by fraction-free
/// Bareiss elimination with the first valid pivot in row-major scan order.
/// Basis vectors are denominator-cleared, content-primitive Laurent vectors
/// whose first nonzero coordinate has positive trailing coefficient.
std::vector<std::vector<RatFn>> nullspace(const PolyMatrix& m, Side side);

/// Minimal polynomial of a square matrix: least common multiple of the
/// annihilators of standard-basis probe vectors, taken in index order until
/// the lcm stabilizes and is confirmed to annihilate the matrix. Monic.
FPoly minpoly_probe(const PolyMatrix& m);

/// A scalar of the form sign * q^exp with sign in {+1, -1}.
struct SignedPower {
    int sign;
    Rational exp;
    bool operator==(const SignedPower& o) const { return sign == o.sign && exp == o.exp; }
};

/// Factor a monic polynomial into linear factors (x - s*q^e); nullopt if it
/// does not split over signed q-monomials. Root valuations are enumerated
/// from the Newton polygon of the coefficients. `den` is the session
/// denominator used to express roots.
std::optional<std::vector<SignedPower>> factor_signed_q_powers(const FPoly& p, int den);

} // namespace qgrow
