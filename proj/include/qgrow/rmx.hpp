#pragma once

#include <optional>
#include <string>

#include "qgrow/linalg.hpp"
#include "qgrow/qrep.hpp"

namespace qgrow {
namespace rmx {

struct CheckResult {
    bool pass = false;
    std::string detail;
};

enum class Mode { exhaustive, probe };

/// R-matrix package for one representation. Rvv is kept in the operator
/// convention (entry (ik),(jl) is the coefficient of v_i(x)v_k in the image
/// of v_j(x)v_l); converting with convert_convention gives the transposed
/// index layout used for entry comparisons against quoted values.
struct RMatrixBundle {
    qrep::Rep rep;
    PolyMatrix Rvv;                         // operator convention
    std::vector<SignedPower> eigenvalues;   // of P * Rvv
    bool pr_symmetric = false;
    std::optional<std::pair<int, int>> asym_witness;
    Laurent lambda;                         // Rvv = lambda * Rnorm
    PolyMatrix Rnorm;
    std::optional<PolyMatrix> Rprime;       // operator convention; nullopt = free (R' = P)
};

/// Closed-form standard R-matrix of the vector representation, in the
/// convention with entries R^{ij}_{kl} = q^{d_ij} d_ik d_jl
/// + (q - q^-1) d_il d_jk [j > i].
PolyMatrix standard_vector_rmatrix(int n);

/// Index-transposition between the two matrix conventions: P o M o P.
PolyMatrix convert_convention(const PolyMatrix& m);

/// Vector-representation R-matrix evaluated from the universal R: the
/// ordered product over positive roots of the truncated exponential factors,
/// composed with the Cartan weight factor. max_r caps the per-root summation
/// (max_r = 0 keeps only the Cartan factor); max_r < 0 means no cap (the sum
/// truncates by nilpotency). Operator convention.
PolyMatrix universal_vector_rmatrix(int n, int max_r = -1);

/// Bundle for the vector representation: Rvv = q^(-1/n) * standard matrix.
RMatrixBundle vector_bundle(int n);

/// Bundle for sym2/wedge2 built by cabling the normalized vector braiding:
/// Rhat_WW = (Rhat_2 Rhat_1 Rhat_3 Rhat_2) restricted to W(x)W, and
/// Rvv = P_WW * Rhat_WW. Verifies that W is a braiding eigenspace and that
/// the corner diagonal entries match the Cartan weight factor.
RMatrixBundle cable_bundle(int n, qrep::RepKind sub);

/// Quantum Yang-Baxter check R12 R13 R23 = R23 R13 R12 on V(x)3.
/// Exhaustive mode (full matrices) is allowed for d <= 8 only; probe mode
/// applies both sides to 16 stride-selected standard basis vectors.
CheckResult check_qybe(const PolyMatrix& r, Mode mode);

/// Fill eigenvalues of P*Rvv (exact minimal polynomial, factored into signed
/// q-powers) and the symmetry flag/witness.
void spectrum(RMatrixBundle& b);

/// Fix lambda and Rnorm, and construct Rprime:
///  - pair representations: lambda = q^s for the unique negative eigenvalue
///    -q^s of P*Rvv, so P*Rnorm has eigenvalue -1, and
///    Rprime = P + P * prod_{j != i} (P*Rnorm - x_j) over the rescaled
///    positive eigenvalues;
///  - vector representation: lambda = q^(-1/n) (Rnorm is the standard
///    matrix, whose braiding satisfies the quadratic Hecke relation) and
///    Rprime stays free.
void normalize_and_rprime(RMatrixBundle& b);

/// The three compatibility conditions tying R to R': both mixed
/// Yang-Baxter identities, the quadratic annihilation (PR+1)(PR'-1) = 0,
/// and the 21/12 exchange R21 R'12 = R'21 R12. Matrices are expected in the
/// same convention Prop-style entry formulas use (convert first when passing
/// operator-convention matrices).
CheckResult check_rprime_conditions(const PolyMatrix& r, const PolyMatrix& rp, Mode mode);

/// Inverse of an R-matrix through the minimal polynomial of P*R.
PolyMatrix rmatrix_inverse(const PolyMatrix& r);

/// Eigenvalue of the braiding on the embedded pair subspace:
/// q^((n-1)/n) for sym2, -q^(-(n+1)/n) for wedge2.
Laurent pair_eigenvalue(int n, qrep::RepKind sub);

/// P * Rvv in the quoted-entry index layout (Majid convention); diagonal
/// entries agree with the operator layout, off-diagonal positions transpose
/// pairwise: (ij),(kl) here = (ji),(lk) of P * Rvv(operator).
PolyMatrix pr_quoted(const RMatrixBundle& b);

/// Rvv in the quoted-entry index layout.
PolyMatrix r_quoted(const RMatrixBundle& b);

} // namespace rmx
} // namespace qgrow
