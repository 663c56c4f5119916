#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgrow/lattice.hpp"
#include "qgrow/nichols.hpp"
#include "qgrow/rmx.hpp"

namespace qgrow {
namespace grow {

/// One closed-form entry of the m+ (or, mirrored, m-) matrix: a scalar
/// prefactor, an optional simple-root E factor, and a K-monomial with
/// exponent vector kpart (alpha-basis coordinates in (1/n)Z).
struct MPlusEntry {
    int row = 0, col = 0;  // 1-based basis indices
    Laurent prefactor;
    std::optional<int> efactor;  // simple index of an E factor, if any
    lattice::Weight kpart;
};

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;
    bool all_pass() const;
    void add(const std::string& name, bool pass, const std::string& detail = "");
    void merge(const Report& o);
};

/// lambda = q^s where -q^s is the unique negative eigenvalue of P*Rvv;
/// must agree with the bundle's stored normalization.
Laurent normalization_constant(const rmx::RMatrixBundle& b);

/// The quoted diagonal and minor-diagonal m+ entries for the representation:
/// diagonal (m+)^i_i = K with exponent vector -mu_i (mu_i the basis weight),
/// minor diagonals with (q - q^-1)-type prefactors and one E factor.
std::vector<MPlusEntry> mplus_closed_form(qrep::RepKind kind, int n);

/// The recorded index convention that makes every pairing check pass:
/// k_sign is the exponent sign used to evaluate m+/m- K-powers relative to
/// the representation's K tables; quoted_layout picks between the
/// quoted-entry and operator index layouts of Rvv.
struct PairingConvention {
    int k_sign = -1;
    bool quoted_layout = true;
};

/// Check every closed-form entry against the pairing identity
/// <(m+)^i_j, t^k_l> = Rvv^{ik}_{jl} (and the mirrored m- identity against
/// Rvv^-1), searching for the single global convention that satisfies all
/// entries simultaneously.
Report verify_mplus_pairing(const rmx::RMatrixBundle& b, const std::vector<MPlusEntry>& entries,
                            PairingConvention* recorded = nullptr);

struct NewRootData {
    lattice::Weight mu;      // K-exponent readout of the last diagonal entry
    Rational vnorm;          // (v, v), with lambda = q^(-vnorm)
    lattice::Weight alphaN;  // mu + v
    std::vector<Rational> inner_alpha;  // (alpha_n, alpha_i), i = 1..n-1
    Rational inner_nn;                  // (alpha_n, alpha_n)
};

NewRootData new_root_data(qrep::RepKind kind, int n, const Laurent& lambda);

struct GrowthResult {
    qrep::RepKind rep = qrep::RepKind::vector;
    int n = 0;
    lattice::RootDatum base;
    Laurent lambda;
    NewRootData root;
    std::vector<std::vector<long>> ext_cartan;
    lattice::Series series = lattice::Series::B;
    Report report;
};

/// Grow the extended Cartan matrix two ways: route A from the Prop-style
/// inner products of the m+ readout, route B from R-matrix exponents (the
/// diagonal corner entry of Rvv and weight differences of the constructed
/// representation). The two routes must agree; the result is compared to the
/// reference Cartan matrix of the expected series.
GrowthResult extended_cartan(qrep::RepKind kind, int n);

/// The specific relation instances used by the series identifications:
/// (a) the E_n K_n exponent, (b) the K_n E_i exponent table, (c) the corner
/// quadratic q-commutation from R', (d) the q-Serre degrees implied by the
/// extended Cartan matrix.
Report relation_instances(qrep::RepKind kind, int n);

struct TreeEdge {
    std::string from, to;
    qrep::RepKind rep = qrep::RepKind::vector;
    Laurent lambda;
    bool verified = false;
};

struct Tree {
    int max_rank = 0;
    std::vector<std::string> nodes;  // "A1", "B2", ...
    std::vector<TreeEdge> edges;
};

/// Growth tree up to the target rank: verified edges A_{n-1} -> B_n
/// (vector), A_{n-1} -> C_n (sym2), A_{n-1} -> D_n (wedge2, n >= 4), each
/// re-derived through extended_cartan; rank-induction edges A_k -> A_{k+1}
/// are included as cited and flagged unverified.
Tree build_tree(int max_rank);

std::string growth_series_name(const GrowthResult& g);

} // namespace grow
} // namespace qgrow
