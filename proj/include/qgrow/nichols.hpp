#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgrow/linalg.hpp"

namespace qgrow {
namespace nichols {

/// Word in the free algebra on letters 1..m; map order = lexicographic.
using Word = std::vector<int>;
using WordLin = std::map<Word, RatFn>;
using Split = std::pair<Word, Word>;
using SplitLin = std::map<Split, RatFn>;

long word_index(const Word& w, int m);
Word index_word(long idx, int m, int degree);
std::string word_str(const Word& w, const char* gen);

void add_term(WordLin& acc, const Word& w, const RatFn& c);
void add_term(SplitLin& acc, const Split& s, const RatFn& c);

/// Braiding on adjacent positions (pos, pos+1), 1-based:
/// Psi(e^i (x) e^j) = sum_ab R^{(ji)}_{(ab)} e^a (x) e^b, extended linearly.
/// R is expected in the quoted-entry (Majid) index layout.
WordLin braid_apply(const PolyMatrix& rmaj, const WordLin& w, int pos);

/// The (k, d-k) component of the braided coproduct of a degree-d word,
/// computed by the recursion D(e^i w') = (e^i (x) 1 + 1 (x) e^i) D(w') with
/// braided multiplication.
SplitLin coproduct_component(const PolyMatrix& rmaj, const Word& w, int k);

/// Degree-d pairing matrix between f-words (rows) and e-words (columns),
/// both in lexicographic order: entry = <f-word, e-word>; degree 1 is the
/// identity, degree d uses <f_j w_f, w_e> = sum <f_j, first><w_f, rest> over
/// the (1, d-1) coproduct component of w_e.
struct PairingMatrix {
    int degree = 0;
    int alphabet = 0;
    PolyMatrix mat;
};
PairingMatrix pairing_matrix(const PolyMatrix& rmaj, int degree, long size_cap = 10000);

/// Kernel bases of the degree-d pairing (right kernel = e-side radical,
/// left kernel = f-side), plus membership verdicts for the expected
/// q-Serre-like elements when degree == 3.
struct RadicalReport {
    int degree = 0;
    int alphabet = 0;
    std::vector<std::vector<RatFn>> right, left;
    struct Verdict {
        std::string element;
        bool member;
    };
    std::vector<Verdict> right_verdicts, left_verdicts;
};
RadicalReport radical_basis(const PolyMatrix& rmaj, int degree, long size_cap = 10000);

/// The expected degree-3 radical elements for the standard braiding:
/// e-side (e^i)^2 e^j + q e^j (e^i)^2 - (1+q) e^i e^j e^i, and f-side
/// f_j f_i^2 + q^-1 f_i^2 f_j - (1+q^-1) f_i f_j f_i, for i > j.
std::vector<RatFn> serre_element_right(int m, int i, int j, int den);
std::vector<RatFn> serre_element_left(int m, int i, int j, int den);

/// Row-reduced span of the degree-2 relation ideal e^i e^j =
/// sum_ab R'^{(ji)}_{(ab)} e^a e^b; answers implication queries
/// "e^a e^b = c * e^(a') e^(b') ?" by exact reduction.
class QuadraticRelations {
public:
    QuadraticRelations(const PolyMatrix& rprime_maj);

    int alphabet() const { return m_; }
    long relation_count() const { return long(rref_.size()); }
    const std::vector<std::vector<RatFn>>& basis() const { return rref_; }

    /// Is e^a e^b - c * e^(a2) e^(b2) in the relation span? 1-based letters.
    bool implies(int a, int b, const RatFn& c, int a2, int b2) const;

private:
    int m_;
    std::vector<std::vector<RatFn>> rref_;
    std::vector<int> pivots_;
};

} // namespace nichols
} // namespace qgrow
