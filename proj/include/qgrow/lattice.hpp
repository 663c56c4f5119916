#pragma once

#include <string>
#include <vector>

#include "qgrow/scalar.hpp"

namespace qgrow {
namespace lattice {

/// Rational vector in the simple-root basis of A_{n-1}, with an optional
/// central component: `central` is the declared norm (v, v) of a generator v
/// orthogonal to every alpha_i. Weights from different growth steps never
/// share a central generator.
struct Weight {
    std::vector<Rational> coords;  // coefficients of alpha_1 .. alpha_{n-1}
    Rational central = 0;          // (v, v) of the attached central part, 0 = none

    int rank() const { return int(coords.size()); }
    bool operator==(const Weight& o) const { return coords == o.coords && central == o.central; }
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight scaled(const Rational& c) const;
    /// Sum of alpha-coordinates (height).
    Rational height() const;
    std::string str() const;
};

/// Cartan data of a simple series: integer matrix plus root lengths.
struct RootDatum {
    int rank;
    std::vector<std::vector<long>> cartan;
    std::vector<Rational> lengths;  // (alpha_i, alpha_i)
};

RootDatum type_a_datum(int rank);

/// alpha_i of A_{n-1} as a Weight (1 <= i <= n-1).
Weight simple_root(int n, int i);

/// i-th fundamental weight of A_{n-1}, expressed in the alpha-basis.
Weight fundamental_weight(int n, int i);

/// Symmetric bilinear form with (alpha_i, alpha_j) = a_ij (type A, d_i = 1),
/// plus the central contribution when both weights carry the same central
/// generator.
Rational inner(const Weight& a, const Weight& b);

enum class Series { A, B, C, D };

/// Standard Cartan matrix in Bourbaki node order with the new node last.
/// B, C need rank >= 2; D needs rank >= 4.
std::vector<std::vector<long>> reference_cartan(Series s, int rank);

std::string series_name(Series s);

} // namespace lattice
} // namespace qgrow
