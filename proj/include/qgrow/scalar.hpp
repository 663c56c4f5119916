#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgrow/errors.hpp"

namespace qgrow {

using Rational = mpq_class;

/// gcd of two rationals: gcd of numerators over lcm of denominators, >= 0.
Rational rat_gcd(const Rational& a, const Rational& b);
bool rat_is_integer(const Rational& r);
std::string rat_str(const Rational& r);

/// Canonicalized rational from a numerator/denominator pair (mpq_class does
/// not reduce on construction).
inline Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Element of Q[v, v^-1] where v = q^(1/D) for a session denominator D.
///
/// Exponents are stored as integer powers of v; a scalar with den() == 0 is a
/// plain rational constant and combines with any session. Mixing two
/// non-constant scalars with different session denominators is an error.
/// The term map never stores a zero coefficient; the empty map is zero.
class Laurent {
public:
    Laurent() = default;
    Laurent(long c) { if (c != 0) terms_[0] = Rational(c); }
    Laurent(const Rational& c) { if (c != 0) terms_[0] = c; }

    /// q^e with rational exponent e; e*den must be an integer.
    static Laurent q_power(const Rational& e, int den);
    /// c * v^vexp.
    static Laurent monomial(const Rational& c, long vexp, int den);

    int den() const { return den_; }
    const std::map<long, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }

    /// Lowest/highest exponent in v units (zero scalar has no order).
    long min_exp() const;
    long max_exp() const;
    const Rational& leading_coeff() const;   // coefficient at max_exp
    const Rational& trailing_coeff() const;  // coefficient at min_exp
    Rational coeff(long vexp) const;

    /// gcd of all coefficients, positive; zero for the zero scalar.
    Rational content() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const { Laurent r(*this); r += o; return r; }
    Laurent operator-(const Laurent& o) const { Laurent r(*this); r -= o; return r; }
    Laurent operator*(const Laurent& o) const;
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
    Laurent scaled(const Rational& c) const;
    Laurent shifted(long vexp) const;  // multiply by v^vexp
    Laurent with_den(int d) const;     // merge the session denominator in
    Laurent pow(unsigned k) const;

    bool operator==(const Laurent& o) const;
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    /// Exact division; nullopt if o does not divide this in Q[v, v^-1].
    std::optional<Laurent> try_divide(const Laurent& o) const;

    /// Evaluate with v |-> v0 (test/diagnostic specialization).
    Rational eval_v(const Rational& v0) const;

    /// If this is s*q^e with s = +-1, return (s, e); nullopt otherwise.
    std::optional<std::pair<int, Rational>> as_signed_q_power() const;

    std::string str() const;

    /// Throws SessionMismatch unless dens are compatible; returns merged den.
    static int merge_den(int a, int b);

private:
    void set(long e, const Rational& c);

    int den_ = 0;  // 0 = rational constant, compatible with any session
    std::map<long, Rational> terms_;
};

/// Element of the fraction field of Q[v, v^-1], kept in canonical form:
/// den is a polynomial in v with trailing exponent 0, coprime integer
/// coefficients and positive leading coefficient; gcd(num, den) is a unit.
/// Equal values always have identical representations.
class RatFn {
public:
    RatFn() : num_(), den_(1) {}
    RatFn(long c) : num_(c), den_(1) {}
    RatFn(const Rational& c) : num_(c), den_(1) {}
    RatFn(const Laurent& l) : num_(l), den_(1) {}
    RatFn(const Laurent& num, const Laurent& den);

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn& operator+=(const RatFn& o) { *this = *this + o; return *this; }
    RatFn& operator-=(const RatFn& o) { *this = *this - o; return *this; }
    RatFn& operator*=(const RatFn& o) { *this = *this * o; return *this; }
    RatFn& operator/=(const RatFn& o) { *this = *this / o; return *this; }

    RatFn inverse() const;

    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    Rational eval_v(const Rational& v0) const;
    std::string str() const;

private:
    void canonicalize();

    Laurent num_;
    Laurent den_;
};

/// Polynomial gcd in Q[v] of two Laurent scalars, taken up to units: the
/// result is a primitive integer polynomial with trailing exponent 0 and
/// positive leading coefficient. gcd(0, b) = normalized b.
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

} // namespace qgrow
