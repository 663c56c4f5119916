#include "qgrow/scalar.hpp"

#include <numeric>
#include <sstream>

namespace qgrow {

Rational rat_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    mpz_class num_gcd, den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Rational r(num_gcd, den_lcm);
    r.canonicalize();
    return abs(r);
}

bool rat_is_integer(const Rational& r) { return r.get_den() == 1; }

std::string rat_str(const Rational& r) { return r.get_str(); }

int Laurent::merge_den(int a, int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a != b)
        throw SessionMismatch("session denominator mismatch: " + std::to_string(a) +
                              " vs " + std::to_string(b));
    return a;
}

void Laurent::set(long e, const Rational& c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

Laurent Laurent::q_power(const Rational& e, int den) {
    Rational ve = e * den;
    if (!rat_is_integer(ve))
        throw DomainError("exponent " + rat_str(e) + " outside the session lattice (den " +
                          std::to_string(den) + ")");
    return monomial(1, ve.get_num().get_si(), den);
}

Laurent Laurent::monomial(const Rational& c, long vexp, int den) {
    Laurent r;
    if (c != 0) {
        r.terms_[vexp] = c;
        if (vexp != 0) r.den_ = den;
    }
    return r;
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool Laurent::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

long Laurent::min_exp() const {
    if (is_zero()) throw DomainError("min_exp of zero scalar");
    return terms_.begin()->first;
}

long Laurent::max_exp() const {
    if (is_zero()) throw DomainError("max_exp of zero scalar");
    return terms_.rbegin()->first;
}

const Rational& Laurent::leading_coeff() const {
    if (is_zero()) throw DomainError("leading_coeff of zero scalar");
    return terms_.rbegin()->second;
}

const Rational& Laurent::trailing_coeff() const {
    if (is_zero()) throw DomainError("trailing_coeff of zero scalar");
    return terms_.begin()->second;
}

Rational Laurent::coeff(long vexp) const {
    auto it = terms_.find(vexp);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Laurent::content() const {
    Rational g = 0;
    for (const auto& [e, c] : terms_) g = rat_gcd(g, c);
    return g;
}

Laurent Laurent::operator-() const {
    Laurent r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    den_ = merge_den(den_, o.den_);
    for (const auto& [e, c] : o.terms_) set(e, coeff(e) + c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    den_ = merge_den(den_, o.den_);
    for (const auto& [e, c] : o.terms_) set(e, coeff(e) - c);
    return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    r.den_ = merge_den(den_, o.den_);
    if (is_zero() || o.is_zero()) return Laurent();
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

Laurent Laurent::scaled(const Rational& c) const {
    if (c == 0) return Laurent();
    Laurent r(*this);
    for (auto& [e, k] : r.terms_) k *= c;
    return r;
}

Laurent Laurent::shifted(long vexp) const {
    if (vexp == 0 || is_zero()) return *this;
    Laurent r;
    r.den_ = den_;
    for (const auto& [e, c] : terms_) r.terms_[e + vexp] = c;
    return r;
}

Laurent Laurent::with_den(int d) const {
    Laurent r(*this);
    r.den_ = merge_den(den_, d);
    return r;
}

Laurent Laurent::pow(unsigned k) const {
    Laurent r(1);
    Laurent base(*this);
    while (k) {
        if (k & 1) r *= base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool Laurent::operator==(const Laurent& o) const {
    // Values, not representations: constants compare across sessions.
    if (den_ == o.den_ || den_ == 0 || o.den_ == 0 || is_constant() || o.is_constant())
        return terms_ == o.terms_;
    if (terms_.size() != o.terms_.size()) return false;
    // Distinct session denominators: compare on the common lattice.
    long l = std::lcm(long(den_), long(o.den_));
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first * (l / den_) != jt->first * (l / o.den_) || it->second != jt->second)
            return false;
    return true;
}

std::optional<Laurent> Laurent::try_divide(const Laurent& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero scalar");
    if (is_zero()) return Laurent();
    int d = merge_den(den_, o.den_);
    // Long division on trailing-exponent-0 representatives; v is a unit, so
    // divisibility in the Laurent ring reduces to divisibility in Q[v].
    long shift = min_exp() - o.min_exp();
    Laurent rem = shifted(-min_exp());
    Laurent b = o.shifted(-o.min_exp());
    Laurent quot;
    quot.den_ = d;
    const long be = b.max_exp();
    const Rational& bc = b.leading_coeff();
    while (!rem.is_zero() && rem.max_exp() >= be) {
        long e = rem.max_exp() - be;
        Rational c = rem.leading_coeff() / bc;
        quot.set(e, c);
        rem -= b * monomial(c, e, d);
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot.shifted(shift);
}

Rational Laurent::eval_v(const Rational& v0) const {
    if (v0 == 0) throw DomainError("cannot evaluate at v = 0");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational p = 1;
        long k = e >= 0 ? e : -e;
        Rational base = e >= 0 ? v0 : Rational(v0.get_den(), v0.get_num());
        for (long i = 0; i < k; ++i) p *= base;
        acc += c * p;
    }
    return acc;
}

std::optional<std::pair<int, Rational>> Laurent::as_signed_q_power() const {
    if (!is_monomial()) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    if (c != 1 && c != -1) return std::nullopt;
    int d = den_ == 0 ? 1 : den_;
    Rational qe(e, d);
    qe.canonicalize();
    return std::make_pair(c == 1 ? 1 : -1, qe);
}

std::string Laurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    int d = den_ == 0 ? 1 : den_;
    // Print in descending exponent order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational ac = abs(c);
        Rational qe(it->first, d);
        qe.canonicalize();
        if (qe == 0) {
            os << rat_str(ac);
        } else {
            if (ac != 1) os << rat_str(ac) << "*";
            os << "q";
            if (qe != 1) os << "^(" << rat_str(qe) << ")";
        }
    }
    return os.str();
}

// --- polynomial helpers on ord-0 representatives ---

namespace {

// Remainder of a by b in Q[v], both with min_exp >= 0, b nonzero.
Laurent poly_rem(Laurent a, const Laurent& b) {
    const long be = b.max_exp();
    const Rational& bc = b.leading_coeff();
    while (!a.is_zero() && a.max_exp() >= be) {
        long e = a.max_exp() - be;
        Rational c = a.leading_coeff() / bc;
        a -= b * Laurent::monomial(c, e, Laurent::merge_den(a.den(), b.den()));
    }
    return a;
}

// Normalize a nonzero polynomial: shift to min_exp 0, primitive integer
// coefficients, positive leading coefficient.
Laurent poly_normalize(const Laurent& a) {
    if (a.is_zero()) return a;
    Laurent r = a.shifted(-a.min_exp());
    Rational c = r.content();
    if (r.leading_coeff() < 0) c = -c;
    return r.scaled(Rational(1) / c);
}

} // namespace

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b.is_zero() ? b : poly_normalize(b);
    if (b.is_zero()) return poly_normalize(a);
    Laurent r0 = poly_normalize(a);
    Laurent r1 = poly_normalize(b);
    while (!r1.is_zero()) {
        Laurent r2 = poly_rem(r0, r1);
        r0 = std::move(r1);
        r1 = r2.is_zero() ? r2 : poly_normalize(r2);
    }
    return poly_normalize(r0);
}

// --- RatFn ---

RatFn::RatFn(const Laurent& num, const Laurent& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    canonicalize();
}

void RatFn::canonicalize() {
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    if (den_.is_monomial()) {
        // Unit denominator: fold into the numerator.
        num_ = num_.with_den(den_.den()).shifted(-den_.min_exp());
        num_ = num_.scaled(Rational(1) / den_.trailing_coeff());
        den_ = Laurent(1);
        return;
    }
    num_ = num_.with_den(den_.den());
    den_ = den_.with_den(num_.den());
    Laurent g = laurent_gcd(num_, den_);
    if (!g.is_one() || den_.min_exp() != 0) {
        long nshift = num_.min_exp();
        long dshift = den_.min_exp();
        Laurent n0 = num_.shifted(-nshift);
        Laurent d0 = den_.shifted(-dshift);
        num_ = *n0.try_divide(g);
        den_ = *d0.try_divide(g);
        num_ = num_.shifted(nshift - dshift);
    }
    // Scale so den has coprime integer coefficients and positive lead.
    Rational c = den_.content();
    if (den_.leading_coeff() < 0) c = -c;
    if (c != 1) {
        Rational ic = Rational(1) / c;
        den_ = den_.scaled(ic);
        num_ = num_.scaled(ic);
    }
    if (den_.min_exp() != 0) {
        num_ = num_.shifted(-den_.min_exp());
        den_ = den_.shifted(-den_.min_exp());
    }
}

RatFn RatFn::operator-() const {
    RatFn r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFn RatFn::operator+(const RatFn& o) const {
    if (den_.is_one() && o.den_.is_one()) return RatFn(num_ + o.num_);
    return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const {
    if (den_.is_one() && o.den_.is_one()) return RatFn(num_ - o.num_);
    return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator*(const RatFn& o) const {
    if (den_.is_one() && o.den_.is_one()) return RatFn(num_ * o.num_);
    return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    if (den_.is_one() && o.den_.is_one()) {
        if (auto q = num_.try_divide(o.num_)) return RatFn(*q);
    }
    return RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return RatFn(den_, num_);
}

Rational RatFn::eval_v(const Rational& v0) const {
    Rational d = den_.eval_v(v0);
    if (d == 0) throw DomainError("denominator vanishes at specialization point");
    return num_.eval_v(v0) / d;
}

std::string RatFn::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace qgrow
