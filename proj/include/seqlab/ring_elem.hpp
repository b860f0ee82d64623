#pragma once

#include "seqlab/rational.hpp"

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>

namespace seqlab {

// Position of one term: x^xexp * l^lexp. The x exponent never goes negative;
// l is the Laurent direction and may.
struct Monomial {
    long xexp = 0;
    long lexp = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sparse element of Q[x] with coefficients in Q[l, l^-1], the one ring every
// formula here lives in. Zero coefficients are never stored, so structural
// equality of the term maps is ring equality.
class RingElem {
public:
    RingElem() = default;
    RingElem(long c) : RingElem(Rational(c)) {}
    RingElem(const Rational& c);

    static RingElem monomial(long xexp, long lexp, const Rational& c = Rational(1));
    static RingElem x(long e = 1) { return monomial(e, 0); }
    static RingElem lambda(long e = 1) { return monomial(0, e); }

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const std::map<Monomial, Rational>& terms() const { return t_; }

    // -1 for the zero element, otherwise the largest x exponent present.
    long x_degree() const;
    // The l-part multiplying x^d, returned with xexp cleared to 0.
    RingElem x_coefficient(long d) const;
    bool has_negative_lexp() const;
    bool depends_on_x() const;
    // Constant-term view; requires the element to be a constant.
    Rational constant_value() const;

    RingElem& operator+=(const RingElem& o);
    RingElem& operator-=(const RingElem& o);
    RingElem& operator*=(const RingElem& o);
    RingElem operator-() const;
    RingElem pow(unsigned long e) const;

    // Substitute q for x (Horner over x degrees); l passes through.
    RingElem compose_x(const RingElem& q) const;
    // Substitute a rational for l, keeping x symbolic. ZeroLambda when
    // lv == 0 meets a negative l power.
    RingElem subst_lambda(const Rational& lv) const;
    // Full evaluation; same ZeroLambda rule.
    Rational eval_at(const Rational& x_val, const Rational& lambda_val) const;

    // Canonical text, terms sorted by descending (xexp, lexp),
    // e.g. "9*l^3 + 6*l^2 + 1".
    std::string text() const;

    friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
    friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
    friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }
    friend bool operator==(const RingElem&, const RingElem&) = default;

private:
    std::map<Monomial, Rational> t_;
    void add_term(const Monomial& m, const Rational& c);
};

// C(n, k) as an exact integer with C(n, k) = 0 whenever k < 0 or k > n.
// Several closed forms lean on the out-of-range zero to drop impossible
// index paths, so the convention is part of the contract.
mpz_class binomial(unsigned long n, long k);

} // namespace seqlab
