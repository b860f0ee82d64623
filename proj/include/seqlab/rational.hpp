#pragma once

#include <gmpxx.h>

#include <string>

namespace seqlab {

// Exact rational scalar on top of GMP. Kept canonical at all times (reduced,
// denominator positive), so operator== is plain value equality and the sign
// lives in the numerator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // implicit by design, mirrors integer literals
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const mpq_class& q);

    // Accepts "p" or "p/q" with optional sign, arbitrary precision.
    static Rational parse(const std::string& s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }

    // e may be negative; raising zero to a negative power is a domain error.
    Rational pow(long e) const;

    std::string str() const; // "p" or "p/q"

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
    mpq_class v_;
};

} // namespace seqlab
