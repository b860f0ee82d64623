#include "seqlab/ring_elem.hpp"

#include "seqlab/errors.hpp"

#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace seqlab {

RingElem::RingElem(const Rational& c) {
    if (!c.is_zero()) t_.emplace(Monomial{0, 0}, c);
}

RingElem RingElem::monomial(long xexp, long lexp, const Rational& c) {
    if (xexp < 0) throw std::invalid_argument("RingElem: negative x exponent");
    RingElem r;
    if (!c.is_zero()) r.t_.emplace(Monomial{xexp, lexp}, c);
    return r;
}

void RingElem::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

long RingElem::x_degree() const {
    if (t_.empty()) return -1;
    return t_.rbegin()->first.xexp;
}

RingElem RingElem::x_coefficient(long d) const {
    RingElem r;
    for (auto it = t_.lower_bound(Monomial{d, std::numeric_limits<long>::min()});
         it != t_.end() && it->first.xexp == d; ++it)
        r.t_.emplace(Monomial{0, it->first.lexp}, it->second);
    return r;
}

bool RingElem::has_negative_lexp() const {
    for (const auto& [m, c] : t_)
        if (m.lexp < 0) return true;
    return false;
}

bool RingElem::depends_on_x() const {
    for (const auto& [m, c] : t_)
        if (m.xexp != 0) return true;
    return false;
}

Rational RingElem::constant_value() const {
    if (t_.empty()) return Rational(0);
    if (t_.size() == 1 && t_.begin()->first == Monomial{0, 0}) return t_.begin()->second;
    throw std::domain_error("RingElem: not a constant: " + text());
}

RingElem& RingElem::operator+=(const RingElem& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

RingElem& RingElem::operator*=(const RingElem& o) {
    std::map<Monomial, Rational> out;
    for (const auto& [ma, ca] : t_) {
        for (const auto& [mb, cb] : o.t_) {
            Monomial m{ma.xexp + mb.xexp, ma.lexp + mb.lexp};
            auto it = out.find(m);
            if (it == out.end()) {
                Rational c = ca * cb;
                if (!c.is_zero()) out.emplace(m, std::move(c));
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    t_ = std::move(out);
    return *this;
}

RingElem RingElem::operator-() const {
    RingElem r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

RingElem RingElem::pow(unsigned long e) const {
    RingElem acc(1);
    RingElem base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

RingElem RingElem::compose_x(const RingElem& q) const {
    long deg = x_degree();
    if (deg <= 0) return *this; // constant in x (or zero): nothing to substitute
    // Group into l-only slices by x degree, then run Horner downward.
    std::map<long, RingElem> slice;
    for (const auto& [m, c] : t_)
        slice[m.xexp] += RingElem::monomial(0, m.lexp, c);
    RingElem acc;
    for (long d = deg; d >= 0; --d) {
        if (d != deg) acc *= q;
        auto it = slice.find(d);
        if (it != slice.end()) acc += it->second;
    }
    return acc;
}

RingElem RingElem::subst_lambda(const Rational& lv) const {
    RingElem r;
    for (const auto& [m, c] : t_) {
        if (m.lexp < 0 && lv.is_zero())
            throw ZeroLambda("subst_lambda: lambda = 0 with negative lambda power");
        r += RingElem::monomial(m.xexp, 0, c * lv.pow(m.lexp));
    }
    return r;
}

Rational RingElem::eval_at(const Rational& x_val, const Rational& lambda_val) const {
    Rational acc(0);
    for (const auto& [m, c] : t_) {
        if (m.lexp < 0 && lambda_val.is_zero())
            throw ZeroLambda("eval_at: lambda = 0 with negative lambda power");
        acc += c * x_val.pow(m.xexp) * lambda_val.pow(m.lexp);
    }
    return acc;
}

std::string RingElem::text() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = c.abs();
        std::vector<std::string> parts;
        if (!(mag.is_one()) || (m.xexp == 0 && m.lexp == 0)) parts.push_back(mag.str());
        if (m.lexp != 0) parts.push_back(m.lexp == 1 ? "l" : "l^" + std::to_string(m.lexp));
        if (m.xexp != 0) parts.push_back(m.xexp == 1 ? "x" : "x^" + std::to_string(m.xexp));
        std::string body;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) body += "*";
            body += parts[i];
        }
        if (first) {
            out += (c.is_negative() ? "-" : "") + body;
            first = false;
        } else {
            out += (c.is_negative() ? " - " : " + ") + body;
        }
    }
    return out;
}

mpz_class binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

} // namespace seqlab
