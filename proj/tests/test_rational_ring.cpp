#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqlab/errors.hpp"
#include "seqlab/rational.hpp"
#include "seqlab/ring_elem.hpp"

#include <stdexcept>

using namespace seqlab;

TEST_CASE("rationals normalize on construction and parse") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(5, -10).str() == "-1/2");
    CHECK(Rational(8).str() == "8");
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("seven"), std::invalid_argument);
}

TEST_CASE("rational arithmetic stays exact") {
    Rational a(3, 4), b(-2, 3);
    CHECK((a + b) == Rational(1, 12));
    CHECK((a - b) == Rational(17, 12));
    CHECK((a * b) == Rational(-1, 2));
    CHECK((a / b) == Rational(-9, 8));
    CHECK(-a == Rational(-3, 4));
    CHECK(a.pow(3) == Rational(27, 64));
    CHECK(b.pow(-2) == Rational(9, 4));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(Rational(-5, 7).abs() == Rational(5, 7));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2).is_negative());
    CHECK(Rational(0).is_zero());
    CHECK(Rational(9, 9).is_one());
}

TEST_CASE("ring elements collect like terms and drop zeros") {
    RingElem p = RingElem::x() + RingElem::lambda();
    RingElem sq = p * p;
    RingElem expect =
        RingElem::x(2) + RingElem::monomial(1, 1, Rational(2)) + RingElem::lambda(2);
    CHECK(sq == expect);
    CHECK(sq.text() == "x^2 + 2*l*x + l^2");
    CHECK((sq - sq).is_zero());
    CHECK((sq - sq).term_count() == 0);
    CHECK(sq.x_degree() == 2);
    CHECK(RingElem().x_degree() == -1);
    CHECK(RingElem().text() == "0");
    CHECK(sq.x_coefficient(1) == RingElem::monomial(0, 1, Rational(2)));
    CHECK(sq.x_coefficient(7).is_zero());
}

TEST_CASE("negative exponents of the unit and substitution") {
    RingElem e = RingElem::lambda(-2) + RingElem::x();
    CHECK(e.has_negative_lexp());
    CHECK(e.depends_on_x());
    CHECK_FALSE(RingElem::lambda(3).depends_on_x());
    CHECK(e.subst_lambda(Rational(1, 2)) == RingElem::x() + RingElem(4));
    CHECK_THROWS_AS(e.subst_lambda(Rational(0)), ZeroLambda);
    CHECK(e.eval_at(Rational(3), Rational(1, 2)) == Rational(7));
    CHECK(RingElem(5).constant_value() == Rational(5));
}

TEST_CASE("composition in the sequence variable") {
    RingElem p = RingElem::x(2) * RingElem::lambda();
    RingElem q = RingElem::x() + RingElem(1);
    RingElem composed = p.compose_x(q); // l*(x+1)^2
    RingElem expect = RingElem::monomial(2, 1) + RingElem::monomial(1, 1, Rational(2)) +
                      RingElem::lambda();
    CHECK(composed == expect);
    RingElem lam_x = RingElem::lambda() * RingElem::x();
    CHECK(lam_x.pow(3) == RingElem::monomial(3, 3));
    CHECK(lam_x.pow(0) == RingElem(1));
}

TEST_CASE("binomial coefficients, including out-of-range arguments") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(3, 7) == 0);
    CHECK(binomial(40, 20) == mpz_class("137846528820"));
}
