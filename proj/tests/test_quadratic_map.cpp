#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqlab/errors.hpp"
#include "seqlab/quadratic_map.hpp"
#include "seqlab/row_vec.hpp"

#include <vector>

using namespace seqlab;

namespace {
RingElem L(long e) { return RingElem::lambda(e); }
RingElem Lc(long e, long c) { return RingElem::monomial(0, e, Rational(c)); }
} // namespace

TEST_CASE("block sizes and the digit-extraction index") {
    CHECK(omega64(0) == 1);
    CHECK(omega64(1) == 1);
    CHECK(omega64(2) == 2);
    CHECK(omega64(3) == 8);
    CHECK(omega64(4) == 64);
    CHECK(omega64(5) == 1024);
    CHECK(omega(6) == mpz_class(1) << 15);

    for (std::int64_t i = 0; i < 10; ++i) CHECK(mu_index(i, 0) == 1);
    // with block sizes 1 and 2 the j = 1 digit alternates 1, 2
    for (std::int64_t i = 0; i < 8; ++i) CHECK(mu_index(i, 1) == 1 + (i % 2));
    for (int j = 0; j <= 3; ++j)
        for (std::int64_t i = 0; i < omega64(j + 1); ++i) {
            std::int64_t v = mu_index(i, j);
            CHECK(v >= 1);
            CHECK(v <= (std::int64_t{1} << j));
        }
    CHECK(make_mu(3, 1).value == mu_index(3, 1));
}

TEST_CASE("iterate oracle composes the map") {
    CHECK(p_polynomial() == RingElem::monomial(2, 1) + RingElem::monomial(1, 1));
    RingElem p2 = p_iterate_oracle(2);
    RingElem expect = RingElem::monomial(4, 3) + RingElem::monomial(3, 3, Rational(2)) +
                      RingElem::monomial(2, 3) + RingElem::monomial(2, 2) +
                      RingElem::monomial(1, 2);
    CHECK(p2 == expect);
    CoeffTable t2 = coeff_table_of(p2, 2);
    REQUIRE(t2.g.size() == 4);
    CHECK(t2.g[0] == L(2));
    CHECK(t2.g[1] == L(3) + L(2));
    CHECK(t2.g[2] == Lc(3, 2));
    CHECK(t2.g[3] == L(3));
}

TEST_CASE("coefficient routes agree with the oracle") {
    for (int n = 1; n <= 4; ++n) {
        CoeffTable oracle = coeff_table_of(p_iterate_oracle(n), n);
        CHECK(p_coeffs_recursion(n) == oracle);
        CHECK(p_coeffs_closed(n) == oracle);
        CHECK(window_sums(p_vector(n), n) == oracle);
    }
    CoeffTable one = p_coeffs_closed(1);
    REQUIRE(one.g.size() == 2);
    CHECK(one.g[0] == L(1));
    CHECK(one.g[1] == L(1));
}

TEST_CASE("the printed recursion kernel is off at the first composite level") {
    CHECK(q_coeff(1, 1, QVariant::corrected) == L(1));
    CHECK(q_coeff(1, 2, QVariant::corrected).is_zero());
    CHECK(q_coeff(1, 2, QVariant::paper_verbatim) == L(2));
    CoeffTable verbatim = p_coeffs_recursion(2, QVariant::paper_verbatim);
    CoeffTable oracle = coeff_table_of(p_iterate_oracle(2), 2);
    CHECK(verbatim.g[0] == L(2) + L(3));
    CHECK(oracle.g[0] == L(2));
    CHECK(verbatim != oracle);
}

TEST_CASE("kernel and iterate vectors, frozen at depth two") {
    RowVec q2 = q_vector(2);
    RowVec q2_expect{L(1), RingElem(), L(1), L(2), RingElem(), Lc(2, 2), RingElem(), L(2)};
    CHECK(q2 == q2_expect);
    RowVec p2 = p_vector(2);
    RowVec p2_expect{L(2), RingElem(), L(2), L(3), RingElem(), Lc(3, 2), RingElem(), L(3)};
    CHECK(p2 == p2_expect);
}

TEST_CASE("generating polynomial remark holds only at the first kernel") {
    for (QOrdering o : {QOrdering::kmajor, QOrdering::transposed}) {
        GenPolyReport r1 = q_genpoly_compare(1, o);
        CHECK(r1.equal);
        CHECK(r1.difference.is_zero());
    }
    GenPolyReport r2 = q_genpoly_compare(2);
    CHECK_FALSE(r2.equal);
    CHECK_FALSE(r2.difference.is_zero());
    CHECK(r2.difference == r2.formula_side - r2.vector_side);
}

TEST_CASE("shifted-square vectors and their entry sums") {
    RingElem s = s_polynomial();
    CHECK(s == RingElem::monomial(2, 1) - L(1) + RingElem(1));
    CHECK(s_iterate(0) == RingElem::x());
    CHECK(s_iterate(2) == s.compose_x(s));

    SVector v1 = s_vector_direct(1);
    RowVec v1_expect{RingElem::x() - RingElem(1), RingElem(1)};
    CHECK(v1.entries == v1_expect);

    SVector v2 = s_vector_direct(2);
    RingElem xm1 = RingElem::x() - RingElem(1);
    RowVec v2_expect{L(1) * xm1 * xm1, L(1) * xm1, L(1) * xm1, RingElem(1)};
    CHECK(v2.entries == v2_expect);

    for (int level = 1; level <= 4; ++level)
        CHECK(s_vector_direct(level).entries.entry_sum() == s_iterate(level - 1));

    SVector v2r = s_vector_direct(2, Rational(1, 3));
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(v2r.entries[i] == v2_expect[i].subst_lambda(Rational(1, 3)));

    CHECK_THROWS_AS(s_vector_direct(7), ResourceLimit);
}

TEST_CASE("tail-marked vectors and the exponent formulas") {
    RowVec l1 = l_vector(1);
    RowVec l1_expect{RingElem(1), RingElem(1), RingElem(1), L(-1)};
    CHECK(l1 == l1_expect);
    RowVec l2 = l_vector(2);
    REQUIRE(l2.size() == 16);
    CHECK(l2.at1(1) == RingElem(1));
    CHECK(l2.at1(15) == RingElem(1));
    CHECK(l2.at1(16) == L(-1));

    CHECK(r_lambda(1) == l1);
    CHECK(r_lambda(2) == hadamard(kron_pow(l1, 2), l2));

    int r1_expect[4] = {0, 0, 0, 1};
    for (std::uint64_t j = 1; j <= 4; ++j)
        CHECK(r2log_exponent(j, 1) == r1_expect[j - 1]);
    RowVec r2 = r_lambda(2);
    for (std::uint64_t j = 1; j <= r2.size(); ++j)
        CHECK(r2.at1(j) == L(-r2log_exponent(j, 2)));

    CHECK(r_lambda_prefix(16) == r_lambda(2));
    CHECK(r_lambda_prefix(5) == r_lambda(2).slice(1, 5));
    for (std::uint64_t j = 1; j <= 16; ++j)
        CHECK(r2log_prefix_exponent(j) == r2log_exponent(j, 2));

    int h2_expect[4] = {2, 1, 1, 0};
    for (std::uint64_t j = 1; j <= 4; ++j) CHECK(h_exponent(j, 2) == h2_expect[j - 1]);
    RowVec pow3 = kron_pow(RowVec{RingElem(2), RingElem(1)}, 4);
    for (std::uint64_t j = 1; j <= pow3.size(); ++j)
        CHECK(pow3.at1(j) == RingElem(Rational(2).pow(h_exponent(j, 3))));

    int klog_expect[4] = {0, 1, 1, 2};
    for (std::uint64_t j = 1; j <= 4; ++j)
        CHECK(kron_log_exponent(j, 2, 2) == klog_expect[j - 1]);
}

TEST_CASE("factored forms of the iterate vectors") {
    CHECK(s_closed_eq1_check(2));
    CHECK(s_closed_eq1_check(3));
    Eq2Report rep = s_closed_eq2_check(2);
    CHECK(rep.matches_level_minus_one);
    CHECK_FALSE(rep.matches_level);
    CHECK(rep.sum == s_iterate(1));
}

TEST_CASE("coefficient-count tables") {
    CHECK(kappa_direct(1).counts == std::vector<mpz_class>{3, 1});
    CHECK(kappa_direct(2).counts == std::vector<mpz_class>{9, 6, 0, 1});
    CHECK(kappa_direct(3).counts ==
          std::vector<mpz_class>{81, 108, 36, 18, 12, 0, 0, 1});
    for (int n = 1; n <= 4; ++n) {
        KappaTable t = kappa_direct(n);
        mpz_class total = 0;
        for (const mpz_class& c : t.counts) total += c;
        mpz_class expect;
        mpz_ui_pow_ui(expect.get_mpz_t(), 2, 1u << n);
        CHECK(total == expect);
        mpz_ui_pow_ui(expect.get_mpz_t(), 3, 1u << (n - 1));
        CHECK(t.counts[0] == expect);
        CHECK(kappa_direct_vector(n).counts == t.counts);
    }
}

TEST_CASE("count-table recursion candidates") {
    CHECK(kappa_recursion(2).counts == std::vector<mpz_class>{9, 5, 2, 0});
    CHECK(kappa_recursion(2).counts != kappa_direct(2).counts);

    KappaReconcileReport rep = kappa_reconcile(4);
    bool saw_printed = false, saw_top = false, saw_kron = false;
    for (const KappaCandidateVerdict& v : rep.candidates) {
        if (v.name == "printed") {
            saw_printed = true;
            CHECK_FALSE(v.matches_all);
            CHECK(v.first_failure_n == 2);
        } else if (v.name == "top-shifted") {
            saw_top = true;
            CHECK_FALSE(v.matches_all);
            CHECK(v.first_failure_n == 3);
        } else if (v.name == "kron-derived") {
            saw_kron = true;
            CHECK(v.matches_all);
        }
    }
    CHECK(saw_printed);
    CHECK(saw_top);
    CHECK(saw_kron);

    for (const KappaCandidate& cand : default_kappa_candidates())
        if (cand.name == "kron-derived")
            for (int n = 1; n <= 4; ++n)
                CHECK(kappa_recursion_with(n, cand).counts == kappa_direct(n).counts);
}

TEST_CASE("conjectured closed form for the f-iterates") {
    CHECK(f_vector_poly(1) == RingElem::x());
    HypothesisReport rep = f_hypothesis_check(6);
    REQUIRE(rep.entries.size() == 6);
    CHECK(rep.entries[0].rule == "f_1(x) = x");
    CHECK(rep.entries[3].rule == "f_4(x) = f_2(s(x))");
    CHECK(rep.entries[4].rule == "f_5(x) = l*x*f_4(x)");
    for (const HypothesisEntry& e : rep.entries) CHECK(e.holds);

    HypothesisReport spec = f_hypothesis_check(6, Rational(3));
    for (const HypothesisEntry& e : spec.entries) CHECK(e.holds);
    CHECK_THROWS_AS(f_hypothesis_check(3, Rational(0)), ZeroLambda);
}

TEST_CASE("resource guards refuse runaway depths") {
    CHECK_THROWS_AS(p_coeffs_closed(7), ResourceLimit);
    CHECK_THROWS_AS(p_vector(9), ResourceLimit);
    CHECK_THROWS_AS(kappa_direct(40), ResourceLimit);
}
