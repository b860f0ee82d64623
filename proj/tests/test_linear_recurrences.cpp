#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqlab/errors.hpp"
#include "seqlab/linear_recurrences.hpp"
#include "seqlab/suites.hpp"
#include "seqlab/words.hpp"

using namespace seqlab;

namespace {
Order2Problem unit_problem(int n) {
    Order2Problem p;
    p.x1 = RingElem(1);
    p.x2 = RingElem(1);
    for (int k = 3; k <= n; ++k) {
        p.a.push_back(RingElem(1));
        p.b.push_back(RingElem(1));
    }
    return p;
}
} // namespace

TEST_CASE("the oracle walks the two-term recurrence") {
    Order2Problem p;
    p.x1 = RingElem(1);
    p.x2 = RingElem(2);
    p.a = {RingElem(3), RingElem(5)};
    p.b = {RingElem(4), RingElem(6)};
    CHECK(order2_oracle(p, 1) == RingElem(1));
    CHECK(order2_oracle(p, 2) == RingElem(2));
    CHECK(order2_oracle(p, 3) == RingElem(10)); // 3*2 + 4*1
    CHECK(order2_oracle(p, 4) == RingElem(62)); // 5*10 + 6*2
    CHECK(order2_closed_fibword(p, 4) == RingElem(62));
    CHECK(order2_closed_kron(p, 4) == RingElem(62));
}

TEST_CASE("unit coefficients reproduce the fibonacci numbers") {
    for (int n = 3; n <= 15; ++n) {
        Order2Problem p = unit_problem(n);
        RingElem expect(fib(n));
        CHECK(order2_oracle(p, n) == expect);
        CHECK(order2_closed_fibword(p, n) == expect);
        CHECK(order2_closed_kron(p, n) == expect);
    }
}

TEST_CASE("one symbolic step keeps coefficients on the right terms") {
    Order2Problem p;
    p.x1 = RingElem::x();
    p.x2 = RingElem::x(2);
    p.a = {RingElem::lambda()};
    p.b = {RingElem::lambda(2)};
    RingElem expect = RingElem::lambda() * RingElem::x(2) +
                      RingElem::lambda(2) * RingElem::x();
    CHECK(order2_oracle(p, 3) == expect);
    CHECK(order2_closed_fibword(p, 3) == expect);
    CHECK(order2_closed_kron(p, 3) == expect);
}

TEST_CASE("homogeneous closed forms refuse constants") {
    Order2Problem p = unit_problem(4);
    p.c = {RingElem(1), RingElem(0)};
    CHECK_THROWS_AS(order2_closed_fibword(p, 4), HomogeneousOnly);
    CHECK_THROWS_AS(order2_closed_kron(p, 4), HomogeneousOnly);
    p.c = {RingElem(0), RingElem(0)}; // explicit zeros are fine
    CHECK(order2_closed_fibword(p, 4) == RingElem(fib(4)));
}

TEST_CASE("surviving window indices are counted by fibonacci numbers") {
    for (int n = 3; n <= 12; ++n) CHECK(kron_surviving_count(n) == fib(n));
}

TEST_CASE("the index filter is cutoff independent") {
    for (std::uint64_t t = 1; t <= 256; ++t) CHECK(theta(t) == theta_with_cutoff(t, 40));
}

TEST_CASE("nonhomogeneous doubling, corrected and printed constant index") {
    Order2Problem p = unit_problem(4);
    p.c = {RingElem(1), RingElem(2)};
    CHECK(order2_oracle(p, 4) == RingElem(6)); // x_3 = 3, x_4 = 3 + 1 + 2
    CHECK(order2_nonhom_closed(p, 4) == RingElem(6));
    CHECK(order2_nonhom_closed(p, 4, true) == RingElem(4)); // published index lags
    p.c.clear();
    CHECK(order2_nonhom_closed(p, 4) == order2_closed_fibword(p, 4));
}

TEST_CASE("affine doubling closed form, one explicit step") {
    AffineVectorProblem p;
    p.x1 = RowVec{RingElem(1), RingElem(2)};
    p.b = {BitWord(std::vector<std::uint8_t>{1, 0})};
    p.a = {RowVec{RingElem(3), RingElem(4), RingElem(5), RingElem(6)}};
    p.c = {RowVec{RingElem(7), RingElem(8), RingElem(9), RingElem(10)}};
    RowVec expect{RingElem(10), RingElem(16), RingElem(9), RingElem(10)};
    CHECK(affine_vector_oracle(p, 2) == expect);
    CHECK(affine_vector_closed(p, 2) == expect);
}

TEST_CASE("affine closed form agrees with iteration on random instances") {
    for (int c = 0; c < 20; ++c) {
        AffineVectorProblem p = random_affine(case_stream_seed(99, c), 4, 3, 2);
        CHECK(affine_vector_oracle(p, 4) == affine_vector_closed(p, 4));
    }
}

TEST_CASE("running totals from chain enumeration") {
    FullHistoryProblem p;
    p.w0 = RingElem(2);
    p.a = {{RingElem(3)}, {RingElem(4), RingElem(5)}};
    // w_1 = 6, w_2 = 8 + 30 = 38, total 46
    CHECK(full_history_oracle(p, 2) == RingElem(46));
    CHECK(full_history_chains(p, 2) == RingElem(46));
    CHECK(full_history_nonhom_vector(p, 2) == RingElem(46));
    CHECK(full_history_oracle(p, 0) == RingElem(2));
    CHECK(full_history_chains(p, 0) == RingElem(2));

    auto chains = increasing_chains(2);
    REQUIRE(chains.size() == 4);
    CHECK(chains[0].empty());
    CHECK(increasing_chains(1).size() == 2);
    CHECK(increasing_chains(0).size() == 1);
}

TEST_CASE("history recurrences with constants") {
    FullHistoryProblem p;
    p.w0 = RingElem(2);
    p.a = {{RingElem(3)}, {RingElem(4), RingElem(5)}};
    p.c = {RingElem(1), RingElem(10)};
    // w_1 = 6 + 1 = 7, w_2 = 8 + 35 + 10 = 53, total 62
    CHECK(full_history_oracle(p, 2) == RingElem(62));
    CHECK(full_history_nonhom_vector(p, 2) == RingElem(62));
    CHECK_THROWS_AS(full_history_chains(p, 2), HomogeneousOnly);
}

TEST_CASE("doubling vector matches the oracle on random history instances") {
    for (int c = 0; c < 20; ++c) {
        FullHistoryProblem p = random_full_history(case_stream_seed(123, c), 6, true);
        CHECK(full_history_oracle(p, 6) == full_history_nonhom_vector(p, 6));
    }
    for (int c = 0; c < 20; ++c) {
        FullHistoryProblem p = random_full_history(case_stream_seed(321, c), 6, false);
        CHECK(full_history_oracle(p, 6) == full_history_chains(p, 6));
    }
}
