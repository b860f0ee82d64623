#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqlab/errors.hpp"
#include "seqlab/json_io.hpp"
#include "seqlab/suites.hpp"

#include <string>
#include <vector>

using namespace seqlab;
using nlohmann::json;

TEST_CASE("the mixer matches the published splitmix64 stream") {
    SplitMix64 g(0);
    CHECK(g.next() == 0xE220A8397B1DCDAFULL);
    CHECK(g.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(g.next() == 0x06C45D188009454FULL);
    SplitMix64 h(0);
    CHECK(h.next() == 0xE220A8397B1DCDAFULL);
    CHECK(h.bounded(10) < 10);
    long r = h.range(-3, 3);
    CHECK(r >= -3);
    CHECK(r <= 3);
}

TEST_CASE("case streams are reproducible and distinct") {
    CHECK(case_stream_seed(42, 0) == case_stream_seed(42, 0));
    CHECK(case_stream_seed(42, 0) != case_stream_seed(42, 1));
    CHECK(case_stream_seed(42, 5) != case_stream_seed(43, 5));

    Order2Problem a = random_order2(7, 6, true);
    Order2Problem b = random_order2(7, 6, true);
    CHECK(order2_instance_json(a) == order2_instance_json(b));
    FullHistoryProblem fa = random_full_history(9, 4, true);
    FullHistoryProblem fb = random_full_history(9, 4, true);
    CHECK(full_history_instance_json(fa) == full_history_instance_json(fb));
    AffineVectorProblem va = random_affine(11, 3, 3, 3);
    AffineVectorProblem vb = random_affine(11, 3, 3, 3);
    CHECK(affine_instance_json(va) == affine_instance_json(vb));
}

TEST_CASE("rational and ring values survive the json round trip") {
    Rational r(-22, 7);
    CHECK(rational_from_json(rational_to_json(r)) == r);
    CHECK(rational_to_json(Rational(4)).get<std::string>() == "4");
    CHECK(rational_to_json(Rational(3, 4)).get<std::string>() == "3/4");

    RingElem e = (RingElem::x() + RingElem::lambda(-1)).pow(2) -
                 RingElem(Rational(5, 3));
    CHECK(ring_from_json(ring_to_json(e)) == e);
    CHECK(ring_from_json(ring_to_json(RingElem())).is_zero());

    RowVec v{RingElem::x(3), RingElem(), RingElem::lambda(-2)};
    CHECK(rowvec_from_json(rowvec_to_json(v)) == v);
}

TEST_CASE("coefficient tables round trip through json and csv") {
    CoeffTable t = p_coeffs_recursion(3);
    CHECK(coeff_table_from_json(coeff_table_to_json(t)) == t);
    CHECK(coeff_table_from_csv(coeff_table_to_csv(t)) == t);

    KappaTable k = kappa_direct(3);
    CHECK(kappa_from_json(kappa_to_json(k)) == k);
    std::vector<KappaTable> rows = {kappa_direct(1), kappa_direct(2), k};
    CHECK(kappa_rows_from_csv(kappa_rows_to_csv(rows)) == rows);
}

TEST_CASE("csv quoting follows the usual rules") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("with,comma") == "\"with,comma\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_record({"a", "b,c"}) == "a,\"b,c\"\r\n");
    auto rows = csv_parse("a,\"b,c\"\r\n\"x\"\"y\",z\r\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"a", "b,c"});
    CHECK(rows[1] == std::vector<std::string>{"x\"y", "z"});
    CHECK_THROWS_AS(csv_parse("\"unterminated"), std::invalid_argument);
}

TEST_CASE("coefficient files reject incomplete input") {
    json j;
    j["x1"] = "1";
    j["x2"] = "2";
    j["a"] = {{"3", "1/2"}};
    j["b"] = {{"3", "2"}};
    Order2Problem p = order2_from_coeff_json(j, 3);
    CHECK(p.x2 == RingElem(2));
    CHECK(p.a_at(3) == RingElem(Rational(1, 2)));
    CHECK_THROWS_AS(order2_from_coeff_json(j, 4), std::invalid_argument);
    json missing;
    missing["x1"] = "1";
    CHECK_THROWS_AS(order2_from_coeff_json(missing, 3), std::invalid_argument);

    Order2Problem out = random_order2(5, 5, true);
    Order2Problem back = order2_from_coeff_json(order2_to_coeff_json(out), 5);
    CHECK(order2_instance_json(out) == order2_instance_json(back));
}

TEST_CASE("hypothesis report schema validation") {
    HypothesisReport rep = f_hypothesis_check(4);
    json good = hypothesis_to_json(rep);
    std::string why;
    CHECK(validate_hypothesis_json(good, &why));
    CHECK(why.empty());

    json bad = good;
    bad.erase("entries");
    CHECK_FALSE(validate_hypothesis_json(bad, &why));
    CHECK_FALSE(why.empty());

    bad = good;
    bad["entries"][0]["n"] = 7; // out of order
    CHECK_FALSE(validate_hypothesis_json(bad, nullptr));

    bad = good;
    bad["entries"][1]["holds"] = "yes"; // wrong type
    CHECK_FALSE(validate_hypothesis_json(bad, nullptr));
}

TEST_CASE("suites pass on reduced sizes and report their shape") {
    SuiteConfig cfg;
    cfg.suite = "thm1";
    cfg.n_max = 6;
    cfg.cases = 5;
    SuiteResult res = run_suite(cfg);
    CHECK(res.suite == "thm1");
    CHECK(res.cases == 4 * 5);
    CHECK(res.failed == 0);
    CHECK(res.passed == res.cases);
    CHECK(res.mismatches.empty());

    json j = suite_result_to_json(res);
    CHECK(j["suite"] == "thm1");
    CHECK(j["failed"] == 0);
    CHECK(j["mismatches"].is_array());
    CHECK(j["findings"].is_array());

    cfg.suite = "vectorlaws";
    cfg.n_max = 0;
    cfg.cases = 20;
    res = run_suite(cfg);
    CHECK(res.failed == 0);

    cfg.suite = "nope";
    CHECK_THROWS_AS(run_suite(cfg), UnknownSuite);
}

TEST_CASE("the published kernel variant is reported as a mismatch") {
    SuiteConfig cfg;
    cfg.suite = "thm4";
    cfg.n_max = 3;
    cfg.paper_verbatim = true;
    SuiteResult res = run_suite(cfg);
    CHECK(res.failed > 0);
    bool saw_n2 = false;
    for (const MismatchRecord& m : res.mismatches)
        if (m.n == 2 && m.instance.find("\"k\":1") != std::string::npos) saw_n2 = true;
    CHECK(saw_n2);

    cfg.paper_verbatim = false;
    res = run_suite(cfg);
    CHECK(res.failed == 0);
    REQUIRE(res.findings.size() == 1);
    CHECK(res.findings[0].id == "q-kernel-binomial");
}

TEST_CASE("suite results are stable across runs") {
    SuiteConfig cfg;
    cfg.suite = "lemma1";
    cfg.n_max = 4;
    cfg.cases = 10;
    std::string a = suite_result_to_json(run_suite(cfg)).dump(2);
    std::string b = suite_result_to_json(run_suite(cfg)).dump(2);
    CHECK(a == b);
    cfg.master_seed = 1234;
    std::string c = suite_result_to_json(run_suite(cfg)).dump(2);
    CHECK(c == c);
    SuiteResult res = run_suite(cfg);
    CHECK(res.failed == 0);
}

TEST_CASE("errata rendering includes every finding with its witness") {
    std::vector<Finding> fs = all_findings();
    CHECK(fs.size() == 7);
    std::string md = render_errata_markdown(fs);
    for (const Finding& f : fs) {
        CHECK(md.find(f.id) != std::string::npos);
        CHECK(md.find(f.evidence) != std::string::npos);
    }
    CHECK(md.rfind("# Errata", 0) == 0);
}
