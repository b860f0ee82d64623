#include "seqlab/errors.hpp"
#include "seqlab/guards.hpp"
#include "seqlab/json_io.hpp"
#include "seqlab/linear_recurrences.hpp"
#include "seqlab/quadratic_map.hpp"
#include "seqlab/suites.hpp"
#include "seqlab/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

namespace {

using nlohmann::json;
using namespace seqlab;

// Exit contract: 0 all checks passed, 1 a verification assertion failed,
// 2 usage or resource trouble.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

Order2Problem order2_from_spec(const std::string& spec, int n) {
    if (spec == "gen:ones") {
        Order2Problem p;
        p.x1 = RingElem(1);
        p.x2 = RingElem(1);
        for (int k = 3; k <= n; ++k) {
            p.a.push_back(RingElem(1));
            p.b.push_back(RingElem(1));
        }
        return p;
    }
    if (spec == "gen:index") {
        Order2Problem p;
        p.x1 = RingElem(1);
        p.x2 = RingElem(1);
        for (int k = 3; k <= n; ++k) {
            p.a.push_back(RingElem(k));
            p.b.push_back(RingElem(k));
        }
        return p;
    }
    if (spec.rfind("gen:random:", 0) == 0) {
        std::uint64_t s = std::stoull(spec.substr(11));
        return random_order2(s, n, false);
    }
    if (spec.rfind("gen:", 0) == 0)
        throw std::invalid_argument("unknown generator '" + spec +
                                    "' (expected gen:ones, gen:index or gen:random:SEED)");
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open coefficient file: " + spec);
    json j = json::parse(in);
    return order2_from_coeff_json(j, n);
}

int cmd_eval_order2(const std::string& method, int n, const std::string& coeffs,
                    bool as_json) {
    Order2Problem p = order2_from_spec(coeffs, n);
    RingElem value;
    if (method == "oracle")
        value = order2_oracle(p, n);
    else if (method == "fibword")
        value = order2_closed_fibword(p, n);
    else if (method == "kron")
        value = order2_closed_kron(p, n);
    else if (method == "nonhom")
        value = order2_nonhom_closed(p, n);
    else
        throw std::invalid_argument("unknown method: " + method);
    if (as_json) {
        json out;
        out["method"] = method;
        out["n"] = n;
        out["value"] = value.text();
        out["coefficients"] = order2_to_coeff_json(p);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << value.text() << "\n";
    }
    return kExitPass;
}

int cmd_verify(const std::string& suite, int cases, int n_max, std::uint64_t seed,
               bool paper_verbatim, bool as_json) {
    std::vector<std::string> wanted;
    if (suite == "all")
        wanted = suite_names();
    else
        wanted.push_back(suite);

    json reports = json::array();
    int total_failed = 0;
    for (const std::string& name : wanted) {
        SuiteConfig cfg;
        cfg.suite = name;
        cfg.cases = cases;
        cfg.n_max = n_max;
        cfg.master_seed = seed;
        cfg.paper_verbatim = paper_verbatim;
        SuiteResult res = run_suite(cfg);
        total_failed += res.failed;
        if (as_json) {
            reports.push_back(suite_result_to_json(res));
        } else {
            std::cout << "suite " << res.suite << ": " << res.passed << "/" << res.cases
                      << " passed";
            if (res.failed) std::cout << ", " << res.failed << " FAILED";
            if (!res.findings.empty())
                std::cout << ", " << res.findings.size() << " finding"
                          << (res.findings.size() == 1 ? "" : "s");
            std::cout << "\n";
            for (const MismatchRecord& m : res.mismatches)
                std::cout << "  mismatch n=" << m.n << " expected " << m.expected << " got "
                          << m.actual << " [" << m.flags << "] instance " << m.instance
                          << "\n";
            for (const Finding& f : res.findings)
                std::cout << "  finding " << f.id << ": " << f.evidence << "\n";
        }
    }
    if (as_json) {
        if (wanted.size() == 1) {
            std::cout << reports[0].dump(2) << "\n";
        } else {
            json out;
            out["reports"] = std::move(reports);
            out["total_failed"] = total_failed;
            std::cout << out.dump(2) << "\n";
        }
    }
    return total_failed == 0 ? kExitPass : kExitFail;
}

int cmd_table_pcoeffs(int n, const std::string& format) {
    CoeffTable t = p_coeffs_recursion(n, QVariant::corrected, n > 12 ? n : 12);
    if (format == "csv")
        std::cout << coeff_table_to_csv(t);
    else
        std::cout << coeff_table_to_json(t).dump(2) << "\n";
    return kExitPass;
}

int cmd_table_kappa(int n, const std::string& source, const std::string& format) {
    KappaTable t;
    if (source == "direct")
        t = kappa_direct(n, n > 10 ? n : 10);
    else if (source == "recursion")
        t = kappa_recursion(n, n > 12 ? n : 12);
    else
        throw std::invalid_argument("unknown source: " + source);
    if (format == "csv")
        std::cout << kappa_rows_to_csv({t});
    else
        std::cout << kappa_to_json(t).dump(2) << "\n";
    return kExitPass;
}

int cmd_words(std::size_t len, int k, bool as_json) {
    BitWord w = k == 0 ? fib_word_prefix(len) : fib_word_generalized(k, len);
    if (as_json) {
        json out;
        out["len"] = len;
        if (k != 0) out["k"] = k;
        out["word"] = w.str01();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << w.str01() << "\n";
    }
    return kExitPass;
}

int cmd_reconcile_kappa(int n, bool as_json) {
    KappaReconcileReport rep = kappa_reconcile(n, default_kappa_candidates(),
                                               n > 10 ? n : 10);
    if (as_json) {
        std::cout << kappa_reconcile_to_json(rep).dump(2) << "\n";
        return kExitPass;
    }
    for (const KappaRowComparison& row : rep.rows) {
        std::cout << "n=" << row.n << " printed recursion "
                  << (row.agree ? "matches" : "first differs at k=" +
                                                  std::to_string(row.first_mismatch_k))
                  << "\n";
    }
    for (const KappaCandidateVerdict& v : rep.candidates) {
        std::cout << "candidate " << v.name << ": "
                  << (v.matches_all ? "matches every row"
                                    : "fails first at n=" + std::to_string(v.first_failure_n))
                  << "\n";
    }
    return kExitPass;
}

int cmd_reconcile_genpoly(int k, const std::string& ordering, bool as_json) {
    std::vector<QOrdering> ords;
    if (ordering == "kmajor")
        ords = {QOrdering::kmajor};
    else if (ordering == "transposed")
        ords = {QOrdering::transposed};
    else
        ords = {QOrdering::kmajor, QOrdering::transposed};
    json arr = json::array();
    for (QOrdering o : ords) {
        GenPolyReport rep = q_genpoly_compare(k, o, k > 4 ? k : 4);
        if (as_json) {
            arr.push_back(genpoly_to_json(rep));
        } else {
            std::cout << "k=" << rep.k << " ordering=" << ordering_name(rep.ordering) << ": "
                      << (rep.equal ? "formula matches the vector"
                                    : "difference " + rep.difference.text())
                      << "\n";
        }
    }
    if (as_json) std::cout << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    return kExitPass;
}

int cmd_reconcile_eq2(int level, bool as_json) {
    Eq2Report rep = s_closed_eq2_check(level, level > 5 ? level : 5);
    if (as_json) {
        std::cout << eq2_to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "level " << rep.level << ": sum matches the (level-1)-fold iterate: "
                  << (rep.matches_level_minus_one ? "yes" : "no")
                  << "; the level-fold iterate: " << (rep.matches_level ? "yes" : "no")
                  << "\n";
    }
    return kExitPass;
}

int cmd_hypothesis(int n_max, const std::string& lambda_text, bool as_json) {
    std::optional<Rational> lam;
    if (!lambda_text.empty()) lam = Rational::parse(lambda_text);
    HypothesisReport rep = f_hypothesis_check(n_max, lam, n_max > 12 ? n_max : 12);
    bool all_hold = true;
    for (const HypothesisEntry& e : rep.entries) all_hold = all_hold && e.holds;
    if (as_json) {
        std::cout << hypothesis_to_json(rep).dump(2) << "\n";
    } else {
        for (const HypothesisEntry& e : rep.entries)
            std::cout << "n=" << e.n << " " << e.rule << " : "
                      << (e.holds ? "holds" : "FAILS") << "\n";
    }
    return all_hold ? kExitPass : kExitFail;
}

int cmd_docs_errata(const std::string& out_path, bool as_json) {
    std::vector<Finding> findings = all_findings();
    std::string payload;
    if (as_json) {
        json arr = json::array();
        for (const Finding& f : findings) arr.push_back(finding_to_json(f));
        payload = arr.dump(2) + "\n";
    } else {
        payload = render_errata_markdown(findings);
    }
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << payload;
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact closed forms for recursively defined sequences, "
                 "with brute-force verification suites"};
    app.require_subcommand(1);

    std::uint64_t seed = 42;
    std::uint64_t guard = 0;
    bool as_json = false;
    app.add_option("--seed", seed, "master seed for the randomized suites");
    app.add_option("--guard-bytes", guard, "allocation guard in bytes (default 1 GiB)");
    app.add_flag("--json", as_json, "machine-readable JSON output");

    auto* eval = app.add_subcommand("eval", "evaluate one term of a recurrence");
    auto* order2 = eval->add_subcommand("order2", "two-term recurrence with coefficients");
    std::string method = "oracle";
    int eval_n = 0;
    std::string coeffs;
    order2->add_option("--method", method, "oracle, fibword, kron or nonhom")
        ->check(CLI::IsMember({"oracle", "fibword", "kron", "nonhom"}));
    order2->add_option("--n", eval_n, "index to evaluate")->required();
    order2
        ->add_option("--coeffs", coeffs,
                     "JSON file, or gen:ones / gen:index / gen:random:SEED")
        ->required();
    eval->require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int cases = 0, n_max = 0;
    bool paper_verbatim = false;
    verify->add_option("--suite", suite, "suite name, or 'all'")->required();
    verify->add_option("--cases", cases, "random cases per n (0 = suite default)");
    verify->add_option("--n-max", n_max, "largest index exercised (0 = suite default)");
    verify->add_flag("--paper-verbatim", paper_verbatim,
                     "use the published variant of reconciled statements");

    auto* table = app.add_subcommand("table", "print coefficient tables");
    auto* pcoeffs = table->add_subcommand("pcoeffs", "iterate coefficients of l*(x+1)*x");
    int table_n = 3;
    std::string format = "json";
    pcoeffs->add_option("--n", table_n, "iterate depth")->required();
    pcoeffs->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    auto* ktab = table->add_subcommand("kappa", "coefficient-count table");
    int kappa_n = 2;
    std::string source = "direct";
    std::string kformat = "csv";
    ktab->add_option("--n", kappa_n, "iterate depth")->required();
    ktab->add_option("--source", source, "direct or recursion")
        ->check(CLI::IsMember({"direct", "recursion"}));
    ktab->add_option("--format", kformat, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    table->require_subcommand(1);

    auto* words = app.add_subcommand("words", "binary cutting-sequence prefixes");
    std::size_t len = 0;
    int word_k = 0;
    words->add_option("--len", len, "prefix length")->required();
    words->add_option("--k", word_k, "generalized index (>= 3); omit for the base word");

    auto* reconcile =
        app.add_subcommand("reconcile", "compare printed statements against oracles");
    auto* rk = reconcile->add_subcommand("kappa", "count-table recursion candidates");
    int rk_n = 4;
    rk->add_option("--n", rk_n, "depth to compare through");
    auto* rg = reconcile->add_subcommand("genpoly", "generating-polynomial remark");
    int rg_k = 2;
    std::string ordering = "both";
    rg->add_option("--n", rg_k, "kernel index k");
    rg->add_option("--ordering", ordering, "kmajor, transposed or both")
        ->check(CLI::IsMember({"kmajor", "transposed", "both"}));
    auto* re2 = reconcile->add_subcommand("eq2", "iterate-offset convention");
    int re2_n = 3;
    re2->add_option("--n", re2_n, "level to test");
    reconcile->require_subcommand(1);

    auto* hypothesis = app.add_subcommand("hypothesis", "conjectured identities");
    auto* hf = hypothesis->add_subcommand("f", "closed form for the f-iterates");
    int hyp_n = 12;
    std::string lambda_text;
    hf->add_option("--n-max", hyp_n, "largest iterate checked");
    hf->add_option("--lambda", lambda_text, "optional rational specialization, e.g. 1/2");
    hypothesis->require_subcommand(1);

    auto* docs = app.add_subcommand("docs", "generated documentation");
    auto* errata = docs->add_subcommand("errata", "render the reconciliation notes");
    std::string out_path;
    errata->add_option("--out", out_path, "write to a file instead of stdout");
    docs->require_subcommand(1);

    // Global flags remain usable after a subcommand name.
    for (CLI::App* s : {eval, order2, verify, table, pcoeffs, ktab, words, reconcile, rk, rg,
                        re2, hypothesis, hf, docs, errata})
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (guard) set_guard_bytes(guard);

    try {
        if (*order2) return cmd_eval_order2(method, eval_n, coeffs, as_json);
        if (*verify) return cmd_verify(suite, cases, n_max, seed, paper_verbatim, as_json);
        if (*pcoeffs) return cmd_table_pcoeffs(table_n, format);
        if (*ktab) return cmd_table_kappa(kappa_n, source, kformat);
        if (*words) return cmd_words(len, word_k, as_json);
        if (*rk) return cmd_reconcile_kappa(rk_n, as_json);
        if (*rg) return cmd_reconcile_genpoly(rg_k, ordering, as_json);
        if (*re2) return cmd_reconcile_eq2(re2_n, as_json);
        if (*hf) return cmd_hypothesis(hyp_n, lambda_text, as_json);
        if (*errata) return cmd_docs_errata(out_path, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cerr << "error: no command selected\n";
    return kExitUsage;
}
