#pragma once

#include "seqlab/linear_recurrences.hpp"
#include "seqlab/quadratic_map.hpp"
#include "seqlab/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace seqlab {

// Deterministic 64-bit generator (splitmix64 mixer). Chosen over the
// standard distributions because their output is not pinned across
// library implementations, and byte-identical reports are a contract.
struct SplitMix64 {
    std::uint64_t state = 0;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    std::uint64_t bounded(std::uint64_t n); // [0, n)
    long range(long lo, long hi);           // inclusive
};

// Seed for case #idx of a master-seeded stream; cases never share state.
std::uint64_t case_stream_seed(std::uint64_t master, std::uint64_t idx);

Rational random_rational(SplitMix64& g);         // num in [-9, 9], den in [1, 9]
Rational random_nonzero_rational(SplitMix64& g); // same but never 0

// Deterministic problem builders used by the randomized suites and by the
// gen:random coefficient source.
Order2Problem random_order2(std::uint64_t seed, long n_max, bool with_c);
FullHistoryProblem random_full_history(std::uint64_t seed, int n_max, bool with_c);
AffineVectorProblem random_affine(std::uint64_t seed, int n_steps, std::size_t max_word,
                                  std::size_t max_x1);

struct SuiteConfig {
    std::string suite;
    int n_max = 0; // 0 picks the suite default
    int cases = 0; // 0 picks the suite default
    std::uint64_t master_seed = 42;
    bool paper_verbatim = false;
};

struct MismatchRecord {
    std::string suite;
    std::string instance; // serialized instance, JSON text
    int n = 0;
    std::string expected; // reference value, canonical text
    std::string actual;   // value under test, canonical text
    std::string flags;    // convention switches in force
};

// A documented divergence between the published statement and what the
// oracles force, with the computed witness inline.
struct Finding {
    std::string id;
    std::string where;
    std::string printed;
    std::string corrected;
    std::string evidence;
};

struct SuiteResult {
    std::string suite;
    int cases = 0;
    int passed = 0;
    int failed = 0;
    std::vector<MismatchRecord> mismatches;
    std::vector<Finding> findings;
};

const std::vector<std::string>& suite_names();

// Runs one suite to completion. Exit-code mapping is the caller's: 0 when
// failed == 0, 1 otherwise; resource/usage problems surface as exceptions.
SuiteResult run_suite(const SuiteConfig& cfg);

nlohmann::json mismatch_to_json(const MismatchRecord& m);
nlohmann::json finding_to_json(const Finding& f);
nlohmann::json suite_result_to_json(const SuiteResult& r);

// Every reconciliation finding the library can demonstrate, recomputed
// from scratch; the input for the rendered errata document.
std::vector<Finding> all_findings();
std::string render_errata_markdown(const std::vector<Finding>& findings);

} // namespace seqlab
