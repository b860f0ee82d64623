#pragma once

#include "seqlab/ring_elem.hpp"
#include "seqlab/row_vec.hpp"
#include "seqlab/words.hpp"

#include <cstdint>
#include <vector>

namespace seqlab {

// Second-order recurrence x_n = a_n x_{n-1} + b_n x_{n-2} (+ c_n), with the
// coefficient sequences starting at index 3. An empty or all-zero c means
// the homogeneous case.
struct Order2Problem {
    RingElem x1, x2;
    std::vector<RingElem> a, b, c; // slot 0 holds the index-3 coefficient

    bool homogeneous() const;
    const RingElem& a_at(long n) const;
    const RingElem& b_at(long n) const;
    RingElem c_at(long n) const; // zero when c is absent

    friend bool operator==(const Order2Problem&, const Order2Problem&) = default;
};

// Direct iteration of the defining recurrence. Ground truth for every
// closed form below.
RingElem order2_oracle(const Order2Problem& p, long n);

// Fibonacci-word closed form, homogeneous case, n >= 3.
RingElem order2_closed_fibword(const Order2Problem& p, long n);

// Kronecker-window closed form, homogeneous case, n >= 3.
RingElem order2_closed_kron(const Order2Problem& p, long n);

// Survivor indicator for the Kronecker window: the product of
// (1 - step(3*2^k, 2^k, n)) over k. Factors with 3*2^k >= n are identically
// 1, so the product is cut at k = ceil(log2 n).
int theta(std::uint64_t n);
// Same product with an explicit cutoff; exists so tests can compare the
// analytic cutoff against a generous one.
int theta_with_cutoff(std::uint64_t n, int kmax);

// Number of surviving indices in the window for x_n. Coefficient-free, so a
// property of n alone.
std::int64_t kron_surviving_count(int n);

// Nonhomogeneous closed form, n >= 3: assembles the doubled-window vector
// through the affine closed form below (not by iterating) and reads off the
// window sum.
// printed_constant_index replays the published doubling step, which adds
// c at the step's own index; the reconciled construction adds the index
// that the freshly consumed a/b coefficients carry. The printed variant is
// kept only so the mismatch can be demonstrated.
RingElem order2_nonhom_closed(const Order2Problem& p, long n,
                              bool printed_constant_index = false);

// Vector recurrence v_n = a_n (b_n x v_{n-1}) + c_n with 0/1 words b_n.
// Step i >= 2 uses slot i-2 of each sequence.
struct AffineVectorProblem {
    RowVec x1;
    std::vector<BitWord> b;
    std::vector<RowVec> a, c;

    friend bool operator==(const AffineVectorProblem&, const AffineVectorProblem&) = default;
};

RowVec affine_vector_oracle(const AffineVectorProblem& p, int n);
RowVec affine_vector_closed(const AffineVectorProblem& p, int n); // n >= 2

// Full-history recurrence w_n = sum_{j<n} a_{n,j} w_j (+ c_n).
// a[n-1] lists a_{n,0} .. a_{n,n-1}; c[n-1] is c_n when present.
struct FullHistoryProblem {
    RingElem w0;
    std::vector<std::vector<RingElem>> a;
    std::vector<RingElem> c;

    bool homogeneous() const;
    const RingElem& a_at(int n, int j) const;
    RingElem c_at(int n) const;

    friend bool operator==(const FullHistoryProblem&, const FullHistoryProblem&) = default;
};

using Chain = std::vector<int>;

// All strictly increasing index chains in 1..n, empty chain first, in
// deterministic (bitmask) order. 2^n of them.
std::vector<Chain> increasing_chains(int n);

// Partial sum w_0 + ... + w_n by direct iteration.
RingElem full_history_oracle(const FullHistoryProblem& p, int n);

// Chain-sum closed form for the same partial sum, homogeneous case.
RingElem full_history_chains(const FullHistoryProblem& p, int n);

// Doubling-vector construction for the nonhomogeneous partial sum.
RingElem full_history_nonhom_vector(const FullHistoryProblem& p, int n);

} // namespace seqlab
