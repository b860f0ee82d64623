#include "seqlab/linear_recurrences.hpp"

#include "seqlab/errors.hpp"

#include <string>

namespace seqlab {

namespace {

bool all_zero(const std::vector<RingElem>& v) {
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

const RingElem& seq_at(const std::vector<RingElem>& s, long n, long base, const char* name) {
    long idx = n - base;
    if (idx < 0 || static_cast<std::size_t>(idx) >= s.size())
        throw IndexOutOfRange(std::string(name) + " coefficient " + std::to_string(n) +
                              " not provided");
    return s[static_cast<std::size_t>(idx)];
}

int ceil_log2(std::uint64_t n) {
    int k = 0;
    while ((std::uint64_t{1} << k) < n) ++k;
    return k;
}

} // namespace

bool Order2Problem::homogeneous() const { return c.empty() || all_zero(c); }

const RingElem& Order2Problem::a_at(long n) const { return seq_at(a, n, 3, "a"); }
const RingElem& Order2Problem::b_at(long n) const { return seq_at(b, n, 3, "b"); }

RingElem Order2Problem::c_at(long n) const {
    if (c.empty()) return RingElem();
    return seq_at(c, n, 3, "c");
}

RingElem order2_oracle(const Order2Problem& p, long n) {
    if (n < 1) throw IndexOutOfRange("order2_oracle: n must be positive");
    if (n == 1) return p.x1;
    if (n == 2) return p.x2;
    RingElem prev2 = p.x1, prev1 = p.x2;
    for (long m = 3; m <= n; ++m) {
        RingElem cur = p.a_at(m) * prev1 + p.b_at(m) * prev2 + p.c_at(m);
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

RingElem order2_closed_fibword(const Order2Problem& p, long n) {
    if (n < 3) throw IndexOutOfRange("order2_closed_fibword: n must be at least 3");
    if (!p.homogeneous())
        throw HomogeneousOnly("order2_closed_fibword: nonzero c not covered");
    std::size_t fn = static_cast<std::size_t>(fib(static_cast<int>(n)));
    BitWord base = fib_word_prefix(fn);
    // Generalized words for k = 3 .. n+1, each read on the same f_n window.
    std::vector<BitWord> w;
    w.reserve(static_cast<std::size_t>(n - 1));
    for (long k = 3; k <= n + 1; ++k)
        w.push_back(fib_word_generalized(static_cast<int>(k), fn));
    auto wk = [&](long k) -> const BitWord& { return w[static_cast<std::size_t>(k - 3)]; };

    RingElem sum;
    for (std::size_t j = 1; j <= fn; ++j) {
        RingElem term = base.bits[j - 1] ? p.x1 : p.x2;
        for (long k = 3; k <= n; ++k) {
            int here = wk(k).bits[j - 1];
            if (here == 1)
                term *= p.b_at(k);
            else if (wk(k + 1).bits[j - 1] == 0)
                term *= p.a_at(k);
        }
        sum += term;
    }
    return sum;
}

int theta_with_cutoff(std::uint64_t n, int kmax) {
    if (n < 1) throw IndexOutOfRange("theta: n must be positive");
    for (int k = 0; k <= kmax; ++k) {
        std::uint64_t pow = std::uint64_t{1} << k;
        if (step(3 * pow, pow, n) == 1) return 0;
    }
    return 1;
}

int theta(std::uint64_t n) { return theta_with_cutoff(n, ceil_log2(n)); }

RingElem order2_closed_kron(const Order2Problem& p, long n) {
    if (n < 3) throw IndexOutOfRange("order2_closed_kron: n must be at least 3");
    if (n > 62) throw ResourceLimit("order2_closed_kron: window exceeds 64-bit indexing");
    if (!p.homogeneous())
        throw HomogeneousOnly("order2_closed_kron: nonzero c not covered");
    std::uint64_t lo = (std::uint64_t{1} << (n - 2)) + 1;
    std::uint64_t hi = std::uint64_t{1} << (n - 1);
    RingElem sum;
    for (std::uint64_t j = lo; j <= hi; ++j) {
        if (theta(hi - j + 1) != 1) continue;
        RingElem term = step(1, 1, j) == 1 ? p.x2 : p.x1;
        for (long k = 0; k <= n - 3; ++k) {
            std::uint64_t pow = std::uint64_t{1} << k;
            if (step(3 * pow, pow, j) == 1) term *= p.a_at(k + 3);
            if (step(pow, pow, j) == 0) term *= p.b_at(k + 3);
        }
        sum += term;
    }
    return sum;
}

std::int64_t kron_surviving_count(int n) {
    if (n < 3) throw IndexOutOfRange("kron_surviving_count: n must be at least 3");
    if (n > 40) throw ResourceLimit("kron_surviving_count: window too large");
    std::uint64_t window = std::uint64_t{1} << (n - 2);
    std::int64_t count = 0;
    for (std::uint64_t t = 1; t <= window; ++t) count += theta(t);
    return count;
}

RowVec affine_vector_oracle(const AffineVectorProblem& p, int n) {
    RowVec v = p.x1;
    for (int m = 2; m <= n; ++m) {
        std::size_t i = static_cast<std::size_t>(m - 2);
        if (i >= p.b.size() || i >= p.a.size() || i >= p.c.size())
            throw IndexOutOfRange("affine_vector_oracle: step " + std::to_string(m) +
                                  " not provided");
        v = add(hadamard(p.a[i], kron(p.b[i].row_vec(), v)), p.c[i]);
    }
    return v;
}

RowVec affine_vector_closed(const AffineVectorProblem& p, int n) {
    if (n < 2) throw IndexOutOfRange("affine_vector_closed: n must be at least 2");
    std::size_t steps = static_cast<std::size_t>(n - 1); // words b_2 .. b_n
    if (p.b.size() < steps || p.a.size() < steps || p.c.size() < steps)
        throw IndexOutOfRange("affine_vector_closed: sequences shorter than n");

    // Cumulative word products B[k] = b_n x ... x b_k, with B[n+1] = <1>.
    std::vector<RowVec> B(static_cast<std::size_t>(n) + 2);
    B[static_cast<std::size_t>(n) + 1] = RowVec{RingElem(1)};
    for (int k = n; k >= 2; --k)
        B[static_cast<std::size_t>(k)] =
            kron(B[static_cast<std::size_t>(k) + 1], p.b[static_cast<std::size_t>(k - 2)].row_vec());

    std::size_t full = B[2].size() * p.x1.size();
    auto a_of = [&](int k) -> const RowVec& { return p.a[static_cast<std::size_t>(k - 2)]; };
    auto c_of = [&](int k) -> const RowVec& { return p.c[static_cast<std::size_t>(k - 2)]; };

    // Suffix products of the lifted a-factors, built downward so each of the
    // n-1 summands is one Hadamard product instead of a fresh chain.
    std::vector<RowVec> suffix(static_cast<std::size_t>(n) + 2);
    suffix[static_cast<std::size_t>(n) + 1] = RowVec::ones(full);
    for (int k = n; k >= 2; --k) {
        RowVec lifted = kron(B[static_cast<std::size_t>(k) + 1], a_of(k));
        if (lifted.size() != full)
            throw DimensionMismatch("affine_vector_closed: |a_" + std::to_string(k) +
                                    "| inconsistent with the word lengths");
        suffix[static_cast<std::size_t>(k)] =
            hadamard(lifted, suffix[static_cast<std::size_t>(k) + 1]);
    }

    RowVec result = hadamard(kron(B[2], p.x1), suffix[2]);
    for (int i = 2; i <= n; ++i) {
        RowVec lifted = kron(B[static_cast<std::size_t>(i) + 1], c_of(i));
        if (lifted.size() != full)
            throw DimensionMismatch("affine_vector_closed: |c_" + std::to_string(i) +
                                    "| inconsistent with the word lengths");
        result = add(result, hadamard(lifted, suffix[static_cast<std::size_t>(i) + 1]));
    }
    return result;
}

RingElem order2_nonhom_closed(const Order2Problem& p, long n, bool printed_constant_index) {
    if (n < 3) throw IndexOutOfRange("order2_nonhom_closed: n must be at least 3");
    if (n > 20) throw ResourceLimit("order2_nonhom_closed: doubled window too large");

    // Cast the doubling construction as an affine vector recurrence and use
    // its closed form. Step m doubles the window and consumes the index
    // m+1 coefficients; the additive constant lands in the last slot.
    AffineVectorProblem q;
    q.x1 = RowVec{p.x1, p.x2};
    for (long m = 2; m <= n - 1; ++m) {
        std::size_t half = std::size_t{1} << (m - 1);
        q.b.push_back(BitWord::ones(2));
        RowVec h{RingElem(0), RingElem(1), p.b_at(m + 1), p.a_at(m + 1)};
        q.a.push_back(kron(h, RowVec::ones(half / 2)));
        RowVec cvec = RowVec::zeros(2 * half);
        // The published step index would want c_2 on the first doubling,
        // which no problem of this shape defines; read it as zero.
        if (printed_constant_index)
            cvec[2 * half - 1] = m == 2 ? RingElem() : p.c_at(m);
        else
            cvec[2 * half - 1] = p.c_at(m + 1);
        q.c.push_back(cvec);
    }
    RowVec r = n == 3 ? affine_vector_closed(q, 2) : affine_vector_closed(q, static_cast<int>(n - 1));
    std::size_t qtr = std::size_t{1} << (n - 2);
    return r.slice(qtr + 1, 2 * qtr).entry_sum();
}

bool FullHistoryProblem::homogeneous() const { return c.empty() || all_zero(c); }

const RingElem& FullHistoryProblem::a_at(int n, int j) const {
    if (n < 1 || static_cast<std::size_t>(n) > a.size() || j < 0 || j >= n ||
        static_cast<std::size_t>(j) >= a[static_cast<std::size_t>(n - 1)].size())
        throw IndexOutOfRange("full-history coefficient a_{" + std::to_string(n) + "," +
                              std::to_string(j) + "} not provided");
    return a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j)];
}

RingElem FullHistoryProblem::c_at(int n) const {
    if (c.empty()) return RingElem();
    if (n < 1 || static_cast<std::size_t>(n) > c.size())
        throw IndexOutOfRange("full-history constant c_" + std::to_string(n) + " not provided");
    return c[static_cast<std::size_t>(n - 1)];
}

std::vector<Chain> increasing_chains(int n) {
    if (n < 0 || n > 24) throw ResourceLimit("increasing_chains: n out of range");
    std::vector<Chain> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Chain ch;
        for (int v = 1; v <= n; ++v)
            if (mask & (std::uint64_t{1} << (v - 1))) ch.push_back(v);
        out.push_back(std::move(ch));
    }
    return out;
}

RingElem full_history_oracle(const FullHistoryProblem& p, int n) {
    if (n < 0) throw IndexOutOfRange("full_history_oracle: n must be nonnegative");
    std::vector<RingElem> w;
    w.reserve(static_cast<std::size_t>(n) + 1);
    w.push_back(p.w0);
    for (int m = 1; m <= n; ++m) {
        RingElem cur = p.c_at(m);
        for (int j = 0; j < m; ++j) cur += p.a_at(m, j) * w[static_cast<std::size_t>(j)];
        w.push_back(std::move(cur));
    }
    RingElem sum;
    for (const auto& e : w) sum += e;
    return sum;
}

RingElem full_history_chains(const FullHistoryProblem& p, int n) {
    if (n < 0) throw IndexOutOfRange("full_history_chains: n must be nonnegative");
    if (n > 24) throw ResourceLimit("full_history_chains: 2^n chains too many");
    if (!p.homogeneous())
        throw HomogeneousOnly("full_history_chains: nonzero c not covered");
    RingElem sum;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        RingElem term(1); // empty chain contributes 1
        int prev = 0;
        for (int v = 1; v <= n; ++v) {
            if (mask & (std::uint64_t{1} << (v - 1))) {
                term *= p.a_at(v, prev);
                prev = v;
            }
        }
        sum += term;
    }
    return p.w0 * sum;
}

RingElem full_history_nonhom_vector(const FullHistoryProblem& p, int n) {
    if (n < 0) throw IndexOutOfRange("full_history_nonhom_vector: n must be nonnegative");
    if (n > 20) throw ResourceLimit("full_history_nonhom_vector: vector of 2^n entries too large");
    if (n == 0) return p.w0;
    RowVec w{p.w0, p.c_at(1) + p.a_at(1, 0) * p.w0};
    for (int m = 2; m <= n; ++m) {
        // q_m carries a_{m,0} in slot 1 and a_{m,k} on the k-th doubling
        // block (entries 2^{k-1}+1 .. 2^k).
        std::vector<RingElem> q;
        q.reserve(std::size_t{1} << (m - 1));
        q.push_back(p.a_at(m, 0));
        for (int k = 1; k <= m - 1; ++k) {
            std::size_t block = std::size_t{1} << (k - 1);
            for (std::size_t r = 0; r < block; ++r) q.push_back(p.a_at(m, k));
        }
        w = concat(w, hadamard(w, RowVec(std::move(q))));
        w[w.size() - 1] += p.c_at(m);
    }
    return w.entry_sum();
}

} // namespace seqlab
