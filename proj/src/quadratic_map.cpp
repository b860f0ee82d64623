#include "seqlab/quadratic_map.hpp"

#include "seqlab/errors.hpp"
#include "seqlab/guards.hpp"
#include "seqlab/words.hpp"

#include <bit>
#include <map>
#include <string>
#include <utility>

namespace seqlab {

namespace {

void require_guard(int value, int guard, const char* what) {
    if (value > guard)
        throw ResourceLimit(std::string(what) + ": " + std::to_string(value) +
                            " exceeds guard " + std::to_string(guard));
}

std::int64_t pow2_64(int e, const char* what) {
    if (e < 0 || e >= 63) throw ResourceLimit(std::string(what) + ": 2^" + std::to_string(e) +
                                              " does not fit the index type");
    return std::int64_t{1} << e;
}

} // namespace

mpz_class omega(int n) {
    if (n < 0) throw IndexOutOfRange("omega: n must be nonnegative");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(n) * (n - 1) / 2);
    return r;
}

std::int64_t omega64(int n) {
    if (n < 0) throw IndexOutOfRange("omega64: n must be nonnegative");
    long e = static_cast<long>(n) * (n - 1) / 2;
    return pow2_64(static_cast<int>(e), "omega64");
}

std::int64_t mu_index(std::int64_t i, int j) {
    if (i < 0 || j < 0) throw IndexOutOfRange("mu_index: arguments must be nonnegative");
    std::int64_t wj = omega64(j);
    std::int64_t wj1 = omega64(j + 1);
    std::int64_t num = 1 + i % wj1;
    return (num + wj - 1) / wj;
}

MuIndex make_mu(std::int64_t i, int j) { return MuIndex{i, j, mu_index(i, j)}; }

RingElem p_polynomial() {
    return RingElem::monomial(2, 1) + RingElem::monomial(1, 1);
}

RingElem p_iterate_oracle(int n, int guard) {
    if (n < 0) throw IndexOutOfRange("p_iterate_oracle: n must be nonnegative");
    require_guard(n, guard, "p_iterate_oracle");
    RingElem cur = RingElem::x();
    RingElem p = p_polynomial();
    for (int t = 0; t < n; ++t) cur = p.compose_x(cur);
    return cur;
}

CoeffTable coeff_table_of(const RingElem& poly, int n) {
    std::int64_t len = pow2_64(n, "coeff_table_of");
    if (!poly.x_coefficient(0).is_zero() || poly.x_degree() > len)
        throw std::invalid_argument("coeff_table_of: terms outside x^1 .. x^(2^n)");
    CoeffTable t;
    t.n = n;
    t.g.reserve(static_cast<std::size_t>(len));
    for (std::int64_t k = 1; k <= len; ++k) t.g.push_back(poly.x_coefficient(k));
    return t;
}

RingElem q_coeff(std::int64_t k, std::int64_t i, QVariant variant) {
    if (k < 1 || i < 1) throw IndexOutOfRange("q_coeff: indices start at 1");
    long second = variant == QVariant::corrected ? static_cast<long>(k - i)
                                                 : static_cast<long>(k - 1);
    mpz_class b = binomial(static_cast<unsigned long>(i), second);
    if (b == 0) return RingElem();
    return RingElem::monomial(0, static_cast<long>(i), Rational(b, mpz_class(1)));
}

CoeffTable p_coeffs_recursion(int n, QVariant variant, int guard) {
    if (n < 0) throw IndexOutOfRange("p_coeffs_recursion: n must be nonnegative");
    require_guard(n, guard, "p_coeffs_recursion");
    std::vector<RingElem> row{RingElem(1)};
    for (int t = 1; t <= n; ++t) {
        std::int64_t len = std::int64_t{1} << t;
        std::int64_t prev_len = static_cast<std::int64_t>(row.size());
        std::vector<RingElem> next(static_cast<std::size_t>(len));
        for (std::int64_t k = 1; k <= len; ++k) {
            // Stay on the indices where the binomial can be nonzero.
            std::int64_t lo = variant == QVariant::corrected ? (k + 1) / 2 : k - 1;
            if (lo < 1) lo = 1;
            std::int64_t hi = variant == QVariant::corrected ? k : prev_len;
            if (hi > prev_len) hi = prev_len;
            RingElem acc;
            for (std::int64_t i = lo; i <= hi; ++i)
                acc += q_coeff(k, i, variant) * row[static_cast<std::size_t>(i - 1)];
            next[static_cast<std::size_t>(k - 1)] = std::move(acc);
        }
        row = std::move(next);
    }
    return CoeffTable{n, std::move(row)};
}

CoeffTable p_coeffs_closed(int n, int guard) {
    if (n < 1) throw IndexOutOfRange("p_coeffs_closed: n must be positive");
    require_guard(n, guard, "p_coeffs_closed");
    std::int64_t w = omega64(n);
    std::int64_t len = std::int64_t{1} << n;
    CoeffTable t;
    t.n = n;
    t.g.reserve(static_cast<std::size_t>(len));
    for (std::int64_t k = 1; k <= len; ++k) {
        // Each i contributes a single l-monomial; gather them by exponent.
        std::map<long, mpz_class> acc;
        for (std::int64_t i = (k - 1) * w; i < k * w; ++i) {
            mpz_class coeff = 1;
            long lam = 0;
            std::int64_t mu_prev = mu_index(i, 0);
            bool dead = false;
            for (int j = 1; j <= n; ++j) {
                std::int64_t mu_j = mu_index(i, j);
                mpz_class b = binomial(static_cast<unsigned long>(mu_prev),
                                       static_cast<long>(mu_j - mu_prev));
                if (b == 0) {
                    dead = true;
                    break;
                }
                coeff *= b;
                lam += static_cast<long>(mu_prev);
                mu_prev = mu_j;
            }
            if (!dead) acc[lam] += coeff;
        }
        RingElem g;
        for (const auto& [lam, c] : acc)
            if (c != 0) g += RingElem::monomial(0, lam, Rational(c, mpz_class(1)));
        t.g.push_back(std::move(g));
    }
    return t;
}

CoeffTable window_sums(const RowVec& v, int n) {
    std::int64_t w = omega64(n);
    std::int64_t len = std::int64_t{1} << n;
    if (v.size() != static_cast<std::size_t>(w * len))
        throw DimensionMismatch("window_sums: vector length is not 2^n * omega(n)");
    CoeffTable t;
    t.n = n;
    for (std::int64_t k = 1; k <= len; ++k)
        t.g.push_back(v.slice(static_cast<std::size_t>((k - 1) * w + 1),
                              static_cast<std::size_t>(k * w))
                          .entry_sum());
    return t;
}

RowVec q_vector(int k, int guard, QVariant variant) {
    if (k < 1) throw IndexOutOfRange("q_vector: k must be positive");
    require_guard(k, guard, "q_vector");
    std::int64_t blocks = std::int64_t{1} << k;
    std::int64_t block_len = std::int64_t{1} << (k - 1);
    check_alloc(static_cast<std::size_t>(blocks * block_len), sizeof(RingElem), "q_vector");
    std::vector<RingElem> out;
    out.reserve(static_cast<std::size_t>(blocks * block_len));
    for (std::int64_t K = 1; K <= blocks; ++K)
        for (std::int64_t i = 1; i <= block_len; ++i) out.push_back(q_coeff(K, i, variant));
    return RowVec(std::move(out));
}

RowVec p_vector(int n, int guard) {
    if (n < 1) throw IndexOutOfRange("p_vector: n must be positive");
    require_guard(n, guard, "p_vector");
    RowVec p = q_vector(1);
    for (int t = 2; t <= n; ++t)
        p = hadamard(kron(RowVec::ones(std::size_t{1} << t), p),
                     kron(q_vector(t, guard < t ? t : guard),
                          RowVec::ones(static_cast<std::size_t>(omega64(t - 1)))));
    return p;
}

std::string ordering_name(QOrdering o) {
    return o == QOrdering::kmajor ? "kmajor" : "transposed";
}

GenPolyReport q_genpoly_compare(int k, QOrdering ordering, int guard) {
    if (k < 1) throw IndexOutOfRange("q_genpoly_compare: k must be positive");
    require_guard(k, guard, "q_genpoly_compare");
    std::int64_t m = std::int64_t{1} << (k - 1);

    RowVec vec;
    if (ordering == QOrdering::kmajor) {
        vec = q_vector(k);
    } else {
        std::vector<RingElem> out;
        out.reserve(std::size_t{1} << (2 * k - 1));
        for (std::int64_t i = 1; i <= m; ++i)
            for (std::int64_t K = 1; K <= (std::int64_t{1} << k); ++K)
                out.push_back(q_coeff(K, i));
        vec = RowVec(std::move(out));
    }

    RingElem t = RingElem::x();
    RingElem lam = RingElem::lambda();
    RingElem base = lam * t.pow(static_cast<unsigned long>(m)) +
                    lam * t.pow(static_cast<unsigned long>(2 * m + 1));
    RingElem geom;
    RingElem run(1);
    for (std::int64_t r = 0; r < m; ++r) {
        geom += run;
        run *= base;
    }
    RingElem formula = lam * (RingElem(1) + t.pow(static_cast<unsigned long>(m))) * geom;

    GenPolyReport rep;
    rep.k = k;
    rep.ordering = ordering;
    rep.formula_side = formula;
    rep.vector_side = vec.weighted_sum(t);
    rep.difference = rep.formula_side - rep.vector_side;
    rep.equal = rep.difference.is_zero();
    return rep;
}

RingElem s_polynomial() {
    return RingElem::monomial(2, 1) - RingElem::lambda() + RingElem(1);
}

RingElem s_iterate(int t, int guard) {
    if (t < 0) throw IndexOutOfRange("s_iterate: t must be nonnegative");
    require_guard(t, guard, "s_iterate");
    RingElem cur = RingElem::x();
    RingElem s = s_polynomial();
    for (int i = 0; i < t; ++i) cur = s.compose_x(cur);
    return cur;
}

SVector s_vector_direct(int level, const std::optional<Rational>& lambda_value, int guard) {
    if (level < 1) throw IndexOutOfRange("s_vector_direct: level must be positive");
    require_guard(level, guard, "s_vector_direct");
    RingElem lam = lambda_value ? RingElem(*lambda_value) : RingElem::lambda();
    RowVec e{RingElem::x() - RingElem(1), RingElem(1)};
    for (int t = 2; t <= level; ++t) {
        e = scale(lam, kron(e, e));
        e[e.size() - 1] -= lam - RingElem(1);
    }
    return SVector{level, std::move(e)};
}

RowVec l_vector(int n, int guard) {
    if (n < 1) throw IndexOutOfRange("l_vector: n must be positive");
    require_guard(n, guard, "l_vector");
    std::size_t len = std::size_t{1} << (std::size_t{1} << n);
    check_alloc(len, sizeof(RingElem), "l_vector");
    std::vector<RingElem> out(len, RingElem(1));
    out[len - 1] = RingElem::lambda(-1);
    return RowVec(std::move(out));
}

RowVec r_lambda(int n, int guard) {
    if (n < 1) throw IndexOutOfRange("r_lambda: n must be positive");
    require_guard(n, guard, "r_lambda");
    std::size_t len = std::size_t{1} << (std::size_t{1} << n);
    RowVec r = RowVec::ones(len);
    for (int i = 1; i <= n; ++i)
        r = hadamard(r, kron_pow(l_vector(i, guard), 1u << (n - i)));
    return r;
}

int r2log_prefix_exponent(std::uint64_t j) {
    if (j < 1) throw IndexOutOfRange("r2log_prefix_exponent: j starts at 1");
    int total = 0;
    for (int i = 1; i <= 6; ++i) {
        int bits = 1 << i;
        if (bits >= 64) break;
        unsigned __int128 m = static_cast<unsigned __int128>(1) << bits;
        // The k = 0 pattern's first 1 sits at position m; once that is past
        // j, every remaining factor reads 0 at j.
        if (m - 1 >= j) break;
        unsigned __int128 mk = 1;
        while (true) {
            unsigned __int128 l = mk * (m - 1);
            if (l >= j) break;
            total += step(static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(mk), j);
            mk *= m;
        }
    }
    return total;
}

int r2log_exponent(std::uint64_t j, int n) {
    if (n < 0) throw IndexOutOfRange("r2log_exponent: n must be nonnegative");
    if (j < 1) throw IndexOutOfRange("r2log_exponent: j starts at 1");
    if (n < 6) {
        std::uint64_t len = std::uint64_t{1} << (std::uint64_t{1} << n);
        if (j > len) throw IndexOutOfRange("r2log_exponent: j beyond the vector length");
    }
    return r2log_prefix_exponent(j);
}

RowVec r_lambda_prefix(std::size_t len) {
    check_alloc(len, sizeof(RingElem), "r_lambda_prefix");
    std::vector<RingElem> out;
    out.reserve(len);
    for (std::size_t j = 1; j <= len; ++j)
        out.push_back(RingElem::lambda(-r2log_prefix_exponent(j)));
    return RowVec(std::move(out));
}

int h_exponent(std::uint64_t j, int n) {
    if (n < 1 || n > 20) throw IndexOutOfRange("h_exponent: n out of range");
    if (j < 1) throw IndexOutOfRange("h_exponent: j starts at 1");
    int half = n - 1;
    if (half < 6) {
        std::uint64_t len = std::uint64_t{1} << (std::uint64_t{1} << half);
        if (j > len) throw IndexOutOfRange("h_exponent: j beyond the vector length");
    }
    return (1 << half) - std::popcount(j - 1);
}

int kron_log_exponent(std::uint64_t j, std::uint64_t m, int n) {
    if (m < 2) throw IndexOutOfRange("kron_log_exponent: base length must be at least 2");
    if (n < 0) throw IndexOutOfRange("kron_log_exponent: n must be nonnegative");
    if (j < 1) throw IndexOutOfRange("kron_log_exponent: j starts at 1");
    int total = 0;
    unsigned __int128 mk = 1;
    for (int k = 0; k < n; ++k) {
        unsigned __int128 l = mk * (m - 1);
        if (l < j)
            total += step(static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(mk), j);
        mk *= m;
    }
    return total;
}

bool s_closed_eq1_check(int level, int guard) {
    if (level < 2) throw IndexOutOfRange("s_closed_eq1_check: level must be at least 2");
    require_guard(level, guard, "s_closed_eq1_check");
    RowVec direct = s_vector_direct(level, std::nullopt, guard).entries;
    RowVec prev = s_vector_direct(level - 1, std::nullopt, guard).entries;
    RingElem lam = RingElem::lambda();
    int half = level - 1;

    RowVec e1 = hadamard(scale(lam, kron(prev, prev)), l_vector(half));

    RowVec base = kron_pow(RowVec{RingElem::x() - RingElem(1), RingElem(1)},
                           1u << half); // 2^{level-1} factors
    RingElem pre = RingElem::lambda((1L << half) - 1);
    RowVec e2 = hadamard(scale(pre, base), r_lambda(half));
    RowVec e3 = hadamard(scale(pre, base), r_lambda_prefix(base.size()));

    return e1 == direct && e2 == direct && e3 == direct;
}

Eq2Report s_closed_eq2_check(int level, int guard) {
    if (level < 1) throw IndexOutOfRange("s_closed_eq2_check: level must be positive");
    require_guard(level, guard, "s_closed_eq2_check");
    int half = level - 1;
    std::uint64_t len = std::uint64_t{1} << (std::uint64_t{1} << half);

    std::vector<RingElem> xm1_pow(static_cast<std::size_t>(1 << half) + 1);
    RingElem xm1 = RingElem::x() - RingElem(1);
    xm1_pow[0] = RingElem(1);
    for (std::size_t e = 1; e < xm1_pow.size(); ++e) xm1_pow[e] = xm1_pow[e - 1] * xm1;

    RingElem sum;
    for (std::uint64_t j = 1; j <= len; ++j) {
        int h = h_exponent(j, level);
        int r = r2log_exponent(j, half);
        sum += xm1_pow[static_cast<std::size_t>(h)] * RingElem::lambda(-r);
    }
    sum *= RingElem::lambda((1L << half) - 1);

    Eq2Report rep;
    rep.level = level;
    rep.sum = sum;
    rep.matches_level_minus_one = sum == s_iterate(level - 1);
    rep.matches_level = sum == s_iterate(level);
    return rep;
}

namespace {

KappaTable counts_from_lambda_poly(const RingElem& v, int n, const char* what) {
    std::int64_t len = std::int64_t{1} << n;
    std::vector<mpz_class> counts(static_cast<std::size_t>(len), mpz_class(0));
    for (const auto& [mono, coeff] : v.terms()) {
        if (mono.xexp != 0)
            throw std::invalid_argument(std::string(what) + ": unexpected x term");
        std::int64_t k = (len - 1) - mono.lexp;
        if (k < 0 || k >= len)
            throw std::invalid_argument(std::string(what) + ": exponent outside the window");
        if (coeff.den() != 1)
            throw std::invalid_argument(std::string(what) + ": non-integer count");
        counts[static_cast<std::size_t>(k)] = coeff.num();
    }
    return KappaTable{n, std::move(counts), "direct"};
}

} // namespace

KappaTable kappa_direct(int n, int guard) {
    if (n < 1) throw IndexOutOfRange("kappa_direct: n must be positive");
    require_guard(n, guard, "kappa_direct");
    RingElem v(2);
    RingElem lam = RingElem::lambda();
    for (int t = 0; t < n; ++t) v = lam * (v * v - RingElem(1)) + RingElem(1);
    return counts_from_lambda_poly(v, n, "kappa_direct");
}

KappaTable kappa_direct_vector(int n, int guard) {
    if (n < 1) throw IndexOutOfRange("kappa_direct_vector: n must be positive");
    require_guard(n, guard, "kappa_direct_vector");
    RowVec r = r_lambda(n, guard);
    std::vector<mpz_class> counts(std::size_t{1} << n, mpz_class(0));
    for (std::size_t idx = 0; idx < r.size(); ++idx) {
        const RingElem& e = r[idx];
        if (e.term_count() != 1)
            throw std::invalid_argument("kappa_direct_vector: entry is not a monomial");
        long k = -e.terms().begin()->first.lexp;
        counts.at(static_cast<std::size_t>(k)) += 1;
    }
    return KappaTable{n, std::move(counts), "direct"};
}

KappaTable kappa_recursion_with(int n, const KappaCandidate& candidate, int guard) {
    if (n < 1) throw IndexOutOfRange("kappa_recursion: n must be positive");
    require_guard(n, guard, "kappa_recursion");
    std::vector<mpz_class> row{mpz_class(3), mpz_class(1)};
    for (int t = 2; t <= n; ++t) {
        std::size_t len = std::size_t{1} << t;
        std::vector<mpz_class> next(len, mpz_class(0));
        for (std::size_t a = 0; a < row.size(); ++a)
            for (std::size_t b = 0; b < row.size(); ++b) next[a + b] += row[a] * row[b];
        for (const DeltaTerm& d : candidate.deltas) {
            if (t + d.shift < 0) continue;
            long pos = (1L << (t + d.shift)) + d.offset;
            if (pos >= 0 && pos < static_cast<long>(len))
                next[static_cast<std::size_t>(pos)] += d.sign;
        }
        row = std::move(next);
    }
    return KappaTable{n, std::move(row), "recursion"};
}

std::vector<KappaCandidate> default_kappa_candidates() {
    return {
        KappaCandidate{"printed", {{+1, -1, 0}, {-1, -2, 0}}},
        KappaCandidate{"top-shifted", {{+1, 0, -1}, {-1, -1, 0}}},
        KappaCandidate{"kron-derived", {{+1, 0, -1}, {-1, 0, -2}}},
    };
}

KappaTable kappa_recursion(int n, int guard) {
    return kappa_recursion_with(n, default_kappa_candidates()[0], guard);
}

KappaReconcileReport kappa_reconcile(int n_max, const std::vector<KappaCandidate>& candidates,
                                     int guard) {
    if (n_max < 1) throw IndexOutOfRange("kappa_reconcile: n_max must be positive");
    require_guard(n_max, guard, "kappa_reconcile");

    KappaReconcileReport rep;
    rep.n_max = n_max;
    std::vector<KappaTable> direct;
    for (int n = 1; n <= n_max; ++n) {
        direct.push_back(kappa_direct(n, guard));
        KappaRowComparison row;
        row.n = n;
        row.direct = direct.back();
        row.printed = kappa_recursion(n);
        row.agree = row.printed.counts == row.direct.counts;
        if (!row.agree)
            for (std::size_t k = 0; k < row.direct.counts.size(); ++k)
                if (row.printed.counts[k] != row.direct.counts[k]) {
                    row.first_mismatch_k = static_cast<long>(k);
                    break;
                }
        rep.rows.push_back(std::move(row));
    }

    for (const KappaCandidate& cand : candidates) {
        KappaCandidateVerdict v;
        v.name = cand.name;
        v.matches_all = true;
        for (int n = 1; n <= n_max; ++n) {
            if (kappa_recursion_with(n, cand).counts !=
                direct[static_cast<std::size_t>(n - 1)].counts) {
                v.matches_all = false;
                v.first_failure_n = n;
                break;
            }
        }
        rep.candidates.push_back(std::move(v));
    }
    return rep;
}

RingElem f_vector_poly(int n, const std::optional<Rational>& lambda_value, int guard) {
    if (n < 1) throw IndexOutOfRange("f_vector_poly: n must be positive");
    require_guard(n, guard, "f_vector_poly");
    if (lambda_value && lambda_value->is_zero())
        throw ZeroLambda("f_vector_poly: the construction divides by the parameter");

    std::vector<RingElem> xm1_pow(static_cast<std::size_t>(n) + 1);
    RingElem xm1 = RingElem::x() - RingElem(1);
    xm1_pow[0] = RingElem(1);
    for (std::size_t e = 1; e < xm1_pow.size(); ++e) xm1_pow[e] = xm1_pow[e - 1] * xm1;

    RingElem sum;
    std::uint64_t len = std::uint64_t{1} << n;
    for (std::uint64_t j = 1; j <= len; ++j) {
        int e = n - std::popcount(j - 1);
        long net = static_cast<long>(n - 1) - r2log_prefix_exponent(j);
        RingElem lam_part = lambda_value ? RingElem(lambda_value->pow(net))
                                         : RingElem::lambda(net);
        sum += xm1_pow[static_cast<std::size_t>(e)] * lam_part;
    }
    return sum;
}

HypothesisReport f_hypothesis_check(int n_max, const std::optional<Rational>& lambda_value,
                                    int guard) {
    if (n_max < 1) throw IndexOutOfRange("f_hypothesis_check: n_max must be positive");
    require_guard(n_max, guard, "f_hypothesis_check");

    HypothesisReport rep;
    rep.n_max = n_max;
    rep.lambda_value = lambda_value;

    RingElem s = s_polynomial();
    RingElem lam = RingElem::lambda();
    if (lambda_value) {
        s = s.subst_lambda(*lambda_value);
        lam = RingElem(*lambda_value);
    }

    std::vector<RingElem> f(static_cast<std::size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n)
        f[static_cast<std::size_t>(n)] = f_vector_poly(n, lambda_value, guard);

    for (int n = 1; n <= n_max; ++n) {
        HypothesisEntry e;
        e.n = n;
        if (n == 1) {
            e.rule = "f_1(x) = x";
            e.holds = f[1] == RingElem::x();
        } else if (n % 2 == 0) {
            e.rule = "f_" + std::to_string(n) + "(x) = f_" + std::to_string(n / 2) + "(s(x))";
            e.holds = f[static_cast<std::size_t>(n)] ==
                      f[static_cast<std::size_t>(n / 2)].compose_x(s);
        } else {
            e.rule = "f_" + std::to_string(n) + "(x) = l*x*f_" + std::to_string(n - 1) + "(x)";
            e.holds = f[static_cast<std::size_t>(n)] ==
                      lam * RingElem::x() * f[static_cast<std::size_t>(n - 1)];
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

} // namespace seqlab
