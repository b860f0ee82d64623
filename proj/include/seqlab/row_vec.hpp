#pragma once

#include "seqlab/errors.hpp"
#include "seqlab/ring_elem.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace seqlab {

// Row vector over the coefficient ring. The calculus is 1-based because the
// formulas are; at1() is the formula-facing accessor, operator[] the plain
// 0-based one.
class RowVec {
public:
    RowVec() = default;
    explicit RowVec(std::vector<RingElem> e) : e_(std::move(e)) {}
    RowVec(std::initializer_list<RingElem> e) : e_(e) {}

    static RowVec ones(std::size_t m) { return RowVec(std::vector<RingElem>(m, RingElem(1))); }
    static RowVec zeros(std::size_t m) { return RowVec(std::vector<RingElem>(m)); }

    std::size_t size() const { return e_.size(); }
    bool empty() const { return e_.empty(); }
    const RingElem& at1(std::size_t j) const;
    const RingElem& operator[](std::size_t i) const { return e_[i]; }
    RingElem& operator[](std::size_t i) { return e_[i]; }

    // Inclusive 1-based slice, 1 <= l <= m <= size.
    RowVec slice(std::size_t l, std::size_t m) const;
    RowVec reversed() const;

    RingElem weighted_sum(const RingElem& t) const; // sum of e_j * t^(j-1)
    RingElem entry_sum() const;                     // weighted_sum at t = 1

    friend bool operator==(const RowVec&, const RowVec&) = default;

private:
    std::vector<RingElem> e_;
};

RowVec concat(const RowVec& a, const RowVec& b);
// (a x b) has a_i * b_j at position (i-1)|b| + j.
RowVec kron(const RowVec& a, const RowVec& b);
// n-fold Kronecker self-product; the empty product is <1>.
RowVec kron_pow(const RowVec& a, unsigned e);
RowVec hadamard(const RowVec& a, const RowVec& b);
RowVec add(const RowVec& a, const RowVec& b);
RowVec scale(const RingElem& s, const RowVec& a);
// b extended by its own suffix starting at position k, 1 <= k <= |b|.
RowVec cp(const RowVec& b, std::size_t k);

// Whether |a x b|_t == |a|_{t^{|b|}} * |b|_t. Holds identically; exposed as a
// checkable so the property suites can exercise it on arbitrary inputs.
bool weighted_sum_kron_identity_check(const RowVec& a, const RowVec& b, const RingElem& t);

// 0/1 word. Doubles as a combinatorial object (Fibonacci words) and as a
// selector in the affine vector recurrence.
struct BitWord {
    std::vector<std::uint8_t> bits;

    BitWord() = default;
    explicit BitWord(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

    static BitWord ones(std::size_t m) { return BitWord(std::vector<std::uint8_t>(m, 1)); }
    static BitWord zeros(std::size_t m) { return BitWord(std::vector<std::uint8_t>(m, 0)); }

    std::size_t size() const { return bits.size(); }
    int at1(std::size_t j) const;
    std::string str01() const;
    RowVec row_vec() const;

    friend bool operator==(const BitWord&, const BitWord&) = default;
};

} // namespace seqlab
