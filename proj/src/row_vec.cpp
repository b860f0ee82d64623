#include "seqlab/row_vec.hpp"

#include "seqlab/guards.hpp"

namespace seqlab {

const RingElem& RowVec::at1(std::size_t j) const {
    if (j < 1 || j > e_.size())
        throw IndexOutOfRange("RowVec::at1: index " + std::to_string(j) + " of length " +
                              std::to_string(e_.size()));
    return e_[j - 1];
}

RowVec RowVec::slice(std::size_t l, std::size_t m) const {
    if (l < 1 || m < l || m > e_.size())
        throw IndexOutOfRange("RowVec::slice: [" + std::to_string(l) + "," + std::to_string(m) +
                              "] of length " + std::to_string(e_.size()));
    return RowVec(std::vector<RingElem>(e_.begin() + static_cast<long>(l - 1),
                                        e_.begin() + static_cast<long>(m)));
}

RowVec RowVec::reversed() const {
    return RowVec(std::vector<RingElem>(e_.rbegin(), e_.rend()));
}

RingElem RowVec::weighted_sum(const RingElem& t) const {
    RingElem acc;
    RingElem tp(1);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) tp *= t;
        acc += e_[i] * tp;
    }
    return acc;
}

RingElem RowVec::entry_sum() const {
    RingElem acc;
    for (std::size_t i = 0; i < e_.size(); ++i) acc += e_[i];
    return acc;
}

RowVec concat(const RowVec& a, const RowVec& b) {
    std::vector<RingElem> out;
    out.reserve(a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) out.push_back(b[i]);
    return RowVec(std::move(out));
}

RowVec kron(const RowVec& a, const RowVec& b) {
    check_alloc(a.size() * b.size(), sizeof(RingElem), "kron");
    std::vector<RingElem> out;
    out.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out.push_back(a[i] * b[j]);
    return RowVec(std::move(out));
}

RowVec kron_pow(const RowVec& a, unsigned e) {
    RowVec acc{RingElem(1)};
    for (unsigned i = 0; i < e; ++i) acc = kron(acc, a);
    return acc;
}

RowVec hadamard(const RowVec& a, const RowVec& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("hadamard: lengths " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    std::vector<RingElem> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
    return RowVec(std::move(out));
}

RowVec add(const RowVec& a, const RowVec& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("add: lengths " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    std::vector<RingElem> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return RowVec(std::move(out));
}

RowVec scale(const RingElem& s, const RowVec& a) {
    std::vector<RingElem> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(s * a[i]);
    return RowVec(std::move(out));
}

RowVec cp(const RowVec& b, std::size_t k) {
    if (k < 1 || k > b.size())
        throw IndexOutOfRange("cp: position " + std::to_string(k) + " of length " +
                              std::to_string(b.size()));
    return concat(b, b.slice(k, b.size()));
}

bool weighted_sum_kron_identity_check(const RowVec& a, const RowVec& b, const RingElem& t) {
    RingElem lhs = kron(a, b).weighted_sum(t);
    RingElem rhs = a.weighted_sum(t.pow(b.size())) * b.weighted_sum(t);
    return lhs == rhs;
}

int BitWord::at1(std::size_t j) const {
    if (j < 1 || j > bits.size())
        throw IndexOutOfRange("BitWord::at1: index " + std::to_string(j) + " of length " +
                              std::to_string(bits.size()));
    return bits[j - 1];
}

std::string BitWord::str01() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

RowVec BitWord::row_vec() const {
    std::vector<RingElem> out;
    out.reserve(bits.size());
    for (auto b : bits) out.push_back(RingElem(b ? 1 : 0));
    return RowVec(std::move(out));
}

} // namespace seqlab
