#include "seqlab/words.hpp"

#include "seqlab/errors.hpp"

#include <stdexcept>

namespace seqlab {

std::int64_t fib(int n) {
    if (n < 1 || n > 92) throw std::invalid_argument("fib: index out of supported range");
    std::int64_t a = 1, b = 1; // f_1, f_2
    for (int i = 3; i <= n; ++i) {
        std::int64_t c = a + b;
        a = b;
        b = c;
    }
    return b;
}

BitWord fib_word_prefix(std::size_t len) {
    std::vector<std::uint8_t> w{0};
    while (w.size() < len) {
        // One morphism pass: 0 -> 01, 1 -> 0. Each pass grows the word by a
        // Fibonacci factor, so a handful of passes always suffices.
        std::vector<std::uint8_t> next;
        next.reserve(w.size() * 2);
        for (auto b : w) {
            if (b == 0) {
                next.push_back(0);
                next.push_back(1);
            } else {
                next.push_back(0);
            }
        }
        w = std::move(next);
    }
    w.resize(len);
    return BitWord(std::move(w));
}

BitWord fib_word_generalized(int k, std::size_t len) {
    if (k < 3) throw std::invalid_argument("fib_word_generalized: k must be at least 3");
    std::int64_t zero_run = fib(k - 1);
    std::int64_t one_run = fib(k - 2);
    std::vector<std::uint8_t> out;
    out.reserve(len);
    // Enough source letters: each contributes at least min(zero_run, one_run)
    // >= 1 output letters, so len source letters always cover len outputs.
    BitWord source = fib_word_prefix(len);
    for (std::size_t i = 0; i < source.size() && out.size() < len; ++i) {
        std::int64_t run = source.bits[i] == 0 ? zero_run : one_run;
        for (std::int64_t r = 0; r < run && out.size() < len; ++r)
            out.push_back(source.bits[i]);
    }
    out.resize(len);
    return BitWord(std::move(out));
}

int step(std::uint64_t l, std::uint64_t m, std::uint64_t j) {
    if (l < 1 || m < 1 || j < 1) throw std::invalid_argument("step: arguments must be positive");
    std::uint64_t p = l + m;
    auto ceil_div = [](std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; };
    return static_cast<int>(ceil_div(j + m, p) - ceil_div(j, p));
}

} // namespace seqlab
