#pragma once

#include "seqlab/row_vec.hpp"

#include <cstdint>

namespace seqlab {

// Fibonacci numbers with f_1 = f_2 = 1. Last index that fits a signed 64-bit
// value is 92; anything past that is a caller bug and throws.
std::int64_t fib(int n);

// Prefix of the infinite Fibonacci word 0,1,0,0,1,0,1,0,... (fixed point of
// the morphism 0 -> 01, 1 -> 0).
BitWord fib_word_prefix(std::size_t len);

// Prefix of the generalized word for k >= 3: every 0 of the Fibonacci word
// becomes f_{k-1} zeros and every 1 becomes f_{k-2} ones.
BitWord fib_word_generalized(int k, std::size_t len);

// j-th entry (1-based) of the endlessly repeated pattern of l zeros followed
// by m ones, computed from the ceiling identity
//   ceil((j+m)/(l+m)) - ceil(j/(l+m)).
// The pattern reading is cross-checked against a Kronecker construction by
// the property suites. l, m, j >= 1.
int step(std::uint64_t l, std::uint64_t m, std::uint64_t j);

} // namespace seqlab
