#pragma once

#include <stdexcept>

namespace seqlab {

// Hadamard products and entrywise sums require equal lengths.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// 1-based access or slicing outside a vector.
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Evaluation at lambda = 0 of an element carrying negative lambda powers.
struct ZeroLambda : std::domain_error {
    using std::domain_error::domain_error;
};

// A closed form that only covers c == 0 was handed a nonhomogeneous instance.
struct HomogeneousOnly : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A requested size exceeds the explicit guard for the operation. Guards fail
// fast with this error instead of attempting huge allocations.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace seqlab
