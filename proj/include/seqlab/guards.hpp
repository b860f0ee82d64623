#pragma once

#include <cstddef>

namespace seqlab {

// Process-wide soft memory cap consulted before building large vectors.
// Exceeding it raises ResourceLimit instead of attempting the allocation.
void set_guard_bytes(std::size_t bytes);
std::size_t guard_bytes();

// Throws ResourceLimit when `count` entries of `per_entry` bytes would
// blow past the cap. `what` names the construction for the error text.
void check_alloc(std::size_t count, std::size_t per_entry, const char* what);

} // namespace seqlab
